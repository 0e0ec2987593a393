#include "lcl/roi.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <istream>
#include <sstream>

#include "lcl/digital.hpp"

namespace lcl {

std::size_t Mask::roi_count() const {
  std::size_t n = 0;
  for (int v : values)
    if (v > threshold) ++n;
  return n;
}

namespace {

// next header token, skipping whitespace and '#' comments
std::string pgm_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  if (tok.empty()) throw Error(Errc::TruncatedData, "header ended early");
  return tok;
}

int pgm_int(std::istream& in, const char* what) {
  std::string tok = pgm_token(in);
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::BadFormat, std::string("bad ") + what + ": " + tok);
  }
}

}  // namespace

Mask read_pgm(std::istream& in) {
  std::string magic = pgm_token(in);
  if (magic != "P2" && magic != "P5")
    throw Error(Errc::BadMagic, "expected P2 or P5, got " + magic);

  Mask m;
  m.width = pgm_int(in, "width");
  m.height = pgm_int(in, "height");
  m.maxval = pgm_int(in, "maxval");
  if (m.width < 1 || m.height < 1 || m.maxval < 1 || m.maxval > 65535)
    throw Error(Errc::ValueOutOfRange, "bad dimensions or maxval");
  m.threshold = m.maxval / 2;

  const std::size_t count = static_cast<std::size_t>(m.width) * m.height;
  m.values.reserve(count);

  if (magic == "P2") {
    for (std::size_t i = 0; i < count; ++i) {
      int v;
      if (!(in >> v)) throw Error(Errc::TruncatedData, "pixel data ended early");
      if (v < 0 || v > m.maxval)
        throw Error(Errc::ValueOutOfRange, "pixel " + std::to_string(v));
      m.values.push_back(v);
    }
  } else {
    // single whitespace byte separates header from raster
    const int bytes = m.maxval > 255 ? 2 : 1;
    for (std::size_t i = 0; i < count; ++i) {
      int v = in.get();
      if (v == EOF) throw Error(Errc::TruncatedData, "pixel data ended early");
      if (bytes == 2) {
        int lo = in.get();
        if (lo == EOF) throw Error(Errc::TruncatedData, "pixel data ended early");
        v = (v << 8) | lo;
      }
      if (v > m.maxval)
        throw Error(Errc::ValueOutOfRange, "pixel " + std::to_string(v));
      m.values.push_back(v);
    }
  }
  return m;
}

Mask read_pgm_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::TruncatedData, "cannot open " + path);
  return read_pgm(f);
}

std::vector<int> chessboard_distance(const Mask& m) {
  const int w = m.width, h = m.height;
  const int inf = INT_MAX / 2;
  std::vector<int> d(static_cast<std::size_t>(w) * h, inf);
  auto at = [&](int x, int y) -> int& { return d[static_cast<std::size_t>(y) * w + x]; };

  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (m.in_roi(x, y)) at(x, y) = 0;

  // two-pass chamfer; exact for the chessboard metric
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int best = at(x, y);
      if (x > 0) best = std::min(best, at(x - 1, y) + 1);
      if (y > 0) {
        best = std::min(best, at(x, y - 1) + 1);
        if (x > 0) best = std::min(best, at(x - 1, y - 1) + 1);
        if (x + 1 < w) best = std::min(best, at(x + 1, y - 1) + 1);
      }
      at(x, y) = best;
    }
  }
  for (int y = h - 1; y >= 0; --y) {
    for (int x = w - 1; x >= 0; --x) {
      int best = at(x, y);
      if (x + 1 < w) best = std::min(best, at(x + 1, y) + 1);
      if (y + 1 < h) {
        best = std::min(best, at(x, y + 1) + 1);
        if (x + 1 < w) best = std::min(best, at(x + 1, y + 1) + 1);
        if (x > 0) best = std::min(best, at(x - 1, y + 1) + 1);
      }
      at(x, y) = best;
    }
  }
  return d;
}

DensityField mask_to_density(const Mask& m, int levels, int base_size,
                             int ratio, int halo) {
  if (levels < 1 || halo < 1 || ratio < 2 || base_size < 2)
    throw Error(Errc::TooSmall, "bad density parameters");
  DensityField d = uniform_density(m.width, m.height, base_size, ratio, 0);
  if (d.size_at_level(levels - 1) < 2)
    throw Error(Errc::DensityTooFine, "base_size/ratio^(levels-1) below 2");

  std::vector<int> dist = chessboard_distance(m);
  for (std::size_t i = 0; i < d.level.size(); ++i) {
    if (dist[i] >= INT_MAX / 2) continue;  // no ROI anywhere
    int lvl = (levels - 1) - dist[i] / halo;
    d.level[i] = static_cast<std::uint8_t>(std::max(0, lvl));
  }
  return d;
}

PipelineResult discretize(const Mask& m, const PipelineParams& p) {
  Mask mask = m;
  if (p.threshold >= 0) mask.threshold = p.threshold;

  PipelineResult r;
  DensityField field =
      mask_to_density(mask, p.levels, p.base_size, p.ratio, p.halo);
  r.tiling = gen_graded_brick(field);
  r.lcl = check_lcl_2d(r.tiling.complex, r.tiling.faces);
  r.model = intersection_graph(r.tiling.complex, r.tiling.faces);

  std::set<Id> interior = interior_faces(r.tiling.complex);
  r.manifold_ok = is_digital_2_manifold(r.model, interior);
  if (r.manifold_ok && !interior.empty())
    r.type_report = manifold_type(r.model, interior);

  r.stats.tile_count = r.tiling.faces.size();
  r.stats.min_tile_width = LLONG_MAX;
  r.stats.max_tile_width = 0;
  for (Id f : r.tiling.faces) {
    long long lo = LLONG_MAX, hi = LLONG_MIN;
    for (Id v : r.tiling.complex.face_vertices(f)) {
      long long x = r.tiling.complex.vertices.at(v).x;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    r.stats.min_tile_width = std::min(r.stats.min_tile_width, hi - lo);
    r.stats.max_tile_width = std::max(r.stats.max_tile_width, hi - lo);
    ++r.stats.per_level[r.tiling.face_level.at(f)];
  }

  if (!r.lcl.pass() || !r.manifold_ok)
    throw Error(Errc::PipelineInvariantBroken,
                "graded grid failed validation: lcl=" +
                    std::string(r.lcl.pass() ? "ok" : "fail") +
                    " manifold=" + (r.manifold_ok ? "ok" : "fail"));
  return r;
}

}  // namespace lcl
