#include "lcl/generators.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lcl {

namespace {

// Incremental complex assembly: vertices and edges are created on first use,
// faces are given as vertex loops.
struct ComplexBuilder {
  std::map<Id, Vec2> vertices;
  std::map<Id, EdgeDef> edges;
  std::map<Id, std::vector<EdgeRef>> faces;
  std::map<std::pair<Id, Id>, Id> edge_lookup;
  Id next_edge = 0;

  void vertex(Id id, Vec2 p) { vertices.try_emplace(id, p); }

  Id edge_between(Id a, Id b) {
    auto key = std::minmax(a, b);
    auto it = edge_lookup.find(key);
    if (it != edge_lookup.end()) return it->second;
    Id id = next_edge++;
    edges[id] = {a, b, {}};
    edge_lookup[key] = id;
    return id;
  }

  void face(Id id, const std::vector<Id>& loop) {
    std::vector<EdgeRef> walk;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      Id a = loop[i];
      Id b = loop[(i + 1) % loop.size()];
      Id e = edge_between(a, b);
      walk.push_back({e, edges[e].a != a});
    }
    faces[id] = std::move(walk);
  }

  Tiling2 build(bool torus) {
    Tiling2 t;
    t.complex = build_complex(std::move(vertices), std::move(edges),
                              std::move(faces), torus);
    for (const auto& [fid, _] : t.complex.faces) {
      t.faces.insert(fid);
      t.face_level[fid] = 0;
    }
    return t;
  }
};

// Offset rows of width-2 bricks over a unit lattice; shared combinatorics of
// the brick and hexagonal families. `hex_coords` switches the rendering.
Tiling2 offset_row_tiling(int cols, int rows, bool torus, bool hex_coords) {
  if (cols < 1 || rows < 1)
    throw Error(Errc::TooSmall, "need cols, rows >= 1");
  if (torus && (cols < 3 || rows < 3))
    throw Error(Errc::TooSmall, "torus mode needs cols, rows >= 3");

  ComplexBuilder b;
  const int w = 2 * cols;

  auto coord = [&](int x, int y) -> Vec2 {
    if (!hex_coords) return {x, y};
    // pointy hexagons: the cut tips of row y sit one unit above the
    // pass-through vertices on the same line
    int disp = ((x % 2) + 2) % 2 == y % 2 ? 1 : 0;
    return {2LL * x, 3LL * y + disp};
  };

  if (torus) {
    const int twist = rows % 2;  // keeps cut offsets alternating across the seam
    auto vid = [&](int x, int y) {
      return ((y % rows) * w) + (((x % w) + w) % w);
    };
    for (int y = 0; y < rows; ++y)
      for (int x = 0; x < w; ++x) b.vertex(vid(x, y), coord(x, y));
    for (int y = 0; y < rows; ++y) {
      int shift = y == rows - 1 ? twist : 0;
      auto top = [&](int x) { return vid(x + shift, y + 1 == rows ? 0 : y + 1); };
      for (int i = 0; i < cols; ++i) {
        int x0 = (y % 2) + 2 * i;
        b.face(y * cols + i,
               {vid(x0, y), vid(x0 + 1, y), vid(x0 + 2, y), top(x0 + 2),
                top(x0 + 1), top(x0)});
      }
    }
  } else {
    auto vid = [&](int x, int y) { return y * (w + 1) + x; };
    for (int y = 0; y <= rows; ++y)
      for (int x = 0; x <= w; ++x) b.vertex(vid(x, y), coord(x, y));
    Id fid = 0;
    for (int y = 0; y < rows; ++y) {
      std::vector<std::pair<int, int>> spans;
      if (y % 2 == 0) {
        for (int i = 0; i < cols; ++i) spans.emplace_back(2 * i, 2 * i + 2);
      } else {
        spans.emplace_back(0, 1);
        for (int i = 0; i + 1 < cols; ++i) spans.emplace_back(2 * i + 1, 2 * i + 3);
        spans.emplace_back(w - 1, w);
      }
      for (auto [xa, xb] : spans) {
        std::vector<Id> loop;
        for (int x = xa; x <= xb; ++x) loop.push_back(vid(x, y));
        for (int x = xb; x >= xa; --x) loop.push_back(vid(x, y + 1));
        b.face(fid++, loop);
      }
    }
  }
  return b.build(torus);
}

}  // namespace

Tiling2 gen_brick(int cols, int rows, bool torus) {
  return offset_row_tiling(cols, rows, torus, false);
}

Tiling2 gen_hex(int cols, int rows, bool torus) {
  return offset_row_tiling(cols, rows, torus, true);
}

Tiling2 gen_trunc_square(int m, int n, bool torus) {
  if (m < 1 || n < 1) throw Error(Errc::TooSmall, "need m, n >= 1");
  if (torus && (m < 3 || n < 3))
    throw Error(Errc::TooSmall, "torus mode needs m, n >= 3");

  ComplexBuilder b;
  enum Corner { L = 0, B = 1, R = 2, T = 3 };

  // one diamond square per octagon-grid corner; every vertex belongs to
  // exactly one square
  auto vid = [&](int i, int j, int k) -> Id {
    int ii = torus ? ((i % m) + m) % m : i;
    int jj = torus ? ((j % n) + n) % n : j;
    Id id = (jj * (torus ? m : m + 1) + ii) * 4 + k;
    long long x = 5LL * i, y = 5LL * j;
    switch (k) {
      case L: b.vertex(id, {x - 1, y}); break;
      case B: b.vertex(id, {x, y - 1}); break;
      case R: b.vertex(id, {x + 1, y}); break;
      case T: b.vertex(id, {x, y + 1}); break;
    }
    return id;
  };

  Id fid = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      b.face(fid++, {vid(i, j, R), vid(i + 1, j, L), vid(i + 1, j, T),
                     vid(i + 1, j + 1, B), vid(i + 1, j + 1, L),
                     vid(i, j + 1, R), vid(i, j + 1, B), vid(i, j, T)});
    }
  }
  int i_lo = torus ? 0 : 1, i_hi = torus ? m : m;
  int j_lo = torus ? 0 : 1, j_hi = torus ? n : n;
  for (int j = j_lo; j < j_hi; ++j)
    for (int i = i_lo; i < i_hi; ++i)
      b.face(fid++,
             {vid(i, j, L), vid(i, j, B), vid(i, j, R), vid(i, j, T)});

  return b.build(torus);
}

Tiling2 gen_square4(int cols, int rows) {
  if (cols < 1 || rows < 1) throw Error(Errc::TooSmall, "need cols, rows >= 1");
  ComplexBuilder b;
  auto vid = [&](int x, int y) { return y * (cols + 1) + x; };
  for (int y = 0; y <= rows; ++y)
    for (int x = 0; x <= cols; ++x) b.vertex(vid(x, y), {x, y});
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x)
      b.face(y * cols + x,
             {vid(x, y), vid(x + 1, y), vid(x + 1, y + 1), vid(x, y + 1)});
  return b.build(false);
}

ArcTiling1D gen_circle_arcs(int k) {
  if (k < 1) throw Error(Errc::TooSmall, "need k >= 1");
  std::vector<Id> bp;
  for (int i = 0; i < k; ++i) bp.push_back(i);
  return make_arc_tiling(ArcKind::Circle, std::move(bp));
}

ArcTiling1D gen_segment_arcs(int k) {
  if (k < 1) throw Error(Errc::TooSmall, "need k >= 1");
  std::vector<Id> bp;
  for (int i = 0; i <= k; ++i) bp.push_back(i);
  return make_arc_tiling(ArcKind::Segment, std::move(bp));
}

int DensityField::max_level() const {
  int m = 0;
  for (std::uint8_t l : level) m = std::max(m, static_cast<int>(l));
  return m;
}

int DensityField::size_at_level(int l) const {
  int s = base_size;
  for (int i = 0; i < l; ++i) s /= ratio;
  return s;
}

DensityField uniform_density(int width, int height, int base_size, int ratio,
                             int lvl) {
  DensityField d;
  d.width = width;
  d.height = height;
  d.base_size = base_size;
  d.ratio = ratio;
  d.level.assign(static_cast<std::size_t>(width) * height,
                 static_cast<std::uint8_t>(lvl));
  return d;
}

namespace {

struct RowPlan {
  int y0 = 0;
  int h = 0;
  std::vector<int> cuts;        // interior x-coordinates, ascending
  std::vector<int> tile_level;  // per tile between boundaries
};

}  // namespace

Tiling2 gen_graded_brick(const DensityField& d) {
  if (d.width < 1 || d.height < 1 || d.base_size < 2 || d.ratio < 2)
    throw Error(Errc::TooSmall, "degenerate density field");
  if (d.level.size() != static_cast<std::size_t>(d.width) * d.height)
    throw Error(Errc::TooSmall, "level map not total on the domain");
  const int max_l = d.max_level();
  if (d.size_at_level(max_l) < 2)
    throw Error(Errc::DensityTooFine,
                "finest tile width below 2 units");

  auto max_in = [&](int x0, int x1, int y0, int y1) {
    int m = 0;
    for (int y = y0; y < y1; ++y)
      for (int x = x0; x < x1; ++x) m = std::max(m, d.level_at(x, y));
    return m;
  };
  // coarsest level l whose band starting here contains nothing finer than l
  auto pick_level = [&](auto&& band_max) {
    for (int l = 0; l <= max_l; ++l)
      if (band_max(d.size_at_level(l)) <= l) return l;
    return max_l;
  };

  std::vector<RowPlan> rows;
  for (int y0 = 0; y0 < d.height;) {
    int l = pick_level([&](int s) {
      return max_in(0, d.width, y0, std::min(y0 + s, d.height));
    });
    RowPlan r;
    r.y0 = y0;
    r.h = std::min(d.size_at_level(l), d.height - y0);
    rows.push_back(r);
    y0 += r.h;
  }

  // Greedy cut placement against the (already final) row below: cuts of
  // vertically adjacent rows stay disjoint, every tile stays >= 2 units
  // wide, boundary slivers are absorbed into the last tile. Cuts of one
  // row are >= 2 apart, so when a planned cut collides with the row below,
  // at most one of its two unit neighbors can collide too.
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    RowPlan& r = rows[ri];
    const int yb0 = r.y0, yb1 = r.y0 + r.h;
    const std::set<int> prev =
        ri == 0 ? std::set<int>{}
                : std::set<int>(rows[ri - 1].cuts.begin(),
                                rows[ri - 1].cuts.end());
    bool first = true;
    for (int x0 = 0; x0 < d.width;) {
      int l = pick_level([&](int s) {
        return max_in(x0, std::min(x0 + s, d.width), yb0, yb1);
      });
      int wdt = d.size_at_level(l);
      if (first && ri % 2 == 1)
        wdt = std::max(2, wdt / 2);  // half-spacing offset vs. row below
      first = false;
      int x1 = x0 + wdt;
      if (x1 > d.width - 2) {
        x1 = d.width;  // absorb what would be a sliver at the boundary
      } else if (prev.count(x1)) {
        if (wdt > 2 && !prev.count(x1 - 1))
          --x1;
        else if (x1 + 1 > d.width - 2)
          x1 = d.width;
        else
          ++x1;
      }
      r.tile_level.push_back(l);
      if (x1 < d.width) r.cuts.push_back(x1);
      x0 = x1;
    }
    // defensive invariant check; placement above should never violate it
    int last = 0;
    for (int x : r.cuts) {
      if (x - last < 2 || prev.count(x))
        throw Error(Errc::UnresolvableCollision,
                    "cut at x=" + std::to_string(x) + ", row " +
                        std::to_string(ri));
      last = x;
    }
  }

  // assemble: vertices live on row-boundary lines at the union of the two
  // adjacent rows' cuts, so every interior vertex is a T-junction
  ComplexBuilder b;
  const std::size_t nrows = rows.size();
  std::vector<std::vector<int>> line_xs(nrows + 1);
  std::vector<long long> line_y(nrows + 1);
  for (std::size_t li = 0; li <= nrows; ++li) {
    std::set<int> xs{0, d.width};
    if (li > 0) xs.insert(rows[li - 1].cuts.begin(), rows[li - 1].cuts.end());
    if (li < nrows) xs.insert(rows[li].cuts.begin(), rows[li].cuts.end());
    line_xs[li].assign(xs.begin(), xs.end());
    line_y[li] = li < nrows ? rows[li].y0 : d.height;
  }

  std::map<std::pair<int, std::size_t>, Id> vids;
  Id next_v = 0;
  for (std::size_t li = 0; li <= nrows; ++li)
    for (int x : line_xs[li]) {
      vids[{x, li}] = next_v;
      b.vertex(next_v, {x, line_y[li]});
      ++next_v;
    }

  Tiling2 out;
  std::map<Id, int> face_level;
  Id fid = 0;
  for (std::size_t ri = 0; ri < nrows; ++ri) {
    std::vector<int> bounds{0};
    bounds.insert(bounds.end(), rows[ri].cuts.begin(), rows[ri].cuts.end());
    bounds.push_back(d.width);
    const std::vector<int>& bot = line_xs[ri];
    const std::vector<int>& top = line_xs[ri + 1];
    for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
      int xa = bounds[t], xb = bounds[t + 1];
      std::vector<Id> loop;
      for (int x : bot)
        if (x >= xa && x <= xb) loop.push_back(vids.at({x, ri}));
      for (auto it = top.rbegin(); it != top.rend(); ++it)
        if (*it >= xa && *it <= xb) loop.push_back(vids.at({*it, ri + 1}));
      b.face(fid, loop);
      face_level[fid] = rows[ri].tile_level[t];
      ++fid;
    }
  }

  out = b.build(false);
  out.face_level = std::move(face_level);
  return out;
}

}  // namespace lcl
