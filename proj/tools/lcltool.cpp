// lcltool: generate, check, model, classify, render and export LCL tilings
// and their digital models. Exit codes: 0 success/pass, 1 verdict failure,
// 2 usage or IO error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lcl/digital.hpp"
#include "lcl/generators.hpp"
#include "lcl/io.hpp"
#include "lcl/lcl_check.hpp"
#include "lcl/roi.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw lcl::Error(lcl::Errc::TruncatedData, "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw lcl::Error(lcl::Errc::TruncatedData, "cannot write " + path);
  f << text;
}

struct GenOpts {
  std::string family;
  int cols = 4, rows = 4;
  bool torus = false;
  int arcs = 6;
  int width = 64, height = 64;
  int base_size = 8, ratio = 2, levels = 1;
  std::vector<int> focus;  // x y w h of a refined block
  std::string out;
};

int run_gen(const GenOpts& o) {
  if (o.family == "circle" || o.family == "segment") {
    lcl::ArcTiling1D t = o.family == "circle" ? lcl::gen_circle_arcs(o.arcs)
                                              : lcl::gen_segment_arcs(o.arcs);
    spit(o.out, lcl::write_arc_tiling(t));
    return 0;
  }
  lcl::Tiling2 t;
  if (o.family == "brick")
    t = lcl::gen_brick(o.cols, o.rows, o.torus);
  else if (o.family == "hex")
    t = lcl::gen_hex(o.cols, o.rows, o.torus);
  else if (o.family == "trunc-square")
    t = lcl::gen_trunc_square(o.cols, o.rows, o.torus);
  else if (o.family == "square4-invalid")
    t = lcl::gen_square4(o.cols, o.rows);
  else if (o.family == "graded") {
    lcl::DensityField d =
        lcl::uniform_density(o.width, o.height, o.base_size, o.ratio, 0);
    if (!o.focus.empty()) {
      if (o.focus.size() != 4)
        throw lcl::Error(lcl::Errc::BadFormat, "--focus needs x y w h");
      for (int y = o.focus[1]; y < o.focus[1] + o.focus[3]; ++y)
        for (int x = o.focus[0]; x < o.focus[0] + o.focus[2]; ++x)
          if (x >= 0 && x < o.width && y >= 0 && y < o.height)
            d.level[static_cast<std::size_t>(y) * o.width + x] =
                static_cast<std::uint8_t>(o.levels - 1);
    }
    t = lcl::gen_graded_brick(d);
  } else {
    throw lcl::Error(lcl::Errc::BadFormat, "unknown family " + o.family);
  }
  spit(o.out, lcl::write_tiling(t.complex));
  return 0;
}

int run_check(const std::string& file) {
  std::string text = slurp(file);
  lcl::LclReport rep;
  if (lcl::is_arc_tiling_document(text)) {
    rep = lcl::check_lcl_1d(lcl::read_arc_tiling(text));
  } else {
    lcl::CellComplex2 c = lcl::read_tiling(text);
    std::set<lcl::Id> faces;
    for (const auto& [fid, _] : c.faces) faces.insert(fid);
    rep = lcl::check_lcl_2d(c, faces);
  }
  std::cout << lcl::report_to_json(rep);
  return rep.pass() ? 0 : 1;
}

lcl::Graph model_from_file(const std::string& text) {
  if (lcl::is_arc_tiling_document(text))
    return lcl::intersection_graph(lcl::read_arc_tiling(text));
  lcl::CellComplex2 c = lcl::read_tiling(text);
  std::set<lcl::Id> faces;
  for (const auto& [fid, _] : c.faces) faces.insert(fid);
  return lcl::intersection_graph(c, faces);
}

int run_model(const std::string& file, const std::string& out) {
  spit(out, lcl::write_edge_list(model_from_file(slurp(file))));
  return 0;
}

int run_classify(const std::string& file, const std::string& interior_spec) {
  std::string text = slurp(file);
  lcl::Graph g;
  std::set<lcl::Id> interior;
  bool interior_from_tiling = false;

  if (text.rfind("p ", 0) == 0 || text.rfind("c ", 0) == 0) {
    g = lcl::read_edge_list(text);
  } else if (lcl::is_arc_tiling_document(text)) {
    g = lcl::intersection_graph(lcl::read_arc_tiling(text));
  } else {
    lcl::CellComplex2 c = lcl::read_tiling(text);
    std::set<lcl::Id> faces;
    for (const auto& [fid, _] : c.faces) faces.insert(fid);
    g = lcl::intersection_graph(c, faces);
    if (interior_spec == "auto") {
      interior = lcl::interior_faces(c);
      interior_from_tiling = true;
    }
  }
  if (!interior_from_tiling) {
    if (interior_spec == "all" || interior_spec == "auto") {
      interior = g.point_set();
    } else {
      std::istringstream is(interior_spec);
      std::string tok;
      while (std::getline(is, tok, ',')) interior.insert(std::stoi(tok));
    }
  }

  if (lcl::is_digital_2_manifold(g, interior)) {
    auto type = lcl::manifold_type(g, interior);
    std::cout << "digital 2-manifold, type " << lcl::format_manifold_type(type)
              << "\n";
    return 0;
  }
  if (lcl::is_digital_1_manifold(g, interior)) {
    std::cout << (lcl::is_digital_1_sphere_fast(g)
                      ? "digital 1-sphere\n"
                      : "digital 1-manifold\n");
    return 0;
  }
  std::cout << "not a digital manifold on the given interior\n";
  return 1;
}

int run_pipeline(const std::string& in, const std::string& prefix,
                 const lcl::PipelineParams& params) {
  lcl::Mask mask = lcl::read_pgm_file(in);
  lcl::PipelineResult r = lcl::discretize(mask, params);

  spit(prefix + ".tiling.json", lcl::write_tiling(r.tiling.complex));
  spit(prefix + ".edges", lcl::write_edge_list(r.model));
  spit(prefix + ".report.json", lcl::report_to_json(r.lcl));

  std::cout << "tiles: " << r.stats.tile_count
            << ", tile width: " << r.stats.min_tile_width << ".."
            << r.stats.max_tile_width << "\n";
  std::cout << "lcl: " << (r.lcl.pass() ? "pass" : "fail")
            << ", 2-manifold: " << (r.manifold_ok ? "yes" : "no");
  if (!r.type_report.empty())
    std::cout << ", type " << lcl::format_manifold_type(r.type_report);
  std::cout << "\n";
  for (const auto& [lvl, n] : r.stats.per_level)
    std::cout << "level " << lvl << ": " << n << " tiles\n";
  return r.lcl.pass() && r.manifold_ok ? 0 : 1;
}

int run_render(const std::string& file, const std::string& out, bool overlay) {
  lcl::CellComplex2 c = lcl::read_tiling(slurp(file));
  spit(out, lcl::render_svg(c, overlay));
  return 0;
}

int run_export(const std::string& file, const std::string& format,
               const std::string& out) {
  lcl::Graph g;
  std::string text = slurp(file);
  if (text.rfind("p ", 0) == 0)
    g = lcl::read_edge_list(text);
  else
    g = model_from_file(text);
  if (format == "dot")
    spit(out, lcl::to_dot(g));
  else if (format == "edges")
    spit(out, lcl::write_edge_list(g));
  else
    throw lcl::Error(lcl::Errc::BadFormat, "unknown format " + format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LCL tilings of the plane and their digital models"};
  app.require_subcommand(1);

  GenOpts gen;
  CLI::App* cgen = app.add_subcommand("gen", "generate a tiling");
  cgen->add_option("--family", gen.family,
                   "brick|hex|trunc-square|graded|circle|segment|square4-invalid")
      ->required();
  cgen->add_option("--cols", gen.cols, "columns (2D families)");
  cgen->add_option("--rows", gen.rows, "rows (2D families)");
  cgen->add_flag("--torus", gen.torus, "combinatorial wraparound");
  cgen->add_option("--arcs", gen.arcs, "arc count (circle/segment)");
  cgen->add_option("--width", gen.width, "domain width in units (graded)");
  cgen->add_option("--height", gen.height, "domain height in units (graded)");
  cgen->add_option("--base-size", gen.base_size, "coarse tile edge (graded)");
  cgen->add_option("--ratio", gen.ratio, "refinement ratio (graded)");
  cgen->add_option("--levels", gen.levels, "refinement levels (graded)");
  cgen->add_option("--focus", gen.focus,
                   "x y w h block refined to the finest level (graded)")
      ->expected(4);
  cgen->add_option("--out", gen.out, "output file (default stdout)");

  std::string check_file;
  CLI::App* ccheck = app.add_subcommand("check", "LCL verdict for a tiling");
  ccheck->add_option("file", check_file, "tiling file")->required();

  std::string model_file, model_out;
  CLI::App* cmodel = app.add_subcommand("model", "intersection graph of a tiling");
  cmodel->add_option("file", model_file, "tiling file")->required();
  cmodel->add_option("--out", model_out, "edge-list output (default stdout)");

  std::string cls_file, cls_interior = "auto";
  CLI::App* ccls = app.add_subcommand("classify", "manifold verdict and type");
  ccls->add_option("file", cls_file, "edge list or tiling file")->required();
  ccls->add_option("--interior", cls_interior,
                   "all | auto | comma-separated point ids");

  std::string pipe_in, pipe_prefix = "out";
  lcl::PipelineParams params;
  CLI::App* cpipe = app.add_subcommand("pipeline", "PGM mask -> graded grid -> model");
  cpipe->add_option("--in", pipe_in, "PGM mask (P2 or P5)")->required();
  cpipe->add_option("--out-prefix", pipe_prefix, "output file prefix");
  cpipe->add_option("--levels", params.levels, "refinement levels");
  cpipe->add_option("--base-size", params.base_size, "coarse tile edge");
  cpipe->add_option("--ratio", params.ratio, "refinement ratio");
  cpipe->add_option("--halo", params.halo, "distance band per level step");
  cpipe->add_option("--threshold", params.threshold,
                    "ROI threshold (default maxval/2)");

  std::string render_file, render_out;
  bool render_overlay = false;
  CLI::App* crender = app.add_subcommand("render", "SVG rendering of a tiling");
  crender->add_option("file", render_file, "tiling file")->required();
  crender->add_option("--out", render_out, "SVG output (default stdout)");
  crender->add_flag("--overlay-model", render_overlay,
                    "overlay the digital model at tile centroids");

  std::string exp_file, exp_format = "dot", exp_out;
  CLI::App* cexp = app.add_subcommand("export", "DOT / edge-list export");
  cexp->add_option("file", exp_file, "tiling or edge-list file")->required();
  cexp->add_option("--format", exp_format, "dot|edges");
  cexp->add_option("--out", exp_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cgen->parsed()) return run_gen(gen);
    if (ccheck->parsed()) return run_check(check_file);
    if (cmodel->parsed()) return run_model(model_file, model_out);
    if (ccls->parsed()) return run_classify(cls_file, cls_interior);
    if (cpipe->parsed()) return run_pipeline(pipe_in, pipe_prefix, params);
    if (crender->parsed())
      return run_render(render_file, render_out, render_overlay);
    if (cexp->parsed()) return run_export(exp_file, exp_format, exp_out);
  } catch (const lcl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
