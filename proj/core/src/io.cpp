#include "lcl/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "lcl/digital.hpp"

namespace lcl {

using json = nlohmann::ordered_json;

std::string write_tiling(const CellComplex2& c) {
  json doc;
  doc["torus"] = c.torus;
  doc["vertices"] = json::array();
  for (const auto& [id, p] : c.vertices)
    doc["vertices"].push_back({{"id", id}, {"x", p.x}, {"y", p.y}});
  doc["edges"] = json::array();
  for (const auto& [id, e] : c.edges) {
    json je{{"id", id}, {"a", e.a}, {"b", e.b}};
    if (!e.bend.empty()) {
      json bend = json::array();
      for (const Vec2& p : e.bend) bend.push_back({p.x, p.y});
      je["bend"] = std::move(bend);
    }
    doc["edges"].push_back(std::move(je));
  }
  doc["faces"] = json::array();
  for (const auto& [id, walk] : c.faces) {
    json jw = json::array();
    for (const EdgeRef& r : walk) jw.push_back({r.edge, r.rev ? 1 : 0});
    doc["faces"].push_back({{"id", id}, {"walk", std::move(jw)}});
  }
  return doc.dump(2) + "\n";
}

namespace {

json parse_doc(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(Errc::BadFormat, "not valid JSON");
  return doc;
}

}  // namespace

CellComplex2 read_tiling(const std::string& text) {
  json doc = parse_doc(text);
  try {
    std::map<Id, Vec2> vs;
    for (const json& v : doc.at("vertices"))
      vs[v.at("id").get<Id>()] = {v.at("x").get<long long>(),
                                  v.at("y").get<long long>()};
    std::map<Id, EdgeDef> es;
    for (const json& e : doc.at("edges")) {
      EdgeDef def{e.at("a").get<Id>(), e.at("b").get<Id>(), {}};
      if (e.contains("bend"))
        for (const json& p : e.at("bend"))
          def.bend.push_back({p.at(0).get<long long>(), p.at(1).get<long long>()});
      es[e.at("id").get<Id>()] = std::move(def);
    }
    std::map<Id, std::vector<EdgeRef>> fs;
    for (const json& f : doc.at("faces")) {
      std::vector<EdgeRef> walk;
      for (const json& r : f.at("walk"))
        walk.push_back({r.at(0).get<Id>(), r.at(1).get<int>() != 0});
      fs[f.at("id").get<Id>()] = std::move(walk);
    }
    bool torus = doc.value("torus", false);
    return build_complex(std::move(vs), std::move(es), std::move(fs), torus);
  } catch (const json::exception& e) {
    throw Error(Errc::BadFormat, e.what());
  }
}

std::string write_arc_tiling(const ArcTiling1D& t) {
  json doc;
  doc["kind"] = t.kind == ArcKind::Circle ? "circle" : "segment";
  doc["breakpoints"] = t.breakpoints;
  doc["arcs"] = json::array();
  for (const ArcSpan& a : t.arcs) doc["arcs"].push_back({a.start, a.end});
  return doc.dump(2) + "\n";
}

ArcTiling1D read_arc_tiling(const std::string& text) {
  json doc = parse_doc(text);
  try {
    ArcTiling1D t;
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "circle")
      t.kind = ArcKind::Circle;
    else if (kind == "segment")
      t.kind = ArcKind::Segment;
    else
      throw Error(Errc::BadFormat, "kind must be circle or segment");
    t.breakpoints = doc.at("breakpoints").get<std::vector<Id>>();
    for (const json& a : doc.at("arcs"))
      t.arcs.push_back({a.at(0).get<Id>(), a.at(1).get<Id>()});
    if (t.arcs.empty()) throw Error(Errc::BadFormat, "no arcs");
    return t;
  } catch (const json::exception& e) {
    throw Error(Errc::BadFormat, e.what());
  }
}

bool is_arc_tiling_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  return !doc.is_discarded() && doc.is_object() && doc.contains("kind");
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.point_count() << "\n";
  for (Id v : g.points())
    if (g.degree(v) == 0) os << "v " << v << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph read_edge_list(const std::string& text) {
  Graph g;
  std::istringstream is(text);
  std::string line;
  long expected = -1;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first == "p") {
      if (!(ls >> expected)) throw Error(Errc::BadFormat, "bad p header");
    } else if (first == "v") {
      Id v;
      if (!(ls >> v)) throw Error(Errc::BadFormat, "bad v line");
      g.add_point(v);
    } else {
      Id u, v;
      try {
        u = std::stoi(first);
      } catch (const std::exception&) {
        throw Error(Errc::BadFormat, "bad edge line: " + line);
      }
      if (!(ls >> v)) throw Error(Errc::BadFormat, "bad edge line: " + line);
      g.add_edge(u, v);
    }
  }
  if (expected >= 0 && static_cast<long>(g.point_count()) != expected)
    throw Error(Errc::BadFormat, "point count mismatch vs p header");
  return g;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph model {\n  node [shape=circle];\n";
  for (Id v : g.points())
    if (g.degree(v) == 0) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string report_to_json(const LclReport& r) {
  json doc;
  doc["lc_ok"] = r.lc_ok;
  doc["ll_ok"] = r.ll_ok;
  doc["pass"] = r.pass();
  doc["violations"] = json::array();
  for (const Violation& v : r.violations) {
    json w;
    w["vertices"] = std::vector<Id>(v.witness.vertices.begin(),
                                    v.witness.vertices.end());
    w["edges"] = std::vector<Id>(v.witness.edges.begin(), v.witness.edges.end());
    doc["violations"].push_back({{"kind", violation_kind_name(v.kind)},
                                 {"faces", v.faces},
                                 {"witness", std::move(w)}});
  }
  return doc.dump(2) + "\n";
}

namespace {

const char* kPalette[] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc",
                          "#fdd0a2", "#c7e9c0", "#dadaeb", "#fee6ce"};

}  // namespace

std::string render_svg(const CellComplex2& c, bool overlay_model) {
  long long min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  bool first = true;
  for (const auto& [_, p] : c.vertices) {
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double scale = 24.0, pad = 16.0;
  auto sx = [&](double x) { return (x - min_x) * scale + pad; };
  auto sy = [&](double y) { return (max_y - y) * scale + pad; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << (max_x - min_x) * scale + 2 * pad << "\" height=\""
     << (max_y - min_y) * scale + 2 * pad << "\">\n";

  std::size_t fi = 0;
  std::map<Id, std::pair<double, double>> centroid;
  for (const auto& [fid, walk] : c.faces) {
    os << "  <polygon points=\"";
    double cx = 0, cy = 0;
    std::size_t nv = 0;
    for (const EdgeRef& r : walk) {
      Id v = c.walk_source(r);
      const Vec2& p = c.vertices.at(v);
      os << sx(p.x) << "," << sy(p.y) << " ";
      cx += static_cast<double>(p.x);
      cy += static_cast<double>(p.y);
      ++nv;
      const EdgeDef& e = c.edges.at(r.edge);
      if (!e.bend.empty()) {
        std::vector<Vec2> bend = e.bend;
        if (r.rev) std::reverse(bend.begin(), bend.end());
        for (const Vec2& q : bend) os << sx(q.x) << "," << sy(q.y) << " ";
      }
    }
    centroid[fid] = {cx / nv, cy / nv};
    os << "\" fill=\"" << kPalette[fi++ % std::size(kPalette)]
       << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  }

  if (overlay_model) {
    std::set<Id> all;
    for (const auto& [fid, _] : c.faces) all.insert(fid);
    Graph model = intersection_graph(c, all);
    for (auto [u, v] : model.edges()) {
      auto [ax, ay] = centroid.at(u);
      auto [bx, by] = centroid.at(v);
      os << "  <line x1=\"" << sx(ax) << "\" y1=\"" << sy(ay) << "\" x2=\""
         << sx(bx) << "\" y2=\"" << sy(by)
         << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    for (const auto& [fid, pt] : centroid)
      os << "  <circle cx=\"" << sx(pt.first) << "\" cy=\"" << sy(pt.second)
         << "\" r=\"4\" fill=\"#d62728\"/>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace lcl
