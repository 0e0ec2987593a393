#include "lcl/digital.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace lcl {

Graph Graph::induced(const std::set<Id>& pts) const {
  Graph out;
  for (Id v : pts)
    if (has_point(v)) out.add_point(v);
  for (Id v : pts) {
    if (!has_point(v)) continue;
    for (Id u : neighbors(v))
      if (u > v && pts.count(u)) out.add_edge(v, u);
  }
  return out;
}

bool Graph::connected() const {
  if (adj_.empty()) return false;
  std::set<Id> seen{adj_.begin()->first};
  std::vector<Id> stack{adj_.begin()->first};
  while (!stack.empty()) {
    Id v = stack.back();
    stack.pop_back();
    for (Id u : adj_.at(v))
      if (seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == adj_.size();
}

Graph intersection_graph(const CellComplex2& c, const std::set<Id>& faces) {
  Graph g;
  std::map<Id, std::vector<Id>> at_vertex;
  for (Id f : faces) {
    if (!c.has_face(f)) throw Error(Errc::UnknownFace, std::to_string(f));
    g.add_point(f);
    for (Id v : c.face_vertices(f)) at_vertex[v].push_back(f);
  }
  for (const auto& [v, fs] : at_vertex)
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (fs[i] != fs[j]) g.add_edge(fs[i], fs[j]);
  return g;
}

Graph intersection_graph(const ArcTiling1D& t) {
  Graph g;
  std::map<Id, std::vector<Id>> at_breakpoint;
  for (std::size_t i = 0; i < t.arcs.size(); ++i) {
    Id id = static_cast<Id>(i);
    g.add_point(id);
    at_breakpoint[t.arcs[i].start].push_back(id);
    at_breakpoint[t.arcs[i].end].push_back(id);
  }
  for (const auto& [v, arcs] : at_breakpoint)
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j)
        if (arcs[i] != arcs[j]) g.add_edge(arcs[i], arcs[j]);
  return g;
}

Graph rim(const Graph& g, Id v) { return g.induced(g.neighbors(v)); }

Graph ball(const Graph& g, Id v) {
  std::set<Id> pts = g.neighbors(v);
  pts.insert(v);
  return g.induced(pts);
}

bool is_digital_0_sphere(const Graph& g) {
  return g.point_count() == 2 && g.edge_count() == 0;
}

namespace {

struct CliqueCounter {
  const Graph& g;
  std::uint64_t cap;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;

  void bump(std::size_t k) {
    if (++total > cap)
      throw Error(Errc::CliqueBudgetExceeded, "clique cap " + std::to_string(cap));
    if (counts.size() < k) counts.resize(k, 0);
    ++counts[k - 1];
  }

  // extends a clique of size k by candidates (all adjacent to every member)
  void extend(std::size_t k, const std::vector<Id>& cand) {
    for (std::size_t i = 0; i < cand.size(); ++i) {
      bump(k + 1);
      std::vector<Id> next;
      const std::set<Id>& nbrs = g.neighbors(cand[i]);
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (nbrs.count(cand[j])) next.push_back(cand[j]);
      if (!next.empty()) extend(k + 1, next);
    }
  }
};

}  // namespace

std::vector<std::uint64_t> clique_counts(const Graph& g, std::uint64_t cap) {
  CliqueCounter cc{g, cap};
  cc.extend(0, g.points());
  return cc.counts;
}

std::size_t clique_number(const Graph& g, std::uint64_t cap) {
  return clique_counts(g, cap).size();
}

long long euler_characteristic(const Graph& g, std::uint64_t cap) {
  auto counts = clique_counts(g, cap);
  long long chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k)
    chi += (k % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(counts[k]);
  return chi;
}

// ---------------------------------------------------------------------------
// Contractibility search: vertex deletions guarded by contractible rims,
// memoized on a relabeled adjacency encoding shared across the whole call.

namespace {

std::string graph_key(const Graph& g) {
  std::vector<Id> pts = g.points();
  std::map<Id, int> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
  std::string key(pts.size() * pts.size(), '0');
  for (auto [u, v] : g.edges()) {
    key[index[u] * pts.size() + index[v]] = '1';
    key[index[v] * pts.size() + index[u]] = '1';
  }
  return std::to_string(pts.size()) + ":" + key;
}

// memo entries store deletions as positions in the sorted point list, so a
// hit from an isomorphic subgraph on different ids stays replayable
struct MemoEntry {
  Tri verdict = Tri::Unknown;
  std::vector<std::size_t> del_pos;
};

struct ContractCtx {
  std::uint64_t budget;
  std::map<std::string, MemoEntry> memo;

  ContractionWitness search(const Graph& g) {
    const std::size_t n = g.point_count();
    if (n == 0) return {Tri::No, {}};
    if (n == 1) return {Tri::Yes, {}};
    if (!g.connected()) return {Tri::No, {}};

    const std::vector<Id> pts = g.points();
    auto to_entry = [&](const ContractionWitness& w) {
      MemoEntry e{w.verdict, {}};
      std::set<Id> alive(pts.begin(), pts.end());
      for (Id v : w.deletions) {
        auto it = alive.find(v);
        e.del_pos.push_back(
            static_cast<std::size_t>(std::distance(alive.begin(), it)));
        alive.erase(it);
      }
      return e;
    };

    std::string key = graph_key(g);
    if (auto it = memo.find(key); it != memo.end()) {
      ContractionWitness w{it->second.verdict, {}};
      std::set<Id> alive(pts.begin(), pts.end());
      for (std::size_t pos : it->second.del_pos) {
        // position indexes the sorted ids still alive at that step
        auto jt = alive.begin();
        std::advance(jt, pos);
        w.deletions.push_back(*jt);
        alive.erase(jt);
      }
      return w;
    }

    if (budget == 0) return {Tri::Unknown, {}};
    --budget;

    // sound fast No: contractible transformations keep χ = 1
    try {
      if (euler_characteristic(g) != 1) {
        memo[key] = {Tri::No, {}};
        return {Tri::No, {}};
      }
    } catch (const Error&) {
      // clique cap hit; fall through to the search
    }

    bool unknown_seen = false;
    for (Id v : g.points()) {
      ContractionWitness r = search(rim(g, v));
      if (r.verdict == Tri::Unknown) unknown_seen = true;
      if (r.verdict != Tri::Yes) continue;
      Graph rest = g;
      rest.remove_point(v);
      ContractionWitness tail = search(rest);
      if (tail.verdict == Tri::Unknown) unknown_seen = true;
      if (tail.verdict == Tri::Yes) {
        ContractionWitness ok{Tri::Yes, {}};
        ok.deletions.push_back(v);
        ok.deletions.insert(ok.deletions.end(), tail.deletions.begin(),
                            tail.deletions.end());
        memo[key] = to_entry(ok);
        return ok;
      }
    }

    ContractionWitness out{unknown_seen ? Tri::Unknown : Tri::No, {}};
    if (!unknown_seen) memo[key] = {out.verdict, {}};
    return out;
  }
};

}  // namespace

ContractionWitness contract_to_point(const Graph& g, std::uint64_t budget) {
  ContractCtx ctx{budget, {}};
  return ctx.search(g);
}

Tri is_contractible(const Graph& g, std::uint64_t budget) {
  return contract_to_point(g, budget).verdict;
}

std::string ct_move_name(const CtMove& m) {
  std::ostringstream os;
  if (const auto* d = std::get_if<DeleteVertex>(&m))
    os << "DeleteVertex(" << d->v << ")";
  else if (const auto* gl = std::get_if<GlueVertex>(&m))
    os << "GlueVertex(" << gl->v << ")";
  else if (const auto* de = std::get_if<DeleteEdge>(&m))
    os << "DeleteEdge(" << de->u << "," << de->v << ")";
  else if (const auto* ge = std::get_if<GlueEdge>(&m))
    os << "GlueEdge(" << ge->u << "," << ge->v << ")";
  return os.str();
}

namespace {

Graph common_neighborhood(const Graph& g, Id u, Id v) {
  std::set<Id> common;
  std::ranges::set_intersection(g.neighbors(u), g.neighbors(v),
                                std::inserter(common, common.end()));
  return g.induced(common);
}

void require(bool ok, const CtMove& m, const std::string& reason) {
  if (!ok)
    throw Error(Errc::PreconditionFailed, ct_move_name(m) + ": " + reason);
}

}  // namespace

Graph apply_ct(const Graph& g, const CtMove& m, std::uint64_t budget) {
  Graph out = g;
  if (const auto* d = std::get_if<DeleteVertex>(&m)) {
    require(g.has_point(d->v), m, "unknown point");
    require(is_contractible(rim(g, d->v), budget) == Tri::Yes, m,
            "rim not contractible");
    out.remove_point(d->v);
  } else if (const auto* gl = std::get_if<GlueVertex>(&m)) {
    require(!g.has_point(gl->v), m, "point already present");
    for (Id u : gl->neighbors) require(g.has_point(u), m, "unknown neighbor");
    require(is_contractible(g.induced(gl->neighbors), budget) == Tri::Yes, m,
            "neighbor set not contractible");
    out.add_point(gl->v);
    for (Id u : gl->neighbors) out.add_edge(gl->v, u);
  } else if (const auto* de = std::get_if<DeleteEdge>(&m)) {
    require(g.has_edge(de->u, de->v), m, "no such edge");
    require(is_contractible(common_neighborhood(g, de->u, de->v), budget) ==
                Tri::Yes,
            m, "common neighborhood not contractible");
    out.remove_edge(de->u, de->v);
  } else if (const auto* ge = std::get_if<GlueEdge>(&m)) {
    require(g.has_point(ge->u) && g.has_point(ge->v), m, "unknown point");
    require(ge->u != ge->v && !g.has_edge(ge->u, ge->v), m,
            "points already adjacent");
    require(is_contractible(common_neighborhood(g, ge->u, ge->v), budget) ==
                Tri::Yes,
            m, "common neighborhood not contractible");
    out.add_edge(ge->u, ge->v);
  }
  return out;
}

Tri is_digital_sphere_def(const Graph& g, int n, std::uint64_t budget) {
  if (n == 0) return is_digital_0_sphere(g) ? Tri::Yes : Tri::No;
  if (n != 1) throw Error(Errc::PreconditionFailed, "only n in {0,1}");
  if (!g.connected()) return Tri::No;
  for (Id v : g.points())
    if (!is_digital_0_sphere(rim(g, v))) return Tri::No;
  bool unknown = false;
  for (Id v : g.points()) {
    Graph rest = g;
    rest.remove_point(v);
    Tri t = is_contractible(rest, budget);
    if (t == Tri::No) return Tri::No;
    if (t == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::Yes;
}

bool is_digital_1_sphere_fast(const Graph& g) {
  if (g.point_count() < 4 || !g.connected()) return false;
  for (Id v : g.points())
    if (g.degree(v) != 2) return false;
  return true;
}

namespace {

// simple open path with >= 1 point (single point allowed)
bool is_path_graph(const Graph& g) {
  const std::size_t n = g.point_count();
  if (n == 0) return false;
  if (n == 1) return g.edge_count() == 0;
  if (!g.connected() || g.edge_count() != n - 1) return false;
  for (Id v : g.points())
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

bool is_digital_1_manifold(const Graph& g, const std::set<Id>& interior) {
  if (!g.connected()) return false;
  for (Id v : g.points()) {
    Graph r = rim(g, v);
    if (interior.count(v)) {
      if (!is_digital_0_sphere(r)) return false;
    } else {
      if (r.point_count() != 1 || r.edge_count() != 0) return false;
    }
  }
  return true;
}

bool is_digital_2_manifold(const Graph& g, const std::set<Id>& interior) {
  if (!g.connected()) return false;
  for (Id v : g.points()) {
    Graph r = rim(g, v);
    if (interior.count(v)) {
      if (!is_digital_1_sphere_fast(r)) return false;
    } else {
      if (!is_path_graph(r)) return false;
    }
  }
  return true;
}

std::map<int, int> manifold_type(const Graph& g, const std::set<Id>& interior) {
  if (!is_digital_2_manifold(g, interior))
    throw Error(Errc::NotAManifold, "2-manifold check failed");
  std::map<int, int> out;
  for (Id v : g.points())
    if (interior.count(v)) ++out[static_cast<int>(rim(g, v).point_count())];
  return out;
}

std::string format_manifold_type(const std::map<int, int>& type) {
  std::ostringstream os;
  os << "(";
  if (type.size() == 1) {
    os << type.begin()->first << "," << type.begin()->first;
  } else {
    bool first = true;
    for (const auto& [len, _] : type) {
      if (!first) os << ",";
      os << len;
      first = false;
    }
  }
  os << ")";
  return os.str();
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<Id>& order,
                   std::size_t depth, std::map<Id, Id>& fwd,
                   std::set<Id>& used) {
  if (depth == order.size()) return true;
  Id v = order[depth];
  for (Id w : b.points()) {
    if (used.count(w) || b.degree(w) != a.degree(v)) continue;
    bool ok = true;
    for (const auto& [x, y] : fwd) {
      if (a.has_edge(v, x) != b.has_edge(w, y)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    fwd[v] = w;
    used.insert(w);
    if (iso_backtrack(a, b, order, depth + 1, fwd, used)) return true;
    fwd.erase(v);
    used.erase(w);
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b, std::size_t size_cap) {
  if (a.point_count() > size_cap || b.point_count() > size_cap)
    throw Error(Errc::SizeCapExceeded,
                "graphs larger than " + std::to_string(size_cap) + " points");
  if (a.point_count() != b.point_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<std::size_t> da, db;
  for (Id v : a.points()) da.push_back(a.degree(v));
  for (Id v : b.points()) db.push_back(b.degree(v));
  std::ranges::sort(da);
  std::ranges::sort(db);
  if (da != db) return false;

  std::vector<Id> order = a.points();
  std::ranges::sort(order, [&](Id x, Id y) { return a.degree(x) > a.degree(y); });
  std::map<Id, Id> fwd;
  std::set<Id> used;
  return iso_backtrack(a, b, order, 0, fwd, used);
}

}  // namespace lcl
