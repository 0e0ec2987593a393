#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lcl/errors.hpp"

namespace lcl {

using Id = int;

/// Finite simple undirected graph over integer point ids.
class Graph {
 public:
  Graph() = default;

  void add_point(Id v) { adj_.try_emplace(v); }

  void add_edge(Id u, Id v) {
    if (u == v) throw Error(Errc::PreconditionFailed, "loop edge");
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  void remove_point(Id v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error(Errc::UnknownPoint, std::to_string(v));
    for (Id u : it->second) adj_[u].erase(v);
    adj_.erase(it);
  }

  void remove_edge(Id u, Id v) {
    if (!has_edge(u, v)) throw Error(Errc::PreconditionFailed, "no such edge");
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  bool has_point(Id v) const { return adj_.count(v) != 0; }

  bool has_edge(Id u, Id v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
  }

  const std::set<Id>& neighbors(Id v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error(Errc::UnknownPoint, std::to_string(v));
    return it->second;
  }

  std::size_t degree(Id v) const { return neighbors(v).size(); }

  std::vector<Id> points() const {
    std::vector<Id> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
  }

  std::set<Id> point_set() const {
    std::set<Id> out;
    for (const auto& [v, _] : adj_) out.insert(v);
    return out;
  }

  std::size_t point_count() const { return adj_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& [_, nbrs] : adj_) twice += nbrs.size();
    return twice / 2;
  }

  std::vector<std::pair<Id, Id>> edges() const {
    std::vector<std::pair<Id, Id>> out;
    for (const auto& [v, nbrs] : adj_)
      for (Id u : nbrs)
        if (v < u) out.emplace_back(v, u);
    return out;
  }

  /// Subgraph induced by `pts` (ids absent from the graph are ignored).
  Graph induced(const std::set<Id>& pts) const;

  /// Empty graphs count as disconnected.
  bool connected() const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<Id, std::set<Id>> adj_;
};

}  // namespace lcl
