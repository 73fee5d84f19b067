#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmatch {

// Membership over [0, n) for a host graph of order n.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);

  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int count() const;
  bool empty() const { return count() == 0; }

  // Requires universe() <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v) with
// u < v, sorted and duplicate free; equality is label sensitive.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  // Normalizes orientation, sorts and deduplicates. Throws InputError on
  // self-loops or endpoints outside [0, n).
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;

  // Bit mask of neighbors; only meaningful for order() <= 64.
  std::uint64_t neighbor_mask(int v) const { return masks_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> masks_;
};

// Edge-list text: first non-comment line is n, then one "u v" pair per line.
// Lines starting with '#' and blank lines are skipped. Errors carry the
// 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// graph6, single-byte size form only (n <= 62).
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

// Corona G o K1: vertex n+v is a pendant attached to v.
Graph thorn(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // original[new_index] = old index
};

// Induced subgraph on V \ removed, relabelled preserving order.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed);

bool is_independent(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

}  // namespace mmatch
