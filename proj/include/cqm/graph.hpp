#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cqm {

using Vertex = int;

/// Simple undirected graph on vertices 0..n-1 stored as a dense adjacency
/// matrix. The graphs handled here are small (tens of vertices at most).
class UnderlyingGraph {
 public:
  explicit UnderlyingGraph(int n);

  int n() const noexcept { return n_; }
  bool adjacent(Vertex a, Vertex b) const {
    return adj_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  void add_edge(Vertex a, Vertex b);

  /// Neighbours of v in increasing order.
  std::vector<Vertex> neighbours(Vertex v) const;
  int degree(Vertex v) const;
  int edge_count() const;

  /// Edges as (a, b) with a < b, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_connected() const;
  bool is_clique(const std::vector<Vertex>& vertices) const;

  /// True when the graph is a single path through all n vertices.
  bool is_path() const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> components() const;

  /// Graph induced on `vertices`; vertex i of the result is vertices[i].
  UnderlyingGraph induced(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const UnderlyingGraph&, const UnderlyingGraph&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
};

/// All maximal cliques (Bron-Kerbosch with pivoting). Each clique is sorted;
/// the list is sorted lexicographically. Isolated vertices give singletons.
std::vector<std::vector<Vertex>> maximal_cliques(const UnderlyingGraph& g);

/// Every clique with at least `min_size` vertices, maximal or not, each
/// sorted, the list sorted lexicographically.
std::vector<std::vector<Vertex>> all_cliques(const UnderlyingGraph& g, int min_size);

}  // namespace cqm
