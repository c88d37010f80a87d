#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqm/quiver.hpp"

namespace cqm {

/// N(v) split into the two cliques through v. r = |partA| + 1 and
/// k = |partB| + 1 are the sizes of those cliques (a missing clique counts as
/// the 1-clique {v}).
struct CliqueDecomposition {
  Vertex v;
  std::vector<Vertex> partA;
  std::vector<Vertex> partB;

  int r() const noexcept { return static_cast<int>(partA.size()) + 1; }
  int k() const noexcept { return static_cast<int>(partB.size()) + 1; }

  friend bool operator==(const CliqueDecomposition&, const CliqueDecomposition&) = default;
};

struct MembershipFailure {
  enum class Kind { NotSimple, NotConnected, Hole, BadVertexSplit, BadTriangle };
  Kind kind;
  /// Hole: the cycle. BadVertexSplit: {v}. BadTriangle: {v1, v2, v3}.
  std::vector<Vertex> vertices;
  /// BadTriangle only: colour sums of v1->v2->v3->v1 and of the reverse.
  std::pair<int, int> sums{0, 0};

  friend bool operator==(const MembershipFailure&, const MembershipFailure&) = default;
};

std::string to_string(MembershipFailure::Kind kind);

struct MembershipVerdict {
  bool member = true;
  std::vector<MembershipFailure> failures;

  bool has(MembershipFailure::Kind kind) const;
  std::string summary() const;
};

/// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const UnderlyingGraph& g);

/// A shortest induced cycle of length >= 4, rotated to start at its smallest
/// vertex and oriented towards the smaller of that vertex's two cycle
/// neighbours. Empty iff g is chordal.
std::optional<std::vector<Vertex>> find_hole(const UnderlyingGraph& g);
std::optional<std::vector<Vertex>> find_hole(const ColouredQuiver& q);

/// Requires q simple. Present iff the neighbourhood of v induces a disjoint
/// union of at most two cliques, each of size at most m+1. partA holds the
/// component containing the smallest neighbour.
std::optional<CliqueDecomposition> vertex_split(const ColouredQuiver& q, Vertex v);
std::optional<CliqueDecomposition> vertex_split(const UnderlyingGraph& g, int m, Vertex v);

/// Colour sums (s, 3m - s) where s follows v1 -> v2 -> v3 -> v1. The three
/// vertices must be pairwise adjacent in a simple quiver.
std::pair<int, int> triangle_sums(const ColouredQuiver& q, Vertex v1, Vertex v2, Vertex v3);

/// A triangle is admissible when its sums are {m-1, 2m+1}.
bool triangle_admissible(int m, std::pair<int, int> sums);

MembershipVerdict is_member(const ColouredQuiver& q);

}  // namespace cqm
