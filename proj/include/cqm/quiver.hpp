#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cqm/graph.hpp"

namespace cqm {

using Colour = int;

/// An m-coloured quiver on vertices 0..n-1: for every ordered pair (i, k) and
/// colour c in [0, m] the number q_ik^(c) of arrows i -> k of colour c.
///
/// Both directions are stored. Nothing about the three coloured-quiver
/// invariants (no loops, monochromatic, skew-symmetric) is enforced here; see
/// validate(). Values are immutable once built.
class ColouredQuiver {
 public:
  /// Empty quiver (no arrows). Requires m >= 1 and n >= 1.
  ColouredQuiver(int m, int n);

  /// Takes raw multiplicities laid out as [(from * n + to) * (m + 1) + colour].
  static ColouredQuiver from_multiplicities(int m, int n, std::vector<int> mult);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int colour_count() const noexcept { return m_ + 1; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  int mult(Vertex from, Vertex to, Colour c) const { return mult_[index(from, to, c)]; }

  /// Sum of multiplicities over all colours.
  int total_mult(Vertex from, Vertex to) const;
  bool has_arrow(Vertex from, Vertex to) const { return total_mult(from, to) > 0; }

  /// Smallest colour with a positive multiplicity from -> to, if any. On a
  /// monochromatic quiver this is the colour of the arrows.
  std::optional<Colour> colour(Vertex from, Vertex to) const;

  const std::vector<int>& multiplicities() const noexcept { return mult_; }

  friend bool operator==(const ColouredQuiver&, const ColouredQuiver&) = default;

 private:
  ColouredQuiver(int m, int n, std::vector<int> mult);
  std::size_t index(Vertex from, Vertex to, Colour c) const {
    return (static_cast<std::size_t>(from) * n_ + to) * (m_ + 1) + c;
  }

  int m_;
  int n_;
  std::vector<int> mult_;
};

/// Accumulates arrows and produces a ColouredQuiver. Range errors throw
/// InvalidInput.
class QuiverBuilder {
 public:
  QuiverBuilder(int m, int n);

  /// Adds `count` arrows from -> to of colour c, and nothing else.
  QuiverBuilder& add_arrows(Vertex from, Vertex to, Colour c, int count = 1);

  /// Adds `count` arrows from -> to of colour c together with their skew
  /// partners to -> from of colour m - c.
  QuiverBuilder& add_pair(Vertex from, Vertex to, Colour c, int count = 1);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }

  ColouredQuiver build() const;

 private:
  void check(Vertex from, Vertex to, Colour c, int count) const;

  int m_;
  int n_;
  std::vector<int> mult_;
};

struct Violation {
  enum class Kind { Loop, Bichromatic, SkewSymmetry };
  Kind kind;
  Vertex from;
  Vertex to;
  /// Offending colour (Loop, SkewSymmetry) or every colour present (Bichromatic).
  std::vector<Colour> colours;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const ColouredQuiver& q);

/// Throws InvalidInput carrying the report summary unless q is valid.
void require_valid(const ColouredQuiver& q);

/// Path quiver i -> i+1 of colour colours[i] with skew partners. An empty
/// `colours` means all zero; otherwise it must hold n - 1 entries in [0, m].
ColouredQuiver linear_quiver(int n, int m, std::span<const Colour> colours = {});

UnderlyingGraph underlying_graph(const ColouredQuiver& q);

/// At most one arrow between any two distinct vertices in each direction.
bool is_simple(const ColouredQuiver& q);
bool is_connected(const ColouredQuiver& q);

/// Underlying graph is a path on all n vertices (an A_n-quiver).
bool is_path_quiver(const ColouredQuiver& q);

/// Edges {i, j} of a simple quiver with the colour of i -> j for i < j.
struct SimpleView {
  int m;
  int n;
  std::map<std::pair<Vertex, Vertex>, Colour> edges;

  friend bool operator==(const SimpleView&, const SimpleView&) = default;
};

/// Throws PreconditionError when q is not simple.
SimpleView to_simple_view(const ColouredQuiver& q);
ColouredQuiver from_simple_view(const SimpleView& view);

/// Colour of the unique arrow from -> to of a simple quiver; throws
/// PreconditionError when the vertices are not adjacent.
Colour arrow_colour(const ColouredQuiver& q, Vertex from, Vertex to);

/// Relabels vertices: old vertex v becomes perm[v].
ColouredQuiver relabel(const ColouredQuiver& q, std::span<const Vertex> perm);

}  // namespace cqm
