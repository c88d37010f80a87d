#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cqm/mutation.hpp"
#include "cqm/quiver.hpp"

namespace cqm {

enum class CliqueKind { Extremal, AlmostExtremal };

/// A clique C together with the component of Q minus the arrows of C that
/// certifies it. tail lists that component as a path starting at the apex,
/// the vertex it shares with C.
struct ExtremalWitness {
  std::vector<Vertex> clique;
  CliqueKind kind = CliqueKind::Extremal;
  std::vector<Vertex> tail;

  Vertex apex() const { return tail.front(); }

  friend bool operator==(const ExtremalWitness&, const ExtremalWitness&) = default;
};

/// Component of v in the underlying graph of q with the edges inside `clique`
/// removed, as a path from v. Empty when that component is not a path with v
/// at one end.
std::optional<std::vector<Vertex>> clique_tail(const ColouredQuiver& q,
                                               const std::vector<Vertex>& clique, Vertex v);

/// Walks the lexicographically smallest longest simple path and returns the
/// first clique of size >= 3 met along it whose vertex there carries a path
/// tail. Empty when q is already a path quiver.
std::optional<ExtremalWitness> find_almost_extremal(
    const ColouredQuiver& q, MembershipCheck check = MembershipCheck::Enforce);

/// Path quiver with arrows i+1 -> i of colour 0.
ColouredQuiver recolour_line_base(int n, int m);

/// Path quiver with arrows i+1 -> i of colour target[i].
ColouredQuiver recolour_line_target(int n, int m, std::span<const Colour> target);

/// Sequence taking recolour_line_base(n, m) to recolour_line_target(n, m,
/// target). Checked by replay.
MutationSequence recolour_line(int n, int m, std::span<const Colour> target);

struct Reduction {
  ColouredQuiver quiver;
  MutationSequence sequence;
};

struct CliqueWalk {
  ColouredQuiver quiver;
  MutationSequence sequence;
  /// The witness moved one vertex along the tail.
  ExtremalWitness witness;
};

/// Recolours the tail so the arrow from the apex v into the tail has the
/// least colour c_1 of the arrows from v into the clique, then applies
/// mu_v^(c_1+1). The clique loses the vertex v_1 reached by colour c_1 and
/// gains the first tail vertex, which becomes the new apex.
CliqueWalk make_extremal(const ColouredQuiver& q, const ExtremalWitness& witness);

/// For an extremal clique with apex v: mu_v^(c_1+1) detaches v_1 from the
/// clique, leaving it attached to v alone.
Reduction shrink_extremal(const ColouredQuiver& q, const ExtremalWitness& witness);

/// Repeats find_almost_extremal, make_extremal and shrink_extremal until the
/// quiver is a path. The returned sequence takes q to the returned quiver.
Reduction reduce_to_line(const ColouredQuiver& q,
                         MembershipCheck check = MembershipCheck::Enforce);

}  // namespace cqm
