#pragma once

#include <span>
#include <string>
#include <vector>

#include "cqm/mutation.hpp"
#include "cqm/quiver.hpp"

namespace cqm {

/// Sum of the colours along p (plain integers). Consecutive vertices must be
/// adjacent in the simple quiver q.
int path_weight(const ColouredQuiver& q, std::span<const Vertex> p);

struct CliqueEnergy {
  std::vector<Vertex> clique;
  int delta = 0;
  /// Cyclic order attaining delta, starting at the smallest vertex.
  std::vector<Vertex> witness;
};

/// Minimum weight over all Hamiltonian cycles of the clique K (|K| >= 3).
CliqueEnergy clique_energy(const ColouredQuiver& q, std::vector<Vertex> clique);

/// Weights of every cyclic order of K that starts at its smallest vertex,
/// both orientations included.
std::vector<int> hamiltonian_cycle_weights(const ColouredQuiver& q, std::vector<Vertex> clique);

/// Values (k-2)(m-1) + i(m+2) - (k-3)m for i = 0..k-2, ascending.
std::vector<int> admissible_cycle_weights(int k, int m);

struct CliqueEnergyCheck {
  std::vector<Vertex> clique;
  int delta = 0;
  int expected = 0;
  std::vector<int> stray_weights;

  bool ok() const noexcept { return delta == expected && stray_weights.empty(); }
};

struct EnergyReport {
  std::vector<CliqueEnergyCheck> cliques;

  bool ok() const;
};

/// Checks every clique of size >= 3 (maximal or not).
EnergyReport verify_energy(const ColouredQuiver& q,
                           MembershipCheck check = MembershipCheck::Enforce);

/// Size of a largest clique of the underlying graph.
int clique_number(const ColouredQuiver& q);

struct ZeroArrow {
  Vertex from;
  Vertex to;
  int mult;

  friend bool operator==(const ZeroArrow&, const ZeroArrow&) = default;
};

struct ZeroPart {
  int n = 0;
  std::vector<ZeroArrow> arrows;

  int in_degree(Vertex v) const;
  int out_degree(Vertex v) const;
};

ZeroPart zero_part(const ColouredQuiver& q);

/// Every elementary directed cycle (Johnson's algorithm), each starting at its
/// smallest vertex, in discovery order.
std::vector<std::vector<Vertex>> simple_cycles(const ZeroPart& part);

struct ZeroPartReport {
  ZeroPart part;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::vector<Vertex>> bad_cycles;
  std::vector<Vertex> bad_valency;
  int expected_cycle_length = 0;

  bool cycles_ok() const noexcept { return bad_cycles.empty(); }
  bool valency_ok() const noexcept { return bad_valency.empty(); }
  bool ok() const noexcept { return cycles_ok() && valency_ok(); }
};

/// Every 0-part cycle must have length m+2 and every vertex in- and
/// out-degree at most 2.
ZeroPartReport check_zero_part(const ColouredQuiver& q,
                               MembershipCheck check = MembershipCheck::Enforce);

std::string zero_part_dot(const ZeroPart& part);

}  // namespace cqm
