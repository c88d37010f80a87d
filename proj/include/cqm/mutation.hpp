#pragma once

#include <vector>

#include "cqm/quiver.hpp"

namespace cqm {

/// mu_vertex applied `power` times; power lies in [1, m + 1].
struct MutationStep {
  Vertex vertex;
  int power;

  friend bool operator==(const MutationStep&, const MutationStep&) = default;
};

/// Steps are applied left to right.
struct MutationSequence {
  std::vector<MutationStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }

  friend bool operator==(const MutationSequence&, const MutationSequence&) = default;
};

enum class MembershipCheck { Enforce, Skip };

/// Coloured mutation at j by the three-step algorithm: add arrow pairs for
/// every i -c-> j -0-> k with i != k, cancel colours pairwise, then shift the
/// colours of arrows at j (into j: +1, out of j: -1, mod m+1).
ColouredQuiver mutate_steps(const ColouredQuiver& q, Vertex j);

/// Coloured mutation at j by the closed piecewise formula.
ColouredQuiver mutate_formula(const ColouredQuiver& q, Vertex j);

enum class PowerMode {
  /// Apply mu_j exactly t times.
  Literal,
  /// Caller guarantees q is a class member, so t is reduced mod m+1 first.
  AssumeMember,
};

ColouredQuiver mutate_power(const ColouredQuiver& q, Vertex j, int t,
                            PowerMode mode = PowerMode::Literal);

/// mu_j^m, the inverse of mu_j on class members. With MembershipCheck::Enforce
/// a non-member raises PreconditionError.
ColouredQuiver inverse_in_class(const ColouredQuiver& q, Vertex j,
                                MembershipCheck check = MembershipCheck::Enforce);

ColouredQuiver apply_step(const ColouredQuiver& q, const MutationStep& step);
ColouredQuiver apply_sequence(const ColouredQuiver& q, const MutationSequence& seq);

/// Reversed sequence with each power t replaced by m+1-t; steps whose new
/// power would be m+1 are dropped.
MutationSequence inverse_sequence(const MutationSequence& seq, int m);

/// Merges adjacent steps at the same vertex and reduces powers mod m+1,
/// dropping steps that become trivial. Only meaningful on class members.
MutationSequence compress_in_class(const MutationSequence& seq, int m);

}  // namespace cqm
