#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "cqm/canonical.hpp"
#include "cqm/quiver.hpp"

namespace cqm {

inline constexpr std::size_t kDefaultClassLimit = 100000;
inline constexpr std::uint64_t kDefaultGenerationBudget = 50'000'000;

struct OrbitEdge {
  std::size_t from;
  /// Vertex of the source representative that is mutated.
  Vertex vertex;
  std::size_t to;

  friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

struct MutationClass {
  ColouredQuiver seed;
  /// Forms in discovery order; representatives[i] is the canonically
  /// relabelled quiver with form forms[i].
  std::vector<CanonicalForm> forms;
  std::vector<ColouredQuiver> representatives;
  std::vector<OrbitEdge> edges;
  std::unordered_map<CanonicalForm, std::size_t> index;

  /// Number of labelled quivers in the class: sum of n!/|Aut| over the forms.
  std::uint64_t labelled_count = 0;

  /// Inline membership checks on every mutation result (when requested).
  std::size_t membership_checked = 0;
  std::size_t membership_failures = 0;

  std::size_t size() const noexcept { return forms.size(); }
  bool contains(const CanonicalForm& form) const { return index.count(form) != 0; }
};

struct ClassOptions {
  std::size_t limit = kDefaultClassLimit;
  bool check_membership = false;
};

/// Breadth-first closure of seed under all mutations, deduplicated by
/// canonical form. Throws LimitExceeded (carrying the partial size) when more
/// than options.limit forms are found.
MutationClass mutation_class(const ColouredQuiver& seed, const ClassOptions& options = {});

/// Sum of (m+1)^edges over the connected labelled graphs on n vertices, or
/// the bound (m+2)^(n(n-1)/2) when n is too large to count them.
std::uint64_t generation_space(int n, int m);

/// Every canonical form of a simple connected m-coloured quiver on n vertices
/// that passes is_member, by exhaustion. Throws LimitExceeded with the search
/// space size when it exceeds budget.
std::set<CanonicalForm> generate_members(int n, int m,
                                         std::uint64_t budget = kDefaultGenerationBudget);

struct TheoremReport {
  int n = 0;
  int m = 0;
  bool holds = false;
  std::size_t class_size = 0;
  std::size_t generated_size = 0;
  std::vector<CanonicalForm> only_in_class;
  std::vector<CanonicalForm> only_generated;
};

/// Compares the mutation class of the linear A_n quiver with the generated
/// members of the class.
TheoremReport verify_theorem_A(int n, int m, std::size_t limit = kDefaultClassLimit,
                               std::uint64_t budget = kDefaultGenerationBudget);

std::uint64_t factorial(int n);

}  // namespace cqm
