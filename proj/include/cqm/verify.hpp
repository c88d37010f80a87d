#pragma once

#include <cstddef>
#include <cstdint>

#include "cqm/enumeration.hpp"
#include "cqm/io.hpp"

namespace cqm {

struct PairCheck {
  int n = 0;
  int m = 0;
  TheoremReport theorem;
  std::size_t members = 0;
  std::size_t closure_failures = 0;
  std::size_t periodicity_failures = 0;
  std::size_t energy_failures = 0;
  std::size_t zero_part_failures = 0;
  std::size_t reduction_failures = 0;
  int max_clique_number = 0;
  double seconds = 0;

  bool ok() const noexcept;
};

/// Runs every class-level check for one (n, m): equality of the mutation
/// class with the generated members, closure, mu^(m+1) = id, clique energies,
/// clique number, the 0-part, and reduction to a path with replay.
PairCheck verify_pair(int n, int m, std::size_t limit = kDefaultClassLimit,
                      std::uint64_t budget = kDefaultGenerationBudget);

Json to_json(const PairCheck& check);

}  // namespace cqm
