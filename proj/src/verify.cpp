#include "cqm/verify.hpp"

#include <algorithm>
#include <chrono>

#include "cqm/analysis.hpp"
#include "cqm/error.hpp"
#include "cqm/mutation.hpp"
#include "cqm/reduction.hpp"

namespace cqm {

bool PairCheck::ok() const noexcept {
  return theorem.holds && closure_failures == 0 && periodicity_failures == 0 &&
         energy_failures == 0 && zero_part_failures == 0 && reduction_failures == 0 &&
         max_clique_number <= m + 2;
}

PairCheck verify_pair(int n, int m, std::size_t limit, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  PairCheck out;
  out.n = n;
  out.m = m;
  out.theorem = verify_theorem_A(n, m, limit, budget);
  auto cls = mutation_class(linear_quiver(n, m), {limit, true});
  out.members = cls.size();
  out.closure_failures = cls.membership_failures;

  for (const auto& q : cls.representatives) {
    for (Vertex j = 0; j < n; ++j)
      if (mutate_power(q, j, m + 1) != q) ++out.periodicity_failures;
    if (!verify_energy(q, MembershipCheck::Skip).ok()) ++out.energy_failures;
    if (!check_zero_part(q, MembershipCheck::Skip).ok()) ++out.zero_part_failures;
    out.max_clique_number = std::max(out.max_clique_number, clique_number(q));
    try {
      auto r = reduce_to_line(q, MembershipCheck::Skip);
      const bool good = is_path_quiver(r.quiver) && apply_sequence(q, r.sequence) == r.quiver &&
                        apply_sequence(r.quiver, inverse_sequence(r.sequence, m)) == q;
      if (!good) ++out.reduction_failures;
    } catch (const Error&) {
      ++out.reduction_failures;
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Json to_json(const PairCheck& c) {
  Json only_class = Json::array(), only_generated = Json::array();
  for (const auto& f : c.theorem.only_in_class) only_class.push_back(form_to_hex(f));
  for (const auto& f : c.theorem.only_generated) only_generated.push_back(form_to_hex(f));
  return {{"n", c.n},
          {"m", c.m},
          {"ok", c.ok()},
          {"theorem_A",
           {{"holds", c.theorem.holds},
            {"class_size", c.theorem.class_size},
            {"generated_size", c.theorem.generated_size},
            {"only_in_class", std::move(only_class)},
            {"only_generated", std::move(only_generated)}}},
          {"members", c.members},
          {"closure_failures", c.closure_failures},
          {"periodicity_failures", c.periodicity_failures},
          {"energy_failures", c.energy_failures},
          {"zero_part_failures", c.zero_part_failures},
          {"reduction_failures", c.reduction_failures},
          {"max_clique_number", c.max_clique_number},
          {"seconds", c.seconds}};
}

}  // namespace cqm
