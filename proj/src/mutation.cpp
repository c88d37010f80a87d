#include "cqm/mutation.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "cqm/classifier.hpp"
#include "cqm/error.hpp"

namespace cqm {

namespace {

void check_vertex(const ColouredQuiver& q, Vertex j) {
  if (!q.contains(j))
    throw InvalidInput("vertex " + std::to_string(j + 1) + " out of range 1.." +
                       std::to_string(q.n()));
}

class Table {
 public:
  explicit Table(const ColouredQuiver& q)
      : m_(q.m()), n_(q.n()), mult_(q.multiplicities()) {}

  int& at(Vertex i, Vertex k, Colour c) {
    return mult_[(static_cast<std::size_t>(i) * n_ + k) * (m_ + 1) + c];
  }

  ColouredQuiver build() && { return ColouredQuiver::from_multiplicities(m_, n_, std::move(mult_)); }

 private:
  int m_;
  int n_;
  std::vector<int> mult_;
};

int narrow(std::int64_t x) {
  if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min())
    throw InvalidInput("arrow multiplicities overflow");
  return static_cast<int>(x);
}

int wrap(int c, int m) { return ((c % (m + 1)) + (m + 1)) % (m + 1); }

}  // namespace

ColouredQuiver mutate_steps(const ColouredQuiver& q, Vertex j) {
  check_vertex(q, j);
  require_valid(q);
  const int n = q.n(), m = q.m();
  Table t(q);

  for (Vertex i = 0; i < n; ++i) {
    if (i == j) continue;
    for (Vertex k = 0; k < n; ++k) {
      if (k == j || k == i) continue;
      const int b = q.mult(j, k, 0);
      if (b == 0) continue;
      for (Colour c = 0; c <= m; ++c) {
        const int a = q.mult(i, j, c);
        if (a == 0) continue;
        const std::int64_t added = std::int64_t{a} * b;
        t.at(i, k, c) = narrow(t.at(i, k, c) + added);
        t.at(k, i, m - c) = narrow(t.at(k, i, m - c) + added);
      }
    }
  }

  for (Vertex i = 0; i < n; ++i)
    for (Vertex k = 0; k < n; ++k) {
      if (i == k) continue;
      for (;;) {
        int present = 0, least = 0;
        for (Colour c = 0; c <= m; ++c) {
          const int x = t.at(i, k, c);
          if (x == 0) continue;
          least = present == 0 ? x : std::min(least, x);
          ++present;
        }
        if (present < 2) break;
        for (Colour c = 0; c <= m; ++c)
          if (t.at(i, k, c) > 0) t.at(i, k, c) -= least;
      }
    }

  std::vector<int> into(m + 1), out(m + 1);
  for (Vertex i = 0; i < n; ++i) {
    if (i == j) continue;
    for (Colour c = 0; c <= m; ++c) {
      into[wrap(c + 1, m)] = t.at(i, j, c);
      out[wrap(c - 1, m)] = t.at(j, i, c);
    }
    for (Colour c = 0; c <= m; ++c) {
      t.at(i, j, c) = into[c];
      t.at(j, i, c) = out[c];
    }
  }
  return std::move(t).build();
}

ColouredQuiver mutate_formula(const ColouredQuiver& q, Vertex j) {
  check_vertex(q, j);
  require_valid(q);
  const int n = q.n(), m = q.m();
  auto qm = [&](Vertex a, Vertex b, int c) { return q.mult(a, b, wrap(c, m)); };

  std::vector<int> mult(q.multiplicities().size(), 0);
  auto at = [&](Vertex i, Vertex k, Colour c) -> int& {
    return mult[(static_cast<std::size_t>(i) * n + k) * (m + 1) + c];
  };

  for (Vertex i = 0; i < n; ++i)
    for (Vertex k = 0; k < n; ++k) {
      if (i == k) continue;
      for (Colour c = 0; c <= m; ++c) {
        if (k == j) {
          at(i, k, c) = qm(i, j, c - 1);
        } else if (i == j) {
          at(i, k, c) = qm(j, k, c + 1);
        } else {
          std::int64_t others = 0;
          for (Colour s = 0; s <= m; ++s)
            if (s != c) others += q.mult(i, k, s);
          const std::int64_t value =
              q.mult(i, k, c) - others +
              std::int64_t{qm(i, j, c) - qm(i, j, c - 1)} * q.mult(j, k, 0) +
              std::int64_t{q.mult(i, j, m)} * (qm(j, k, c) - qm(j, k, c + 1));
          at(i, k, c) = narrow(std::max<std::int64_t>(0, value));
        }
      }
    }
  return ColouredQuiver::from_multiplicities(m, n, std::move(mult));
}

ColouredQuiver mutate_power(const ColouredQuiver& q, Vertex j, int t, PowerMode mode) {
  check_vertex(q, j);
  if (t < 0) throw InvalidInput("mutation power must be non-negative");
  if (mode == PowerMode::AssumeMember) t %= q.m() + 1;
  ColouredQuiver out = q;
  for (int s = 0; s < t; ++s) out = mutate_steps(out, j);
  return out;
}

ColouredQuiver inverse_in_class(const ColouredQuiver& q, Vertex j, MembershipCheck check) {
  check_vertex(q, j);
  if (check == MembershipCheck::Enforce) {
    auto verdict = is_member(q);
    if (!verdict.member)
      throw PreconditionError("quiver is not in the A_n class: " + verdict.summary());
  }
  return mutate_power(q, j, q.m());
}

ColouredQuiver apply_step(const ColouredQuiver& q, const MutationStep& step) {
  check_vertex(q, step.vertex);
  if (step.power < 1 || step.power > q.m() + 1)
    throw InvalidInput("mutation power " + std::to_string(step.power) + " outside 1.." +
                       std::to_string(q.m() + 1));
  return mutate_power(q, step.vertex, step.power);
}

ColouredQuiver apply_sequence(const ColouredQuiver& q, const MutationSequence& seq) {
  ColouredQuiver out = q;
  for (const auto& step : seq.steps) out = apply_step(out, step);
  return out;
}

MutationSequence inverse_sequence(const MutationSequence& seq, int m) {
  MutationSequence inv;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    const int power = m + 1 - it->power;
    if (power > 0) inv.steps.push_back({it->vertex, power});
  }
  return inv;
}

MutationSequence compress_in_class(const MutationSequence& seq, int m) {
  MutationSequence out;
  for (const auto& step : seq.steps) {
    if (!out.steps.empty() && out.steps.back().vertex == step.vertex) {
      out.steps.back().power += step.power;
    } else {
      out.steps.push_back(step);
    }
    out.steps.back().power %= m + 1;
    if (out.steps.back().power == 0) out.steps.pop_back();
  }
  return out;
}

}  // namespace cqm
