#include "cqm/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <limits>
#include <string>

#include "cqm/classifier.hpp"
#include "cqm/error.hpp"
#include "cqm/mutation.hpp"

namespace cqm {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

MutationClass mutation_class(const ColouredQuiver& seed, const ClassOptions& options) {
  require_valid(seed);
  MutationClass cls{seed, {}, {}, {}, {}, 0, 0, 0};
  const std::uint64_t nfact = factorial(seed.n());

  auto admit = [&](const ColouredQuiver& q) -> std::size_t {
    auto lab = canonical_labelling(q);
    if (auto it = cls.index.find(lab.form); it != cls.index.end()) return it->second;
    if (cls.forms.size() >= options.limit)
      throw LimitExceeded("mutation class has more than " + std::to_string(options.limit) +
                              " isomorphism classes (possibly infinite or too large)",
                          cls.forms.size());
    const std::size_t id = cls.forms.size();
    cls.index.emplace(lab.form, id);
    cls.forms.push_back(lab.form);
    cls.representatives.push_back(relabel(q, lab.perm));
    cls.labelled_count += nfact / lab.automorphisms;
    return id;
  };

  if (options.check_membership) {
    ++cls.membership_checked;
    if (!is_member(seed).member) ++cls.membership_failures;
  }
  admit(seed);
  for (std::size_t head = 0; head < cls.forms.size(); ++head) {
    for (Vertex j = 0; j < seed.n(); ++j) {
      auto child = mutate_steps(cls.representatives[head], j);
      if (options.check_membership) {
        ++cls.membership_checked;
        if (!is_member(child).member) ++cls.membership_failures;
      }
      const std::size_t to = admit(child);
      cls.edges.push_back({head, j, to});
    }
  }
  return cls;
}

namespace {

struct EdgeSet {
  int n;
  std::vector<std::pair<Vertex, Vertex>> pairs;

  explicit EdgeSet(int n) : n(n) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }

  UnderlyingGraph graph(std::uint64_t mask) const {
    UnderlyingGraph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    return g;
  }
};

constexpr std::size_t kCountablePairs = 24;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

// Whether the graph can carry a member colouring at all.
bool admissible_shape(const UnderlyingGraph& g, int m) {
  if (!g.is_connected() || !is_chordal(g)) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!vertex_split(g, m, v)) return false;
  return true;
}

class Colourer {
 public:
  Colourer(const UnderlyingGraph& g, int m, std::set<CanonicalForm>& out)
      : g_(g), m_(m), out_(out), edges_(g.edges()), colour_(edges_.size(), 0) {
    const int n = g.n();
    std::vector<int> id(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      id[static_cast<std::size_t>(edges_[e].first) * n + edges_[e].second] = static_cast<int>(e);
    closing_.resize(edges_.size());
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c) {
          const int ab = id[a * n + b], bc = id[b * n + c], ac = id[a * n + c];
          if (ab < 0 || bc < 0 || ac < 0) continue;
          closing_[std::max({ab, bc, ac})].push_back({ab, bc, ac});
        }
  }

  void run() { assign(0); }

 private:
  void assign(std::size_t e) {
    if (e == edges_.size()) {
      QuiverBuilder b(m_, g_.n());
      for (std::size_t t = 0; t < edges_.size(); ++t)
        b.add_pair(edges_[t].first, edges_[t].second, colour_[t]);
      auto q = b.build();
      if (is_member(q).member) out_.insert(canonical_form(q));
      return;
    }
    for (Colour c = 0; c <= m_; ++c) {
      colour_[e] = c;
      bool ok = true;
      for (const auto& t : closing_[e]) {
        // a -> b -> c -> a, with c -> a coloured m - colour(a -> c).
        const int s = colour_[t[0]] + colour_[t[1]] + m_ - colour_[t[2]];
        if (s != m_ - 1 && s != 2 * m_ + 1) {
          ok = false;
          break;
        }
      }
      if (ok) assign(e + 1);
    }
  }

  const UnderlyingGraph& g_;
  int m_;
  std::set<CanonicalForm>& out_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Colour> colour_;
  std::vector<std::vector<std::array<int, 3>>> closing_;
};

}  // namespace

std::uint64_t generation_space(int n, int m) {
  if (n < 1 || m < 1) throw InvalidInput("generation needs n >= 1 and m >= 1");
  EdgeSet edges(n);
  const std::size_t p = edges.pairs.size();
  if (p > kCountablePairs) return saturating_pow(static_cast<std::uint64_t>(m) + 2, p);
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask)
    if (edges.graph(mask).is_connected())
      total += saturating_pow(static_cast<std::uint64_t>(m) + 1,
                              static_cast<std::size_t>(std::popcount(mask)));
  return total;
}

std::set<CanonicalForm> generate_members(int n, int m, std::uint64_t budget) {
  const std::uint64_t space = generation_space(n, m);
  if (space > budget)
    throw LimitExceeded("generation search space of " + std::to_string(space) +
                            " colourings exceeds the budget of " + std::to_string(budget),
                        static_cast<std::size_t>(space));
  std::set<CanonicalForm> out;
  EdgeSet edges(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.pairs.size()); ++mask) {
    auto g = edges.graph(mask);
    if (!admissible_shape(g, m)) continue;
    Colourer(g, m, out).run();
  }
  return out;
}

TheoremReport verify_theorem_A(int n, int m, std::size_t limit, std::uint64_t budget) {
  TheoremReport report;
  report.n = n;
  report.m = m;
  auto cls = mutation_class(linear_quiver(n, m), {limit, false});
  auto generated = generate_members(n, m, budget);
  std::set<CanonicalForm> from_class(cls.forms.begin(), cls.forms.end());
  report.class_size = from_class.size();
  report.generated_size = generated.size();
  std::set_difference(from_class.begin(), from_class.end(), generated.begin(), generated.end(),
                      std::back_inserter(report.only_in_class));
  std::set_difference(generated.begin(), generated.end(), from_class.begin(), from_class.end(),
                      std::back_inserter(report.only_generated));
  report.holds = report.only_in_class.empty() && report.only_generated.empty();
  return report;
}

}  // namespace cqm
