#include "cqm/analysis.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "cqm/classifier.hpp"
#include "cqm/error.hpp"

namespace cqm {

namespace {

void require_member(const ColouredQuiver& q, MembershipCheck check) {
  if (check == MembershipCheck::Skip) return;
  auto verdict = is_member(q);
  if (!verdict.member)
    throw PreconditionError("quiver is not in the A_n class: " + verdict.summary());
}

void require_clique(const ColouredQuiver& q, std::vector<Vertex>& clique) {
  for (Vertex v : clique)
    if (!q.contains(v)) throw InvalidInput("vertex out of range");
  std::sort(clique.begin(), clique.end());
  if (std::adjacent_find(clique.begin(), clique.end()) != clique.end())
    throw InvalidInput("clique lists a vertex twice");
  if (clique.size() < 3) throw PreconditionError("energy is defined for cliques of size >= 3");
  if (!is_simple(q)) throw PreconditionError("energy needs a simple quiver");
  if (!underlying_graph(q).is_clique(clique)) throw PreconditionError("vertex set is not a clique");
}

template <typename Visit>
void for_each_cycle(const ColouredQuiver& q, std::vector<Vertex> order, Visit visit) {
  do {
    int w = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      w += arrow_colour(q, order[i], order[(i + 1) % order.size()]);
    visit(order, w);
  } while (std::next_permutation(order.begin() + 1, order.end()));
}

}  // namespace

int path_weight(const ColouredQuiver& q, std::span<const Vertex> p) {
  if (!is_simple(q)) throw PreconditionError("path weight needs a simple quiver");
  int w = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) w += arrow_colour(q, p[i], p[i + 1]);
  return w;
}

CliqueEnergy clique_energy(const ColouredQuiver& q, std::vector<Vertex> clique) {
  require_clique(q, clique);
  CliqueEnergy out{clique, std::numeric_limits<int>::max(), {}};
  for_each_cycle(q, clique, [&](const std::vector<Vertex>& order, int w) {
    if (w < out.delta) {
      out.delta = w;
      out.witness = order;
    }
  });
  return out;
}

std::vector<int> hamiltonian_cycle_weights(const ColouredQuiver& q, std::vector<Vertex> clique) {
  require_clique(q, clique);
  std::vector<int> weights;
  for_each_cycle(q, clique, [&](const std::vector<Vertex>&, int w) { weights.push_back(w); });
  return weights;
}

std::vector<int> admissible_cycle_weights(int k, int m) {
  std::vector<int> out;
  for (int i = 0; i <= k - 2; ++i) out.push_back((k - 2 - i) * (m - 1) + i * (2 * m + 1) - (k - 3) * m);
  return out;
}

bool EnergyReport::ok() const {
  return std::all_of(cliques.begin(), cliques.end(),
                     [](const CliqueEnergyCheck& c) { return c.ok(); });
}

EnergyReport verify_energy(const ColouredQuiver& q, MembershipCheck check) {
  require_member(q, check);
  if (!is_simple(q)) throw PreconditionError("energy needs a simple quiver");
  EnergyReport report;
  for (const auto& clique : all_cliques(underlying_graph(q), 3)) {
    const int k = static_cast<int>(clique.size());
    const auto allowed = admissible_cycle_weights(k, q.m());
    CliqueEnergyCheck c{clique, std::numeric_limits<int>::max(), q.m() + 2 - k, {}};
    for (int w : hamiltonian_cycle_weights(q, clique)) {
      c.delta = std::min(c.delta, w);
      if (std::find(allowed.begin(), allowed.end(), w) == allowed.end() &&
          std::find(c.stray_weights.begin(), c.stray_weights.end(), w) == c.stray_weights.end())
        c.stray_weights.push_back(w);
    }
    std::sort(c.stray_weights.begin(), c.stray_weights.end());
    report.cliques.push_back(std::move(c));
  }
  return report;
}

int clique_number(const ColouredQuiver& q) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(underlying_graph(q))) best = std::max(best, c.size());
  return static_cast<int>(best);
}

int ZeroPart::in_degree(Vertex v) const {
  int d = 0;
  for (const auto& a : arrows)
    if (a.to == v) d += a.mult;
  return d;
}

int ZeroPart::out_degree(Vertex v) const {
  int d = 0;
  for (const auto& a : arrows)
    if (a.from == v) d += a.mult;
  return d;
}

ZeroPart zero_part(const ColouredQuiver& q) {
  ZeroPart part{q.n(), {}};
  for (Vertex i = 0; i < q.n(); ++i)
    for (Vertex j = 0; j < q.n(); ++j)
      if (i != j && q.mult(i, j, 0) > 0) part.arrows.push_back({i, j, q.mult(i, j, 0)});
  return part;
}

std::vector<std::vector<Vertex>> simple_cycles(const ZeroPart& part) {
  const int n = part.n;
  std::vector<std::vector<Vertex>> succ(n);
  for (const auto& a : part.arrows) succ[a.from].push_back(a.to);
  for (auto& s : succ) std::sort(s.begin(), s.end());

  std::vector<std::vector<Vertex>> cycles;
  std::vector<char> blocked(n);
  std::vector<std::vector<Vertex>> blocked_by(n);
  std::vector<Vertex> stack;

  std::function<void(Vertex)> unblock = [&](Vertex u) {
    blocked[u] = 0;
    while (!blocked_by[u].empty()) {
      Vertex w = blocked_by[u].back();
      blocked_by[u].pop_back();
      if (blocked[w]) unblock(w);
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (auto& b : blocked_by) b.clear();
    std::function<bool(Vertex)> circuit = [&](Vertex v) {
      bool found = false;
      stack.push_back(v);
      blocked[v] = 1;
      for (Vertex w : succ[v]) {
        if (w < s) continue;
        if (w == s) {
          cycles.push_back(stack);
          found = true;
        } else if (!blocked[w] && circuit(w)) {
          found = true;
        }
      }
      if (found) {
        unblock(v);
      } else {
        for (Vertex w : succ[v])
          if (w >= s && std::find(blocked_by[w].begin(), blocked_by[w].end(), v) == blocked_by[w].end())
            blocked_by[w].push_back(v);
      }
      stack.pop_back();
      return found;
    };
    circuit(s);
  }
  return cycles;
}

ZeroPartReport check_zero_part(const ColouredQuiver& q, MembershipCheck check) {
  require_member(q, check);
  ZeroPartReport report;
  report.part = zero_part(q);
  report.expected_cycle_length = q.m() + 2;
  report.cycles = simple_cycles(report.part);
  for (const auto& c : report.cycles)
    if (static_cast<int>(c.size()) != report.expected_cycle_length) report.bad_cycles.push_back(c);
  for (Vertex v = 0; v < q.n(); ++v)
    if (report.part.in_degree(v) > 2 || report.part.out_degree(v) > 2)
      report.bad_valency.push_back(v);
  return report;
}

std::string zero_part_dot(const ZeroPart& part) {
  std::ostringstream os;
  os << "digraph zero_part {\n";
  for (Vertex v = 0; v < part.n; ++v) os << "  " << v + 1 << ";\n";
  for (const auto& a : part.arrows)
    for (int k = 0; k < a.mult; ++k) os << "  " << a.from + 1 << " -> " << a.to + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cqm
