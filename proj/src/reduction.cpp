#include "cqm/reduction.hpp"

#include <algorithm>
#include <string>

#include "cqm/classifier.hpp"
#include "cqm/error.hpp"

namespace cqm {

namespace {

void require_member(const ColouredQuiver& q) {
  auto verdict = is_member(q);
  if (!verdict.member)
    throw PreconditionError("quiver is not in the A_n class: " + verdict.summary());
}

bool in(const std::vector<Vertex>& set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

// Tail pump on the path u_0 - u_1 - ... - u_L. Starting from the colouring
// with every u_j -> u_{j+1} of colour 0 it produces colours x_j, mutating only
// at u_1..u_L.
MutationSequence pump(const std::vector<Vertex>& u, const std::vector<Colour>& x) {
  MutationSequence seq;
  const std::size_t last = u.size() - 1;
  for (std::size_t j = 0; j < x.size(); ++j)
    for (Colour r = 0; r < x[j]; ++r)
      for (std::size_t i = last; i > j; --i) seq.steps.push_back({u[i], 1});
  return seq;
}

MutationSequence concat(MutationSequence a, const MutationSequence& b) {
  a.steps.insert(a.steps.end(), b.steps.begin(), b.steps.end());
  return a;
}

std::pair<Colour, Vertex> least_colour(const ColouredQuiver& q, Vertex v,
                                       const std::vector<Vertex>& clique) {
  std::pair<Colour, Vertex> best{q.m() + 1, -1};
  for (Vertex x : clique)
    if (x != v) best = std::min(best, {arrow_colour(q, v, x), x});
  return best;
}

void require_clique(const ColouredQuiver& q, const std::vector<Vertex>& clique) {
  for (Vertex v : clique)
    if (!q.contains(v)) throw InvalidInput("vertex out of range");
  if (clique.size() < 3) throw PreconditionError("witness clique must have at least 3 vertices");
  if (!underlying_graph(q).is_clique(clique)) throw PreconditionError("witness is not a clique");
}

// Lexicographically smallest among the longest simple paths.
std::vector<Vertex> longest_path(const UnderlyingGraph& g) {
  std::vector<Vertex> best, current;
  std::vector<char> used(g.n(), 0);
  auto dfs = [&](auto&& self, Vertex v) -> void {
    current.push_back(v);
    used[v] = 1;
    if (current.size() > best.size()) best = current;
    for (Vertex w : g.neighbours(v))
      if (!used[w]) self(self, w);
    used[v] = 0;
    current.pop_back();
  };
  for (Vertex s = 0; s < g.n(); ++s) dfs(dfs, s);
  return best;
}

}  // namespace

std::optional<std::vector<Vertex>> clique_tail(const ColouredQuiver& q,
                                               const std::vector<Vertex>& clique, Vertex v) {
  const auto g = underlying_graph(q);
  auto cut = [&](Vertex a, Vertex b) { return g.adjacent(a, b) && !(in(clique, a) && in(clique, b)); };
  std::vector<Vertex> path{v};
  Vertex prev = -1;
  for (;;) {
    Vertex cur = path.back(), next = -1;
    int degree = 0;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (!cut(cur, w)) continue;
      ++degree;
      if (w != prev) next = w;
    }
    if (degree > (prev < 0 ? 1 : 2)) return std::nullopt;
    if (next < 0) break;
    if (in(path, next)) return std::nullopt;
    prev = cur;
    path.push_back(next);
  }
  return path;
}

std::optional<ExtremalWitness> find_almost_extremal(const ColouredQuiver& q,
                                                    MembershipCheck check) {
  if (check == MembershipCheck::Enforce) require_member(q);
  if (is_path_quiver(q)) return std::nullopt;
  const auto g = underlying_graph(q);
  std::vector<std::vector<Vertex>> cliques;
  for (auto& c : maximal_cliques(g))
    if (c.size() >= 3) cliques.push_back(std::move(c));

  auto witness_at = [&](Vertex v) -> std::optional<ExtremalWitness> {
    for (const auto& c : cliques) {
      if (!in(c, v)) continue;
      if (auto tail = clique_tail(q, c, v))
        return ExtremalWitness{c, tail->size() == 1 ? CliqueKind::Extremal : CliqueKind::AlmostExtremal,
                               std::move(*tail)};
    }
    return std::nullopt;
  };

  for (Vertex v : longest_path(g))
    if (auto w = witness_at(v)) return w;
  for (Vertex v = 0; v < q.n(); ++v)
    if (auto w = witness_at(v)) return w;
  throw InternalError("class member without an almost extremal clique");
}

ColouredQuiver recolour_line_base(int n, int m) {
  std::vector<Colour> zero(n > 0 ? n - 1 : 0, 0);
  return recolour_line_target(n, m, zero);
}

ColouredQuiver recolour_line_target(int n, int m, std::span<const Colour> target) {
  if (n < 1) throw InvalidInput("vertex count n must be at least 1");
  if (static_cast<int>(target.size()) != n - 1)
    throw InvalidInput("target needs exactly n - 1 colours");
  QuiverBuilder b(m, n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_pair(i + 1, i, target[i]);
  return b.build();
}

MutationSequence recolour_line(int n, int m, std::span<const Colour> target) {
  const auto base = recolour_line_base(n, m);
  const auto goal = recolour_line_target(n, m, target);
  if (n == 1) return {};
  std::vector<Vertex> u;
  for (Vertex i = n - 1; i >= 0; --i) u.push_back(i);
  std::vector<Colour> x;
  for (int j = 0; j + 1 < n; ++j) x.push_back(target[n - 2 - j]);
  auto seq = compress_in_class(pump(u, x), m);
  if (apply_sequence(base, seq) != goal) throw InternalError("recolouring sequence failed replay");
  return seq;
}

CliqueWalk make_extremal(const ColouredQuiver& q, const ExtremalWitness& witness) {
  require_clique(q, witness.clique);
  const auto& tail = witness.tail;
  if (tail.size() < 2) throw PreconditionError("make_extremal needs a tail beyond the apex");
  const Vertex v = tail.front();
  if (!in(witness.clique, v)) throw PreconditionError("tail does not start in the clique");
  if (clique_tail(q, witness.clique, v) != tail)
    throw PreconditionError("tail is not the path component of the apex");

  const int m = q.m();
  const auto [c1, v1] = least_colour(q, v, witness.clique);
  std::vector<Colour> now, want;
  for (std::size_t j = 0; j + 1 < tail.size(); ++j) now.push_back(arrow_colour(q, tail[j], tail[j + 1]));
  want = now;
  want[0] = c1;

  MutationSequence seq = concat(inverse_sequence(pump(tail, now), m), pump(tail, want));
  seq.steps.push_back({v, c1 + 1});
  seq = compress_in_class(seq, m);
  auto out = apply_sequence(q, seq);

  ExtremalWitness next;
  for (Vertex x : witness.clique)
    if (x != v1) next.clique.push_back(x);
  next.clique.push_back(tail[1]);
  std::sort(next.clique.begin(), next.clique.end());
  next.tail.assign(tail.begin() + 1, tail.end());
  next.kind = next.tail.size() == 1 ? CliqueKind::Extremal : CliqueKind::AlmostExtremal;
  if (!underlying_graph(out).is_clique(next.clique) ||
      clique_tail(out, next.clique, next.tail.front()) != next.tail)
    throw InternalError("clique walk did not move the clique along its tail");
  return {std::move(out), std::move(seq), std::move(next)};
}

Reduction shrink_extremal(const ColouredQuiver& q, const ExtremalWitness& witness) {
  require_clique(q, witness.clique);
  if (witness.tail.size() != 1) throw PreconditionError("shrink_extremal needs an extremal clique");
  const Vertex v = witness.tail.front();
  if (!in(witness.clique, v)) throw PreconditionError("apex is not in the clique");
  const auto g = underlying_graph(q);
  if (g.degree(v) + 1 != static_cast<int>(witness.clique.size()))
    throw PreconditionError("apex has neighbours outside the clique");

  const auto [c1, v1] = least_colour(q, v, witness.clique);
  MutationSequence seq{{{v, c1 + 1}}};
  auto out = apply_sequence(q, seq);
  const auto h = underlying_graph(out);
  const int lost = static_cast<int>(witness.clique.size()) - 2;
  if (h.edge_count() != g.edge_count() - lost || !h.adjacent(v, v1))
    throw InternalError("shrinking an extremal clique did not detach v_1");
  for (Vertex x : witness.clique)
    if (x != v && x != v1 && h.adjacent(x, v1))
      throw InternalError("shrinking an extremal clique did not detach v_1");
  return {std::move(out), std::move(seq)};
}

Reduction reduce_to_line(const ColouredQuiver& q, MembershipCheck check) {
  if (check == MembershipCheck::Enforce) require_member(q);
  Reduction r{q, {}};
  const int cap = underlying_graph(q).edge_count() + 1;
  for (int round = 0; !is_path_quiver(r.quiver); ++round) {
    if (round >= cap) throw InternalError("reduction exceeded its iteration cap");
    auto witness = find_almost_extremal(r.quiver, MembershipCheck::Skip);
    if (!witness) break;
    while (witness->tail.size() > 1) {
      auto walk = make_extremal(r.quiver, *witness);
      r.quiver = std::move(walk.quiver);
      r.sequence = concat(std::move(r.sequence), walk.sequence);
      witness = std::move(walk.witness);
    }
    auto shrunk = shrink_extremal(r.quiver, *witness);
    r.quiver = std::move(shrunk.quiver);
    r.sequence = concat(std::move(r.sequence), shrunk.sequence);
  }
  r.sequence = compress_in_class(r.sequence, q.m());
  if (apply_sequence(q, r.sequence) != r.quiver)
    throw InternalError("reduction sequence failed replay");
  return r;
}

}  // namespace cqm
