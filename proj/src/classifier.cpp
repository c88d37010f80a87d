#include "cqm/classifier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cqm/error.hpp"

namespace cqm {

std::string to_string(MembershipFailure::Kind kind) {
  switch (kind) {
    case MembershipFailure::Kind::NotSimple: return "NotSimple";
    case MembershipFailure::Kind::NotConnected: return "NotConnected";
    case MembershipFailure::Kind::Hole: return "Hole";
    case MembershipFailure::Kind::BadVertexSplit: return "BadVertexSplit";
    case MembershipFailure::Kind::BadTriangle: return "BadTriangle";
  }
  return "Unknown";
}

bool MembershipVerdict::has(MembershipFailure::Kind kind) const {
  return std::any_of(failures.begin(), failures.end(),
                     [kind](const MembershipFailure& f) { return f.kind == kind; });
}

std::string MembershipVerdict::summary() const {
  if (member) return "member";
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    const auto& f = failures[i];
    if (i) os << "; ";
    os << to_string(f.kind);
    if (!f.vertices.empty()) {
      os << '(';
      for (std::size_t t = 0; t < f.vertices.size(); ++t) os << (t ? "," : "") << f.vertices[t] + 1;
      os << ')';
    }
    if (f.kind == MembershipFailure::Kind::BadTriangle)
      os << " sums " << f.sums.first << '/' << f.sums.second;
  }
  return os.str();
}

bool is_chordal(const UnderlyingGraph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0), position(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex u = 0; u < n; ++u)
      if (position[u] < 0 && (best < 0 || weight[u] > weight[best])) best = u;
    position[best] = step;
    order.push_back(best);
    for (Vertex u : g.neighbours(best))
      if (position[u] < 0) ++weight[u];
  }
  // Reverse MCS order must be a perfect elimination ordering.
  for (Vertex v : order) {
    Vertex parent = -1;
    std::vector<Vertex> earlier;
    for (Vertex u : g.neighbours(v))
      if (position[u] < position[v]) {
        earlier.push_back(u);
        if (parent < 0 || position[u] > position[parent]) parent = u;
      }
    for (Vertex u : earlier)
      if (u != parent && !g.adjacent(u, parent)) return false;
  }
  return true;
}

namespace {

std::vector<Vertex> normalise_cycle(std::vector<Vertex> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

// Shortest a..c path avoiding the closed neighbourhood of b (except a and c).
std::optional<std::vector<Vertex>> path_avoiding(const UnderlyingGraph& g, Vertex a, Vertex b,
                                                 Vertex c) {
  const int n = g.n();
  std::vector<Vertex> parent(n, -2);
  std::deque<Vertex> queue{a};
  parent[a] = -1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == c) break;
    for (Vertex y : g.neighbours(x)) {
      if (parent[y] != -2 || y == b) continue;
      if (y != c && g.adjacent(y, b)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[c] == -2) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex x = c; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::vector<Vertex>> find_hole(const UnderlyingGraph& g) {
  if (is_chordal(g)) return std::nullopt;
  std::optional<std::vector<Vertex>> best;
  for (Vertex b = 0; b < g.n(); ++b) {
    auto nb = g.neighbours(b);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        auto path = path_avoiding(g, nb[i], b, nb[j]);
        if (!path) continue;
        path->push_back(b);
        auto cycle = normalise_cycle(std::move(*path));
        if (!best || cycle.size() < best->size() ||
            (cycle.size() == best->size() && cycle < *best))
          best = std::move(cycle);
      }
  }
  if (!best) throw InternalError("non-chordal graph without a recoverable hole");
  return best;
}

std::optional<std::vector<Vertex>> find_hole(const ColouredQuiver& q) {
  return find_hole(underlying_graph(q));
}

std::optional<CliqueDecomposition> vertex_split(const UnderlyingGraph& g, int m, Vertex v) {
  if (v < 0 || v >= g.n()) throw InvalidInput("vertex out of range");
  auto nb = g.neighbours(v);
  CliqueDecomposition d{v, {}, {}};
  if (nb.empty()) return d;
  auto local = g.induced(nb).components();
  if (local.size() > 2) return std::nullopt;
  std::vector<std::vector<Vertex>> parts;
  for (const auto& comp : local) {
    std::vector<Vertex> part;
    for (Vertex x : comp) part.push_back(nb[x]);
    if (!g.is_clique(part) || static_cast<int>(part.size()) > m + 1) return std::nullopt;
    parts.push_back(std::move(part));
  }
  d.partA = std::move(parts[0]);
  if (parts.size() > 1) d.partB = std::move(parts[1]);
  return d;
}

std::optional<CliqueDecomposition> vertex_split(const ColouredQuiver& q, Vertex v) {
  if (!q.contains(v)) throw InvalidInput("vertex out of range");
  if (!is_simple(q)) throw PreconditionError("vertex_split needs a simple quiver");
  return vertex_split(underlying_graph(q), q.m(), v);
}

std::pair<int, int> triangle_sums(const ColouredQuiver& q, Vertex v1, Vertex v2, Vertex v3) {
  for (Vertex v : {v1, v2, v3})
    if (!q.contains(v)) throw InvalidInput("vertex out of range");
  if (v1 == v2 || v2 == v3 || v1 == v3) throw PreconditionError("triangle vertices must differ");
  if (!is_simple(q)) throw PreconditionError("triangle_sums needs a simple quiver");
  const int s = arrow_colour(q, v1, v2) + arrow_colour(q, v2, v3) + arrow_colour(q, v3, v1);
  return {s, 3 * q.m() - s};
}

bool triangle_admissible(int m, std::pair<int, int> sums) {
  return sums.first == m - 1 || sums.first == 2 * m + 1;
}

MembershipVerdict is_member(const ColouredQuiver& q) {
  using Kind = MembershipFailure::Kind;
  MembershipVerdict verdict;
  auto fail = [&](MembershipFailure f) {
    verdict.member = false;
    verdict.failures.push_back(std::move(f));
  };

  if (!is_simple(q)) {
    fail({Kind::NotSimple, {}, {}});
    return verdict;
  }
  const auto g = underlying_graph(q);
  if (!g.is_connected()) fail({Kind::NotConnected, {}, {}});
  if (auto hole = find_hole(g)) fail({Kind::Hole, *hole, {}});
  for (Vertex v = 0; v < q.n(); ++v)
    if (!vertex_split(g, q.m(), v)) fail({Kind::BadVertexSplit, {v}, {}});
  for (Vertex a = 0; a < q.n(); ++a)
    for (Vertex b = a + 1; b < q.n(); ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < q.n(); ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        auto sums = triangle_sums(q, a, b, c);
        if (!triangle_admissible(q.m(), sums)) fail({Kind::BadTriangle, {a, b, c}, sums});
      }
    }
  return verdict;
}

}  // namespace cqm
