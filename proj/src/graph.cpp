#include "cqm/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cqm/error.hpp"

namespace cqm {

UnderlyingGraph::UnderlyingGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw InvalidInput("graph size must be non-negative");
}

void UnderlyingGraph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
    throw InvalidInput("edge endpoints out of range");
  adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
  adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
}

std::vector<Vertex> UnderlyingGraph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

int UnderlyingGraph::degree(Vertex v) const {
  int d = 0;
  for (Vertex u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

int UnderlyingGraph::edge_count() const {
  int e = 0;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b) e += adjacent(a, b) ? 1 : 0;
  return e;
}

std::vector<std::pair<Vertex, Vertex>> UnderlyingGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<Vertex>> UnderlyingGraph::components() const {
  std::vector<int> seen(n_, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex u = 0; u < n_; ++u)
        if (!seen[u] && adjacent(comp[head], u)) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool UnderlyingGraph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool UnderlyingGraph::is_clique(const std::vector<Vertex>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool UnderlyingGraph::is_path() const {
  if (n_ == 1) return true;
  if (!is_connected() || edge_count() != n_ - 1) return false;
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) > 2) return false;
  return true;
}

UnderlyingGraph UnderlyingGraph::induced(const std::vector<Vertex>& vertices) const {
  UnderlyingGraph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return sub;
}

namespace {

void bron_kerbosch(const UnderlyingGraph& g, std::vector<Vertex>& r, std::vector<Vertex> p,
                   std::vector<Vertex> x, std::vector<std::vector<Vertex>>& out) {
  if (p.empty() && x.empty()) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Pivot on the vertex of P u X with most neighbours in P.
  Vertex pivot = -1;
  int best = -1;
  for (const auto* set : {&p, &x})
    for (Vertex u : *set) {
      int count = 0;
      for (Vertex v : p) count += g.adjacent(u, v) ? 1 : 0;
      if (count > best) {
        best = count;
        pivot = u;
      }
    }
  std::vector<Vertex> candidates;
  for (Vertex v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);

  for (Vertex v : candidates) {
    std::vector<Vertex> np, nx;
    for (Vertex u : p)
      if (g.adjacent(v, u)) np.push_back(u);
    for (Vertex u : x)
      if (g.adjacent(v, u)) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const UnderlyingGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> r, p;
  for (Vertex v = 0; v < g.n(); ++v) p.push_back(v);
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> all_cliques(const UnderlyingGraph& g, int min_size) {
  std::set<std::vector<Vertex>> found;
  for (const auto& maximal : maximal_cliques(g)) {
    const auto k = maximal.size();
    if (static_cast<int>(k) < min_size) continue;
    // Subsets of a clique are cliques; maximal cliques here are small.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      if (std::popcount(mask) < min_size) continue;
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) sub.push_back(maximal[i]);
      found.insert(std::move(sub));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace cqm
