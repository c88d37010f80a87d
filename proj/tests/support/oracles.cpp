#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "cqm/io.hpp"
#include "cqm/mutation.hpp"

#ifndef CQM_TEST_DATA_DIR
#error "CQM_TEST_DATA_DIR must be defined"
#endif

namespace cqm::testing {

std::string data_path(const std::string& name) { return std::string(CQM_TEST_DATA_DIR) + "/" + name; }

ColouredQuiver load(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return read_quiver(os.str());
}

ColouredQuiver make(int m, int n, std::initializer_list<std::array<int, 3>> arrows) {
  QuiverBuilder b(m, n);
  for (const auto& [from, to, colour] : arrows) b.add_pair(from - 1, to - 1, colour);
  return b.build();
}

ColouredQuiver random_valid_quiver(std::mt19937& rng, int n, int m, int max_mult, double density) {
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> colour(0, m), mult(1, max_mult);
  QuiverBuilder b(m, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (present(rng)) b.add_pair(i, j, colour(rng), mult(rng));
  return b.build();
}

ColouredQuiver random_reachable_quiver(std::mt19937& rng, int n, int m, int max_mult, int walk) {
  std::bernoulli_distribution present(0.5);
  std::uniform_int_distribution<int> mult(1, max_mult), vertex(0, n - 1);
  QuiverBuilder b(m, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (present(rng)) b.add_pair(i, j, 0, mult(rng));
  auto q = b.build();
  for (int s = 0; s < walk; ++s) {
    auto next = mutate_steps(q, vertex(rng));
    const auto& mult = next.multiplicities();
    if (*std::max_element(mult.begin(), mult.end()) > 1000) break;
    q = std::move(next);
  }
  return q;
}

ColouredQuiver arrow_list_mutation(const ColouredQuiver& q, Vertex j) {
  const int n = q.n(), m = q.m();
  using Arrow = std::tuple<Vertex, Vertex, Colour>;
  std::vector<Arrow> arrows;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Colour c = 0; c <= m; ++c)
        for (int k = 0; k < q.mult(a, b, c); ++k) arrows.emplace_back(a, b, c);

  std::vector<Arrow> added;
  for (const auto& [i, t1, c] : arrows) {
    if (t1 != j) continue;
    for (const auto& [s2, k, c2] : arrows) {
      if (s2 != j || c2 != 0 || k == i) continue;
      added.emplace_back(i, k, c);
      added.emplace_back(k, i, m - c);
    }
  }
  arrows.insert(arrows.end(), added.begin(), added.end());

  // Remove one arrow of each present colour at a time until one colour is left.
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      for (;;) {
        std::set<Colour> colours;
        for (const auto& [x, y, c] : arrows)
          if (x == a && y == b) colours.insert(c);
        if (colours.size() < 2) break;
        for (Colour c : colours) {
          auto it = std::find(arrows.begin(), arrows.end(), Arrow{a, b, c});
          arrows.erase(it);
        }
      }
    }

  QuiverBuilder out(m, n);
  for (auto [a, b, c] : arrows) {
    if (b == j) c = (c + 1) % (m + 1);
    if (a == j) c = (c + m) % (m + 1);
    out.add_arrows(a, b, c);
  }
  return out.build();
}

namespace {

bool same_under(const ColouredQuiver& a, const ColouredQuiver& b, const std::vector<Vertex>& p) {
  for (Vertex i = 0; i < a.n(); ++i)
    for (Vertex j = 0; j < a.n(); ++j)
      for (Colour c = 0; c <= a.m(); ++c)
        if (a.mult(i, j, c) != b.mult(p[i], p[j], c)) return false;
  return true;
}

}  // namespace

bool brute_isomorphic(const ColouredQuiver& a, const ColouredQuiver& b) {
  if (a.m() != b.m() || a.n() != b.n()) return false;
  std::vector<Vertex> p(a.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (same_under(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::uint64_t brute_automorphisms(const ColouredQuiver& q) {
  std::vector<Vertex> p(q.n());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    if (same_under(q, q, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix matrix_mutate(const Matrix& b, int k) {
  const int n = static_cast<int>(b.size());
  Matrix out = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        const int sign = (b[i][k] > 0) - (b[i][k] < 0);
        out[i][j] = b[i][j] + sign * std::max(b[i][k] * b[k][j], 0);
      }
    }
  return out;
}

Matrix matrix_canonical(const Matrix& b) {
  const int n = static_cast<int>(b.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Matrix best;
  do {
    Matrix c(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[i][j] = b[p[i]][p[j]];
    if (best.empty() || c < best) best = c;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace

std::size_t matrix_class_size(int n) {
  Matrix seed(n, std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; ++i) {
    seed[i][i + 1] = 1;
    seed[i + 1][i] = -1;
  }
  std::set<Matrix> seen{matrix_canonical(seed)};
  std::vector<Matrix> queue{seed};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int k = 0; k < n; ++k) {
      auto next = matrix_mutate(queue[head], k);
      if (seen.insert(matrix_canonical(next)).second) queue.push_back(next);
    }
  return seen.size();
}

int brute_energy(const ColouredQuiver& q, std::vector<Vertex> clique) {
  std::sort(clique.begin(), clique.end());
  int best = -1;
  do {
    int w = 0;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      const Vertex a = clique[i], b = clique[(i + 1) % clique.size()];
      for (Colour c = 0; c <= q.m(); ++c)
        if (q.mult(a, b, c)) w += c;
    }
    if (best < 0 || w < best) best = w;
  } while (std::next_permutation(clique.begin(), clique.end()));
  return best;
}

std::vector<std::vector<Vertex>> brute_zero_cycles(const ColouredQuiver& q) {
  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  std::vector<char> used(q.n(), 0);
  auto dfs = [&](auto&& self, Vertex v) -> void {
    for (Vertex w = 0; w < q.n(); ++w) {
      if (w == v || q.mult(v, w, 0) == 0) continue;
      if (w == path.front()) {
        auto cycle = path;
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        found.insert(cycle);
      } else if (!used[w]) {
        used[w] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < q.n(); ++s) {
    path = {s};
    used.assign(q.n(), 0);
    used[s] = 1;
    dfs(dfs, s);
  }
  return {found.begin(), found.end()};
}

}  // namespace cqm::testing
