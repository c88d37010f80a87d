#include "cqm/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cqm/error.hpp"

namespace cqm {

ColouredQuiver::ColouredQuiver(int m, int n)
    : m_(m), n_(n) {
  if (m < 1) throw InvalidInput("colour parameter m must be at least 1");
  if (n < 1) throw InvalidInput("vertex count n must be at least 1");
  mult_.assign(static_cast<std::size_t>(n) * n * (m + 1), 0);
}

ColouredQuiver::ColouredQuiver(int m, int n, std::vector<int> mult)
    : m_(m), n_(n), mult_(std::move(mult)) {}

ColouredQuiver ColouredQuiver::from_multiplicities(int m, int n, std::vector<int> mult) {
  ColouredQuiver shape(m, n);
  if (mult.size() != shape.mult_.size())
    throw InvalidInput("multiplicity table has the wrong size");
  if (std::any_of(mult.begin(), mult.end(), [](int x) { return x < 0; }))
    throw InvalidInput("multiplicities must be non-negative");
  return ColouredQuiver(m, n, std::move(mult));
}

int ColouredQuiver::total_mult(Vertex from, Vertex to) const {
  const auto base = index(from, to, 0);
  return std::accumulate(mult_.begin() + static_cast<std::ptrdiff_t>(base),
                         mult_.begin() + static_cast<std::ptrdiff_t>(base + m_ + 1), 0);
}

std::optional<Colour> ColouredQuiver::colour(Vertex from, Vertex to) const {
  for (Colour c = 0; c <= m_; ++c)
    if (mult(from, to, c) > 0) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

QuiverBuilder::QuiverBuilder(int m, int n) : m_(m), n_(n) {
  if (m < 1) throw InvalidInput("colour parameter m must be at least 1");
  if (n < 1) throw InvalidInput("vertex count n must be at least 1");
  mult_.assign(static_cast<std::size_t>(n) * n * (m + 1), 0);
}

void QuiverBuilder::check(Vertex from, Vertex to, Colour c, int count) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) throw InvalidInput("vertex out of range");
  if (c < 0 || c > m_) throw InvalidInput("colour out of range");
  if (count < 0) throw InvalidInput("arrow count must be non-negative");
}

QuiverBuilder& QuiverBuilder::add_arrows(Vertex from, Vertex to, Colour c, int count) {
  check(from, to, c, count);
  mult_[(static_cast<std::size_t>(from) * n_ + to) * (m_ + 1) + c] += count;
  return *this;
}

QuiverBuilder& QuiverBuilder::add_pair(Vertex from, Vertex to, Colour c, int count) {
  check(from, to, c, count);
  add_arrows(from, to, c, count);
  add_arrows(to, from, m_ - c, count);
  return *this;
}

ColouredQuiver QuiverBuilder::build() const {
  return ColouredQuiver::from_multiplicities(m_, n_, mult_);
}

// ---------------------------------------------------------------------------

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    // 1-based, as in the file format.
    os << ' ';
    switch (v.kind) {
      case Violation::Kind::Loop: os << "loop at " << v.from + 1; break;
      case Violation::Kind::Bichromatic:
        os << "bichromatic pair (" << v.from + 1 << "," << v.to + 1 << ")";
        break;
      case Violation::Kind::SkewSymmetry:
        os << "skew-symmetry at (" << v.from + 1 << "," << v.to + 1 << "," << v.colours.front()
           << ")";
        break;
    }
    os << ';';
  }
  return os.str();
}

ValidationReport validate(const ColouredQuiver& q) {
  ValidationReport report;
  const int n = q.n(), m = q.m();
  for (Vertex i = 0; i < n; ++i)
    for (Colour c = 0; c <= m; ++c)
      if (q.mult(i, i, c) > 0) report.violations.push_back({Violation::Kind::Loop, i, i, {c}});

  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Colour> present;
      for (Colour c = 0; c <= m; ++c)
        if (q.mult(i, j, c) > 0) present.push_back(c);
      if (present.size() > 1)
        report.violations.push_back({Violation::Kind::Bichromatic, i, j, present});
    }

  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Colour c = 0; c <= m; ++c)
        if (q.mult(i, j, c) != q.mult(j, i, m - c))
          report.violations.push_back({Violation::Kind::SkewSymmetry, i, j, {c}});
    }
  return report;
}

void require_valid(const ColouredQuiver& q) {
  auto report = validate(q);
  if (!report.ok()) throw InvalidInput("invalid coloured quiver: " + report.summary());
}

ColouredQuiver linear_quiver(int n, int m, std::span<const Colour> colours) {
  QuiverBuilder b(m, n);
  if (!colours.empty() && static_cast<int>(colours.size()) != n - 1)
    throw InvalidInput("linear quiver needs exactly n - 1 colours");
  for (Vertex i = 0; i + 1 < n; ++i) b.add_pair(i, i + 1, colours.empty() ? 0 : colours[i]);
  return b.build();
}

UnderlyingGraph underlying_graph(const ColouredQuiver& q) {
  UnderlyingGraph g(q.n());
  for (Vertex i = 0; i < q.n(); ++i)
    for (Vertex j = 0; j < q.n(); ++j)
      if (i != j && q.has_arrow(i, j)) g.add_edge(i, j);
  return g;
}

bool is_simple(const ColouredQuiver& q) {
  for (Vertex i = 0; i < q.n(); ++i)
    for (Vertex j = 0; j < q.n(); ++j)
      if (q.total_mult(i, j) > 1) return false;
  return true;
}

bool is_connected(const ColouredQuiver& q) { return underlying_graph(q).is_connected(); }

bool is_path_quiver(const ColouredQuiver& q) { return underlying_graph(q).is_path(); }

SimpleView to_simple_view(const ColouredQuiver& q) {
  if (!is_simple(q)) throw PreconditionError("quiver is not simple");
  SimpleView view{q.m(), q.n(), {}};
  for (Vertex i = 0; i < q.n(); ++i)
    for (Vertex j = i + 1; j < q.n(); ++j)
      if (auto c = q.colour(i, j)) view.edges.emplace(std::pair{i, j}, *c);
  return view;
}

ColouredQuiver from_simple_view(const SimpleView& view) {
  QuiverBuilder b(view.m, view.n);
  for (const auto& [edge, c] : view.edges) {
    if (edge.first >= edge.second) throw InvalidInput("simple view edges must have i < j");
    b.add_pair(edge.first, edge.second, c);
  }
  return b.build();
}

Colour arrow_colour(const ColouredQuiver& q, Vertex from, Vertex to) {
  if (!q.contains(from) || !q.contains(to)) throw InvalidInput("vertex out of range");
  auto c = q.colour(from, to);
  if (!c) {
    std::ostringstream os;
    os << "no arrow " << from + 1 << " -> " << to + 1;
    throw PreconditionError(os.str());
  }
  return *c;
}

ColouredQuiver relabel(const ColouredQuiver& q, std::span<const Vertex> perm) {
  const int n = q.n();
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation has the wrong size");
  std::vector<int> seen(n, 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || seen[v]++) throw InvalidInput("not a permutation");
  }
  QuiverBuilder b(q.m(), n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      for (Colour c = 0; c <= q.m(); ++c)
        if (int k = q.mult(i, j, c)) b.add_arrows(perm[i], perm[j], c, k);
  return b.build();
}

}  // namespace cqm
