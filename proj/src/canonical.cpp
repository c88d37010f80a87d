#include "cqm/canonical.hpp"

#include <algorithm>
#include <array>
#include <compare>

#include "cqm/error.hpp"

namespace cqm {

namespace {

// Cell entry for the ordered pair (a, b): colour + 1 of a -> b (0 if absent)
// and its multiplicity.
struct Entry {
  int colour;
  int mult;
  auto operator<=>(const Entry&) const = default;
};

Entry entry(const ColouredQuiver& q, Vertex a, Vertex b) {
  if (auto c = q.colour(a, b)) return {*c + 1, q.mult(a, b, *c)};
  return {0, 0};
}

std::vector<int> refine(const ColouredQuiver& q) {
  const int n = q.n();
  using Signature = std::vector<int>;
  auto rank = [n](const std::vector<Signature>& sig) {
    std::vector<Signature> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(n);
    for (Vertex v = 0; v < n; ++v)
      out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                sorted.begin());
    return std::pair{out, static_cast<int>(sorted.size())};
  };

  std::vector<Signature> sig(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::pair<int, int>> out;
    for (Vertex u = 0; u < n; ++u)
      if (u != v)
        if (auto e = entry(q, v, u); e.colour) out.emplace_back(e.colour, e.mult);
    std::sort(out.begin(), out.end());
    sig[v].push_back(static_cast<int>(out.size()));
    for (auto [c, k] : out) {
      sig[v].push_back(c);
      sig[v].push_back(k);
    }
  }
  auto [cells, count] = rank(sig);

  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::array<int, 3>> around;
      for (Vertex u = 0; u < n; ++u)
        if (u != v)
          if (auto e = entry(q, v, u); e.colour) around.push_back({cells[u], e.colour, e.mult});
      std::sort(around.begin(), around.end());
      sig[v] = {cells[v]};
      for (const auto& a : around) sig[v].insert(sig[v].end(), a.begin(), a.end());
    }
    auto [next, next_count] = rank(sig);
    cells = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  return cells;
}

class Search {
 public:
  Search(const ColouredQuiver& q, const std::vector<int>& cells) : q_(q), n_(q.n()) {
    cell_at_ = cells;
    std::sort(cell_at_.begin(), cell_at_.end());
    cell_of_ = cells;
    current_.resize(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    used_.assign(n_, 0);
    placed_.assign(n_, -1);
  }

  void run() { descend(0, false); }

  const std::vector<Entry>& best() const { return best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }
  std::uint64_t count() const { return count_; }

 private:
  // state: false = current prefix equals best prefix, true = strictly smaller.
  void descend(int p, bool smaller) {
    if (p == n_) {
      if (smaller || best_.empty()) {
        best_ = current_;
        best_order_ = placed_;
        count_ = 1;
        ++generation_;
      } else {
        ++count_;
      }
      return;
    }
    const std::size_t offset = static_cast<std::size_t>(p) * (p - 1) / 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || cell_of_[v] != cell_at_[p]) continue;
      bool next = smaller || best_.empty();
      bool worse = false;
      for (int t = 0; t < p; ++t) {
        current_[offset + t] = entry(q_, placed_[t], v);
        if (!next) {
          const auto cmp = current_[offset + t] <=> best_[offset + t];
          if (cmp < 0) next = true;
          if (cmp > 0) {
            worse = true;
            break;
          }
        }
      }
      if (worse) continue;
      const auto before = generation_;
      used_[v] = 1;
      placed_[p] = v;
      descend(p + 1, next);
      used_[v] = 0;
      if (generation_ != before) smaller = false;
    }
  }

  const ColouredQuiver& q_;
  int n_;
  std::vector<int> cell_at_;
  std::vector<int> cell_of_;
  std::vector<Entry> current_;
  std::vector<int> used_;
  std::vector<Vertex> placed_;
  std::vector<Entry> best_;
  std::vector<Vertex> best_order_;
  std::uint64_t count_ = 0;
  std::uint64_t generation_ = 0;
};

void put_varint(std::string& out, unsigned value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

unsigned get_varint(const std::string& in, std::size_t& pos) {
  unsigned value = 0;
  for (int shift = 0;; shift += 7) {
    if (pos >= in.size() || shift > 28) throw InvalidInput("malformed canonical form");
    const auto byte = static_cast<unsigned char>(in[pos++]);
    value |= static_cast<unsigned>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) return value;
  }
}

}  // namespace

CanonicalLabelling canonical_labelling(const ColouredQuiver& q) {
  require_valid(q);
  const auto cells = refine(q);
  Search search(q, cells);
  search.run();

  CanonicalLabelling out;
  out.automorphisms = search.count();
  out.perm.assign(q.n(), 0);
  const auto& order = search.best_order();
  for (int p = 0; p < q.n(); ++p) out.perm[order[p]] = p;

  put_varint(out.form, static_cast<unsigned>(q.m()));
  put_varint(out.form, static_cast<unsigned>(q.n()));
  for (const auto& e : search.best()) {
    put_varint(out.form, static_cast<unsigned>(e.colour));
    if (e.colour) put_varint(out.form, static_cast<unsigned>(e.mult));
  }
  return out;
}

CanonicalForm canonical_form(const ColouredQuiver& q) { return canonical_labelling(q).form; }

ColouredQuiver canonical_representative(const ColouredQuiver& q) {
  return relabel(q, canonical_labelling(q).perm);
}

ColouredQuiver quiver_from_form(const CanonicalForm& form) {
  std::size_t pos = 0;
  const int m = static_cast<int>(get_varint(form, pos));
  const int n = static_cast<int>(get_varint(form, pos));
  QuiverBuilder b(m, n);
  for (Vertex p = 1; p < n; ++p)
    for (Vertex t = 0; t < p; ++t) {
      const int colour = static_cast<int>(get_varint(form, pos));
      if (colour == 0) continue;
      const int mult = static_cast<int>(get_varint(form, pos));
      b.add_pair(t, p, colour - 1, mult);
    }
  if (pos != form.size()) throw InvalidInput("trailing bytes in canonical form");
  return b.build();
}

bool isomorphic(const ColouredQuiver& a, const ColouredQuiver& b) {
  return a.m() == b.m() && a.n() == b.n() && canonical_form(a) == canonical_form(b);
}

std::string form_to_hex(const CanonicalForm& form) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char byte : form) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
  }
  return out;
}

}  // namespace cqm
