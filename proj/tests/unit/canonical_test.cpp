#include <gtest/gtest.h>

#include <numeric>

#include "cqm/canonical.hpp"
#include "cqm/enumeration.hpp"
#include "oracles.hpp"

namespace cqm {
namespace {

using testing::make;

TEST(CanonicalForm, TwoVertexExamples) {
  EXPECT_EQ(canonical_form(make(2, 2, {{1, 2, 0}})), canonical_form(make(2, 2, {{1, 2, 2}})));
  EXPECT_NE(canonical_form(make(2, 2, {{1, 2, 1}})), canonical_form(make(2, 2, {{1, 2, 0}})));
  EXPECT_TRUE(testing::brute_isomorphic(make(2, 2, {{1, 2, 0}}), make(2, 2, {{1, 2, 2}})));
  EXPECT_FALSE(testing::brute_isomorphic(make(2, 2, {{1, 2, 1}}), make(2, 2, {{1, 2, 0}})));
}

TEST(CanonicalForm, DistinguishesParameters) {
  EXPECT_NE(canonical_form(ColouredQuiver(1, 2)), canonical_form(ColouredQuiver(2, 2)));
  EXPECT_NE(canonical_form(ColouredQuiver(1, 2)), canonical_form(ColouredQuiver(1, 3)));
  EXPECT_NE(canonical_form(QuiverBuilder(1, 2).add_pair(0, 1, 0, 2).build()),
            canonical_form(QuiverBuilder(1, 2).add_pair(0, 1, 0, 3).build()));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937 rng(29);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 9;
    auto q = testing::random_valid_quiver(rng, n, 1 + t % 4, 1 + t % 3, 0.4);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto r = relabel(q, perm);
    EXPECT_EQ(canonical_form(q), canonical_form(r));
    EXPECT_EQ(canonical_representative(q), canonical_representative(r));
  }
  auto big = testing::load("thirteen_vertex.json");
  std::vector<Vertex> perm(13);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  EXPECT_EQ(canonical_form(big), canonical_form(relabel(big, perm)));
}

TEST(CanonicalForm, AgreesWithBruteForceIsomorphism) {
  std::mt19937 rng(31);
  for (int t = 0; t < 1500; ++t) {
    const int n = 2 + t % 5, m = 1 + t % 2;
    auto a = testing::random_valid_quiver(rng, n, m, 1, 0.5);
    auto b = testing::random_valid_quiver(rng, n, m, 1, 0.5);
    ASSERT_EQ(canonical_form(a) == canonical_form(b), testing::brute_isomorphic(a, b)) << "trial " << t;
  }
}

TEST(CanonicalForm, AgreesWithBruteForceWithinClasses) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 2}, {5, 1}, {5, 2}, {6, 1}, {4, 3}}) {
    auto cls = mutation_class(linear_quiver(n, m));
    ASSERT_LE(cls.size(), 200u);
    std::mt19937 rng(n * 10 + m);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = 0; j < cls.size(); ++j) {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto& a = cls.representatives[i];
        auto b = relabel(cls.representatives[j], perm);
        ASSERT_EQ(canonical_form(a) == canonical_form(b), testing::brute_isomorphic(a, b));
        ASSERT_EQ(testing::brute_isomorphic(a, b), i == j);
      }
  }
}

TEST(CanonicalLabelling, AutomorphismCount) {
  std::mt19937 rng(37);
  for (int t = 0; t < 300; ++t) {
    auto q = testing::random_valid_quiver(rng, 1 + t % 7, 1 + t % 3, 1, t % 2 ? 0.2 : 0.7);
    EXPECT_EQ(canonical_labelling(q).automorphisms, testing::brute_automorphisms(q));
  }
  EXPECT_EQ(canonical_labelling(ColouredQuiver(1, 5)).automorphisms, 120u);
}

TEST(CanonicalForm, DecodesToTheRepresentative) {
  std::mt19937 rng(41);
  for (int t = 0; t < 200; ++t) {
    auto q = testing::random_valid_quiver(rng, 1 + t % 8, 1 + t % 4, 3, 0.5);
    auto lab = canonical_labelling(q);
    EXPECT_EQ(quiver_from_form(lab.form), relabel(q, lab.perm));
  }
  EXPECT_FALSE(form_to_hex(canonical_form(linear_quiver(3, 2))).empty());
}

}  // namespace
}  // namespace cqm
