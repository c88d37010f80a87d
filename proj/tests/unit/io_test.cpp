#include <gtest/gtest.h>

#include "cqm/error.hpp"
#include "cqm/io.hpp"
#include "oracles.hpp"

namespace cqm {
namespace {

TEST(QuiverJson, WritesCanonicalOrder) {
  auto q = testing::make(2, 3, {{3, 1, 0}, {2, 1, 0}, {2, 3, 1}});
  EXPECT_EQ(to_json(q).dump(),
            R"({"m":2,"n":3,"arrows":[{"from":1,"to":2,"colour":2,"mult":1},)"
            R"({"from":1,"to":3,"colour":2,"mult":1},{"from":2,"to":3,"colour":1,"mult":1}]})");
}

TEST(QuiverJson, RoundTrip) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto q = testing::random_valid_quiver(rng, 1 + t % 7, 1 + t % 4, 3, 0.5);
    EXPECT_EQ(read_quiver(to_json(q).dump()), q);
  }
}

TEST(QuiverJson, AcceptsConsistentPartnersAndDefaults) {
  auto q = read_quiver(R"({"m":2,"n":2,"arrows":[{"from":1,"to":2,"colour":0},{"from":2,"to":1,"colour":2,"mult":1}]})");
  EXPECT_EQ(q, linear_quiver(2, 2));
  auto empty = read_quiver(R"({"m":3,"n":1})");
  EXPECT_EQ(empty, ColouredQuiver(3, 1));
}

TEST(QuiverJson, RejectsInconsistentPartners) {
  auto raw = quiver_from_json(parse_json(
      R"({"m":2,"n":2,"arrows":[{"from":1,"to":2,"colour":0,"mult":1},{"from":2,"to":1,"colour":2,"mult":2}]})"));
  EXPECT_FALSE(validate(raw).ok());
  EXPECT_THROW(read_quiver(R"({"m":2,"n":2,"arrows":[{"from":1,"to":2,"colour":0},{"from":1,"to":2,"colour":1}]})"),
               InvalidInput);
  EXPECT_THROW(read_quiver(R"({"m":2,"n":2,"arrows":[{"from":1,"to":1,"colour":0}]})"), InvalidInput);
}

TEST(QuiverJson, RejectsMalformedInput) {
  EXPECT_THROW(read_quiver("{"), InvalidInput);
  EXPECT_THROW(read_quiver(R"({"n":2})"), InvalidInput);
  EXPECT_THROW(read_quiver(R"({"m":2,"n":2,"arrows":[{"from":1,"to":3,"colour":0}]})"), InvalidInput);
  EXPECT_THROW(read_quiver(R"({"m":2,"n":2,"arrows":[{"from":1,"to":2,"colour":3}]})"), InvalidInput);
  EXPECT_THROW(read_quiver(R"({"m":2,"n":2,"arrows":[{"from":1,"to":2,"colour":"0"}]})"), InvalidInput);
  EXPECT_THROW(read_quiver(R"({"m":0,"n":2})"), InvalidInput);
}

TEST(SequenceJson, RoundTrip) {
  MutationSequence seq{{{1, 1}, {0, 2}}};
  auto j = to_json(seq);
  EXPECT_EQ(j.dump(), R"({"steps":[{"vertex":2,"power":1},{"vertex":1,"power":2}]})");
  EXPECT_EQ(sequence_from_json(j), seq);
  EXPECT_THROW(sequence_from_json(parse_json(R"({"steps":[{"vertex":0}]})")), InvalidInput);
  EXPECT_THROW(sequence_from_json(parse_json(R"([])")), InvalidInput);
}

TEST(VerdictJson, CarriesWitnesses) {
  auto verdict = is_member(testing::load("triangle_outside_class.json"));
  EXPECT_EQ(to_json(verdict).dump(),
            R"({"member":false,"failures":[{"kind":"BadTriangle","vertices":[1,2,3],"sums":[3,3]}]})");
  auto ok = is_member(linear_quiver(3, 2));
  EXPECT_EQ(to_json(ok).dump(), R"({"member":true,"failures":[]})");
}

TEST(ReportJson, ListsViolations) {
  auto raw = QuiverBuilder(1, 2).add_arrows(0, 1, 0).build();
  EXPECT_EQ(to_json(validate(raw)).dump(),
            R"({"valid":false,"violations":[{"kind":"SkewSymmetry","from":1,"to":2,"colours":[0]},)"
            R"({"kind":"SkewSymmetry","from":2,"to":1,"colours":[1]}]})");
}

}  // namespace
}  // namespace cqm
