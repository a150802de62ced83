#include <gtest/gtest.h>

#include "adjrep/json_io.hpp"

using namespace adjrep;

TEST(JsonIo, Partition)
{
  Partition p{3, 1, 1};
  EXPECT_EQ(to_json(p).dump(), "[3,1,1]");
  EXPECT_EQ(partition_from_json(Json::parse("[3,1,1]")), p);
  EXPECT_THROW(partition_from_json(Json::parse("[1,3]")), std::invalid_argument);
  EXPECT_THROW(partition_from_json(Json::parse("{}")), std::invalid_argument);
}

TEST(JsonIo, SymFuncGolden)
{
  SymFunc f(Basis::schur);
  f.add_term(Partition({4, 2}), 3);
  f.add_term(Partition({1}), Rational(-1, 2));
  const char* golden =
    R"({"basis":"schur","terms":[{"partition":[1],"coeff":"-1/2"},{"partition":[4,2],"coeff":"3/1"}]})";
  EXPECT_EQ(to_json(f).dump(), golden);
  EXPECT_EQ(symfunc_from_json(Json::parse(golden)), f);
  EXPECT_THROW(symfunc_from_json(Json::parse(R"({"basis":"q","terms":[]})")), std::invalid_argument);
  EXPECT_THROW(symfunc_from_json(Json::parse(R"({"basis":"schur","terms":[{"partition":[1],"coeff":"x"}]})")),
               std::invalid_argument);
}

TEST(JsonIo, ClassFunction)
{
  ClassFunction chi(3);
  chi.set(Partition({1, 1, 1}), 2);
  chi.set(Partition({3}), -1);
  Json j = to_json(chi);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["values"].size(), 3u);
  EXPECT_EQ(class_function_from_json(j), chi);
}

TEST(JsonIo, ForestAndPartialTransformation)
{
  LoopAugmentedForest f({-1, 0, 0, -1, 3}, {3});
  Json j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"n":5,"parent":[0,1,1,0,4],"loops":[4]})");
  EXPECT_EQ(forest_from_json(j), f);
  EXPECT_THROW(forest_from_json(Json::parse(R"({"n":2,"parent":[2,1]})")), std::invalid_argument);
  EXPECT_THROW(forest_from_json(Json::parse(R"({"n":2,"parent":[0]})")), std::invalid_argument);
  EXPECT_THROW(forest_from_json(Json::parse(R"({"n":1,"parent":[0],"loops":[2]})")),
               std::invalid_argument);

  PartialTransformation g(std::vector<int>{1, PartialTransformation::kUndefined, 2});
  Json gj = to_json(g);
  EXPECT_EQ(gj.dump(), R"({"n":3,"image":{"1":2,"3":3}})");
  EXPECT_EQ(partial_transformation_from_json(gj), g);
  EXPECT_THROW(partial_transformation_from_json(Json::parse(R"({"n":2,"image":{"1":5}})")),
               std::invalid_argument);
  EXPECT_THROW(partial_transformation_from_json(Json::parse(R"({"n":2,"image":{"a":1}})")),
               std::invalid_argument);
}

TEST(JsonIo, VerifyRecordRoundTrip)
{
  VerifyReport report = verify(3);
  for (const auto& r : report.records) {
    VerifyRecord back = verify_record_from_json(to_json(r));
    EXPECT_EQ(back.n, r.n);
    EXPECT_EQ(back.kind, r.kind);
    EXPECT_EQ(back.formula, r.formula);
    EXPECT_EQ(back.orbit, r.orbit);
    EXPECT_EQ(back.bruteforce, r.bruteforce);
    EXPECT_EQ(back.match, r.match);
  }
  Json j = to_json(report);
  EXPECT_EQ(j["all_match"], false);
  EXPECT_EQ(j["additivity"].size(), 2u);
}
