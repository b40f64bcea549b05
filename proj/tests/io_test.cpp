#include <gtest/gtest.h>

#include "hwcover/io.hpp"

using namespace hwcover;
using namespace hwcover::catalog;

TEST(Json, Schema) {
  const auto j = io::to_json(SubgroupDescriptor{G2Type{Axis::y, 3, Hnf2{2, 1, 1}, 1, 0}});
  EXPECT_EQ(j.at("type"), "g2");
  EXPECT_EQ(j.at("axis"), "y");
  EXPECT_EQ(j.at("k"), 3);
  EXPECT_EQ(j.at("H").at("b"), 2);
  EXPECT_EQ(j.at("h"), nlohmann::json::array({1, 0}));
  EXPECT_EQ(io::to_json(SubgroupDescriptor{G6Type{}}).dump(),
            R"({"k":1,"l":1,"m":1,"type":"g6","u":0,"v":0,"w":0})");
}

TEST(Json, RoundTripsEveryDescriptor) {
  for (Int n = 1; n <= 40; ++n)
    for (const auto& d : enumerate_all(n)) {
      const std::string text = io::to_json(d).dump();
      ASSERT_EQ(io::descriptor_from_json(nlohmann::json::parse(text)), d) << text;
    }
}

TEST(Json, RejectsInvalid) {
  EXPECT_THROW(io::descriptor_from_json(nlohmann::json{{"type", "g9"}}), std::invalid_argument);
  EXPECT_THROW(io::descriptor_from_json(nlohmann::json::parse(R"({"type":"g6","k":2,"l":1,"m":1,"u":0,"v":0,"w":0})")),
               std::invalid_argument);
  EXPECT_THROW(io::descriptor_from_json(nlohmann::json::parse(R"({"type":"z3","c":1})")), nlohmann::json::exception);
}

TEST(Csv, RoundTripsEveryDescriptor) {
  const auto header = io::split_csv(io::descriptor_csv_header());
  for (Int n = 1; n <= 40; ++n)
    for (const auto& d : enumerate_all(n)) {
      const std::string line = io::to_csv(d);
      ASSERT_EQ(io::split_csv(line).size(), header.size()) << line;
      ASSERT_EQ(io::descriptor_from_csv(line), d) << line;
    }
}

TEST(Csv, RejectsInvalid) {
  EXPECT_THROW(io::descriptor_from_csv("1,g6"), std::invalid_argument);
  // Index column disagrees with the fields.
  EXPECT_THROW(io::descriptor_from_csv("2,g6,,1,1,1,0,0,0,,,,,,,,"), std::invalid_argument);
  EXPECT_THROW(io::descriptor_from_csv("1,g7,,1,1,1,0,0,0,,,,,,,,"), std::invalid_argument);
  EXPECT_EQ(io::descriptor_from_csv("1,g6,,1,1,1,0,0,0,,,,,,,,"), SubgroupDescriptor{G6Type{}});
}

TEST(Report, CsvHasOneRowPerType) {
  const std::string csv = io::to_csv(oracle::cross_check(4));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("4,G2,18,18,18,12,12,12,true"), std::string::npos);
  const auto j = io::to_json(oracle::cross_check(4));
  EXPECT_EQ(j.at("match"), true);
  EXPECT_EQ(j.at("rows").size(), 3u);
}

TEST(Series, VerdictJson) {
  for (const auto& v : series::table2_verdicts(64)) {
    const auto j = io::to_json(v);
    EXPECT_EQ(j.at("verdict") == "match", v.match);
    EXPECT_EQ(j.contains("first_divergent_n"), !v.match);
  }
  EXPECT_EQ(io::to_csv(numtheory::zeta_coeffs(1, 3)), "n,value\n1,1\n2,2\n3,3\n");
}
