#include <catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "pcat/classifier.hpp"

using namespace pcat;

TEST_CASE("the 13 catalog categories classify to themselves") {
  for (const auto& e : non_hyperoctahedral_cases()) {
    INFO(e.name);
    const auto cat = named_category(e.name);
    REQUIRE(cat);
    const ClassificationReport r = classify(cat->generators, 8);
    CHECK(r.category_class == CategoryClass::non_hyperoctahedral);
    CHECK(r.case_name == e.name);
  }
}

TEST_CASE("hyperoctahedral verdicts") {
  CHECK(classify({parse_partition_arg("fourblock")}, 8).verdict() == "PiSeries(1)");
  const ClassificationReport r = classify({parse_partition_arg("fatcross")}, 10);
  CHECK(r.verdict() == "PiSeries(2)");
  CHECK(r.proved_at_bound);
  CHECK(r.depth_saturated);
  CHECK_FALSE(classify({parse_partition_arg("fourblock")}, 8).depth_saturated);
  REQUIRE(r.depth_witness);
  CHECK(r.depth_witness->depth() == 2);
  CHECK(classify({parse_partition_arg("pairpositioner")}, 8).verdict() == "GroupTheoretical");
}

TEST_CASE("saturation flag when the bound cannot show the next pi") {
  const ClassificationReport r = classify({named(NamedTag::pi, 2)}, 8);
  CHECK(r.verdict() == "PiSeries(2)");
  CHECK(r.depth_saturated);
  CHECK_FALSE(r.unbounded_growth_suspected);
}

TEST_CASE("classification does not depend on how generators are listed") {
  const std::vector<Partition> gens{parse_partition_arg("crossing"), parse_partition_arg("fourblock")};
  const auto a = classify(gens, 8);
  const auto b = classify({normalize_generators(gens)}, 8);
  CHECK(a.verdict() == b.verdict());
  CHECK(a.members == b.members);
}

TEST_CASE("generators larger than the bound are refused") {
  CHECK_THROWS_AS(classify({named(NamedTag::pi, 3)}, 8), std::invalid_argument);
}

TEST_CASE("parity certificate") {
  const CategoryClosure c = closure({parse_partition_arg("fourblock")}, 8);
  CHECK(parity_certificate(c, parse(";aaa")));
  CHECK_FALSE(parity_certificate(c, parse(";aabb")));
  const CategoryClosure s = closure({parse_partition_arg("singleton")}, 6);
  CHECK_FALSE(parity_certificate(s, parse(";aaa")));
}

TEST_CASE("sigma_infty certificate excludes the pair positioner") {
  CHECK(sigma_infty_certificate({parse_partition_arg("fatcross")}));
  CHECK_FALSE(sigma_infty_certificate({parse_partition_arg("h3")}));
}

TEST_CASE("maximum wdepth over a closure") {
  const DepthMaximum d = max_wdepth(closure({parse_partition_arg("fatcross")}, 8));
  CHECK(d.depth == 2);
  REQUIRE(d.member);
  CHECK(wdepth(*d.member).depth == 2);
  CHECK(max_wdepth(closure({parse_partition_arg("fourblock")}, 8)).depth == 1);
  CHECK(max_wdepth(closure({}, 8)).depth == 0);
}

TEST_CASE("odd aba factor") {
  CHECK(has_odd_aba_pattern(parse_word("aba")));
  CHECK(has_odd_aba_pattern(parse_word("abbba")));
  CHECK_FALSE(has_odd_aba_pattern(parse_word("abba")));
  CHECK_FALSE(has_odd_aba_pattern(parse_word("aabb")));
}

TEST_CASE("json report") {
  const auto r = classify({parse_partition_arg("fatcross")}, 8);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j.at("format") == "pcat-classification");
  CHECK(j.at("version") == 1);
  CHECK(r.to_text().find("PiSeries(2)") != std::string::npos);
}
