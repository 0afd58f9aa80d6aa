#include <catch_amalgamated.hpp>

#include <set>

#include "pcat/closure.hpp"

using namespace pcat;

namespace {

// Saturates one-row forms under shift, reversal, tensor and every composition
// window, straight on Partition values.
std::set<Partition> naive_closure(const std::vector<Partition>& gens, std::size_t bound) {
  std::set<Partition> have = {parse(";"), parse(";aa")};
  for (const auto& g : gens) have.insert(to_one_row(g));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Partition> cur(have.begin(), have.end());
    auto add = [&](const Partition& p) {
      if (p.size() <= bound && have.insert(p).second) grew = true;
    };
    for (const auto& a : cur) {
      for (std::size_t s = 1; s < a.size(); ++s) add(cyclic_shift(a, s));
      add(to_one_row(involute(a)));
      for (const auto& b : cur) {
        add(tensor(a, b));
        for (std::size_t k = 1; k <= std::min(a.size(), b.size()); ++k) {
          const Partition top = split_one_row(a, a.size() - k);
          const Partition bottom = split_one_row(b, k);
          add(to_one_row(compose(bottom, top).result));
        }
      }
    }
  }
  return have;
}

std::set<Partition> engine_members(const CategoryClosure& c) {
  std::set<Partition> out;
  for (const auto& w : c.members()) out.insert(from_word(w));
  return out;
}

}  // namespace

TEST_CASE("closure matches a naive saturation at small bounds") {
  for (const char* g : {"fourblock", "crossing", "halflib", "singleton", "pairpositioner", "leg"}) {
    INFO(g);
    const std::vector<Partition> gens{parse_partition_arg(g)};
    const std::size_t bound = 6;
    CHECK(engine_members(closure(gens, bound)) == naive_closure(gens, bound));
  }
}

TEST_CASE("empty generator list gives the noncrossing pairings") {
  const CategoryClosure c = closure({}, 8);
  CHECK(c.members_of_length(2).size() == 1);
  CHECK(c.members_of_length(4).size() == 2);
  CHECK(c.members_of_length(6).size() == 5);
  CHECK(c.members_of_length(8).size() == 14);
  CHECK(c.members_of_length(3).empty());
}

TEST_CASE("membership answers") {
  const CategoryClosure c = closure({parse_partition_arg("fatcross")}, 8);
  CHECK(std::holds_alternative<InClosure>(member(c, parse(";aaaa"))));
  CHECK(std::holds_alternative<InClosure>(member(c, parse("aa;aa"))));
  CHECK(std::holds_alternative<ExcludedByCertificate>(member(c, parse(";a"))));
  CHECK(std::holds_alternative<ExcludedByCertificate>(member(c, parse(";aaa"))));
  CHECK(std::holds_alternative<NotFoundUpToBound>(member(c, parse(";abab"))));
  CHECK(std::holds_alternative<NotFoundUpToBound>(member(c, parse(";aabbccddee"))));
  const auto in = std::get<InClosure>(member(c, parse(";aaaa")));
  CHECK_FALSE(in.trace.empty());
}

TEST_CASE("h3 generates the pair positioner but not the crossing") {
  const CategoryClosure c = closure({parse_partition_arg("h3")}, 10);
  CHECK(c.contains(parse_partition_arg("pairpositioner")));
  CHECK_FALSE(c.contains(parse_partition_arg("crossing")));
}

TEST_CASE("erasure-only closure is contained in the full closure") {
  const std::vector<Partition> gens{named(NamedTag::pi, 2)};
  const auto small = engine_members(closure(gens, 8, ClosureMode::erasure_only));
  const auto full = engine_members(closure(gens, 8));
  for (const auto& p : small) CHECK(full.count(p) == 1);
  CHECK(small.count(to_one_row(named(NamedTag::pi, 1))) == 1);
}

TEST_CASE("derivations replay") {
  const CategoryClosure c = closure({parse_partition_arg("pairpositioner")}, 8);
  CHECK_FALSE(c.replay().has_value());
  for (std::uint32_t id = 0; id < c.size(); id += 37) CHECK_FALSE(c.trace(id).empty());
}

TEST_CASE("export and import round-trip") {
  const CategoryClosure c = closure({parse_partition_arg("halflib")}, 8);
  const std::string doc = c.export_document();
  const CategoryClosure d = CategoryClosure::import_document(doc);
  CHECK(d.size() == c.size());
  CHECK(engine_members(d) == engine_members(c));
  CHECK(d.export_document() == doc);
  CHECK_THROWS(CategoryClosure::import_document("{\"format\":\"other\",\"version\":1}"));
}

TEST_CASE("worker count does not change the result") {
  const std::vector<Partition> gens{parse_partition_arg("crossing")};
  CHECK(closure(gens, 8, ClosureMode::full, 1).export_document() ==
        closure(gens, 8, ClosureMode::full, 3).export_document());
}

TEST_CASE("generators above the bound are rejected") {
  CHECK_THROWS(closure({named(NamedTag::pi, 3)}, 8));
}

TEST_CASE("pair erasure and block connection") {
  CHECK(format(erase_pair(parse(";abba"), 1)) == ";aa");
  CHECK(format(erase_pair(parse(";abab"), 0)) == ";aa");
  CHECK(format(erase_pair(parse(";abca"), 3)) == ";ab");
  CHECK(format(connect_neighbouring_blocks(parse(";aabb"), 1)) == ";aaaa");
  CHECK_THROWS(erase_pair(parse(";aa"), 2));
}

TEST_CASE("word composition glues the window") {
  CHECK(format(compose_words(parse_word("abab"), parse_word("aa"), 2)) == "aa");
  CHECK(format(compose_words(parse_word("aa"), parse_word("aa"), 1)) == "aa");
}

TEST_CASE("normalized generators span the same category") {
  const std::vector<Partition> gens{parse_partition_arg("crossing"), parse_partition_arg("fourblock")};
  const Partition single = normalize_generators(gens);
  CHECK(engine_members(closure(gens, 8)) == engine_members(closure({single}, 8)));
  CHECK(normalize_generators({parse(";a"), parse(";aa")}).size() == 3);
  CHECK(normalize_generators({parse(";a"), parse(";a")}).size() == 3);
}

TEST_CASE("catalog lookups") {
  CHECK(free_and_group_categories().size() == 13);
  CHECK(named_category("P2"));
  CHECK(named_category("pi-series(3)")->generators.front() == named(NamedTag::pi, 3));
  CHECK(named_category("half-liberated-series-4"));
  CHECK_FALSE(named_category("half-liberated-series(2)"));
  CHECK_FALSE(named_category("nonsense"));
}
