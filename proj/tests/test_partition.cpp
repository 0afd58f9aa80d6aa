#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "pcat/partition.hpp"

using namespace pcat;

namespace {

std::vector<Partition> all_partitions(std::size_t k, std::size_t l) {
  std::vector<Partition> out;
  std::vector<BlockId> v(k + l);
  std::function<void(std::size_t, BlockId)> rec = [&](std::size_t i, BlockId used) {
    if (i == v.size()) {
      out.emplace_back(k, l, v);
      return;
    }
    for (BlockId b = 0; b <= used; ++b) {
      v[i] = b;
      rec(i + 1, std::max<BlockId>(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

// crossing quadruple a < b < c < d around the circle
bool crossing_oracle(const Partition& p) {
  std::vector<BlockId> circle;
  for (std::size_t i = 0; i < p.upper_arity(); ++i) circle.push_back(p.upper(i));
  for (std::size_t j = p.lower_arity(); j-- > 0;) circle.push_back(p.lower(j));
  const std::size_t n = circle.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (circle[a] == circle[c] && circle[b] == circle[d] && circle[a] != circle[b]) return true;
  return false;
}

}  // namespace

TEST_CASE("literals parse to canonical form and print back") {
  CHECK(format(parse("ba;ab")) == "ab;ba");
  CHECK(format(parse(";")) == ";");
  CHECK(format(parse("{x}{y};{y}{x}")) == "ab;ba");
  CHECK(parse("aab;baa").upper_arity() == 3);
  CHECK(parse("aab;baa").num_blocks() == 2);
  for (const char* s : {";abab", "abc;cba", "a;", ";a", "aabb;bbaa"}) CHECK(format(parse(s)) == s);
}

TEST_CASE("labels past z use braces") {
  std::vector<BlockId> v;
  for (BlockId i = 0; i < 28; ++i) v.push_back(i);
  const Partition p = Partition::from_lower(v);
  const std::string s = format(p);
  CHECK(s.find("{b27}") != std::string::npos);
  CHECK(parse(s) == p);
}

TEST_CASE("malformed literals report a position") {
  CHECK_THROWS_AS(parse("ab"), ParseError);
  CHECK_THROWS_AS(parse("a;b;c"), ParseError);
  CHECK_THROWS_AS(parse("A;a"), ParseError);
  CHECK_THROWS_AS(parse("{;a"), ParseError);
  CHECK_THROWS_AS(parse_partition_arg("nosuchname"), ParseError);
}

TEST_CASE("named partitions") {
  CHECK(format(named(NamedTag::pair_positioner)) == "aab;baa");
  CHECK(format(named(NamedTag::fat_crossing)) == "aabb;bbaa");
  CHECK(format(named(NamedTag::half_liberator)) == "abc;cba");
  CHECK(format(named(NamedTag::four_block)) == ";aaaa");
  CHECK(format(named(NamedTag::h, 3)) == ";ababab");
  CHECK(format(named(NamedTag::pi, 2)) == ";abbaabba");
  CHECK(format(named(NamedTag::leg)) == ";abcb");
  CHECK(parse_partition_arg("pp") == named(NamedTag::pair_positioner));
  CHECK(parse_partition_arg("pi3").size() == 12);
}

TEST_CASE("tensor places q to the right of p") {
  CHECK(format(tensor(parse(";aa"), parse(";aa"))) == ";aabb");
  CHECK(format(tensor(parse("a;a"), parse("ab;ba"))) == "abc;acb");
  CHECK(tensor(parse(";"), parse("ab;ba")) == parse("ab;ba"));
}

TEST_CASE("composition counts removed loops") {
  const Composition c = compose(parse("aa;"), parse(";aa"));
  CHECK(c.result == parse(";"));
  CHECK(c.removed_loops == 1);
  const Composition d = compose(parse(";aa"), parse("aa;"));
  CHECK(format(d.result) == "aa;bb");
  CHECK(d.removed_loops == 0);
  // crossing squared is the identity on two points
  const Composition e = compose(parse("ab;ba"), parse("ab;ba"));
  CHECK(format(e.result) == "ab;ab");
  // four blocks merge through the middle row
  CHECK(format(compose(parse("aa;aa"), parse("aa;aa")).result) == "aa;aa");
  CHECK_THROWS(compose(parse("a;a"), parse(";aa")));
}

TEST_CASE("identity is neutral for composition") {
  for (const auto& p : all_partitions(2, 2)) {
    const Partition id2 = parse("ab;ab");
    CHECK(compose(id2, p).result == p);
    CHECK(compose(p, id2).result == p);
  }
}

TEST_CASE("involution swaps rows and is an involution") {
  CHECK(format(involute(parse("aab;baa"))) == "abb;bba");
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t l = 0; l <= 3 - k; ++l)
      for (const auto& p : all_partitions(k, l)) CHECK(involute(involute(p)) == p);
}

TEST_CASE("rotations move one point around the corner") {
  CHECK(format(rotate(parse("ab;ba"), Corner::top_left)) == "a;bab");
  CHECK(format(rotate(parse("ab;ba"), Corner::top_right)) == "a;bab");
  CHECK_THROWS(rotate(parse(";aa"), Corner::top_left));
  for (Corner c : {Corner::top_left, Corner::top_right, Corner::bottom_left, Corner::bottom_right})
    for (const auto& p : all_partitions(2, 2)) CHECK(rotate(rotate(p, c), inverse(c)) == p);
}

TEST_CASE("one-row form reverses the upper row") {
  CHECK(format(to_one_row(parse("aab;baa"))) == ";abbabb");
  CHECK(format(to_one_row(parse("abc;cba"))) == ";abcabc");
  for (std::size_t k = 0; k <= 4; ++k)
    for (const auto& p : all_partitions(k, 4 - k)) CHECK(split_one_row(to_one_row(p), k) == p);
}

TEST_CASE("cyclic shift by the length is the identity") {
  const Partition w = parse(";abcabb");
  CHECK(cyclic_shift(w, 6) == w);
  CHECK(format(cyclic_shift(w, 1)) == ";abcaac");
  CHECK(cyclic_shift(cyclic_shift(w, 2), 4) == w);
}

TEST_CASE("vertical reflection from involution, rotation and splitting") {
  // reflect(p) = split(shift(one_row(p*), l), k) for p in P(k,l)
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& p : all_partitions(k, n - k)) {
        const Partition built = split_one_row(cyclic_shift(to_one_row(involute(p)), n - k), k);
        CHECK(vertical_reflect(p) == built);
      }
  CHECK(format(vertical_reflect(parse("aab;baa"))) == "abb;bba");
}

TEST_CASE("noncrossing agrees with the quadruple oracle") {
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; k += 3)
      for (const auto& p : all_partitions(k, n - k)) CHECK(is_noncrossing(p) == !crossing_oracle(p));
}

TEST_CASE("block sizes and hashing") {
  const Partition p = parse("aab;baa");
  CHECK(p.block_sizes() == std::vector<std::size_t>{4, 2});
  CHECK(std::hash<Partition>{}(p) == std::hash<Partition>{}(parse("xxy;yxx")));
}

TEST_CASE("random literals round-trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = rng() % 5, l = rng() % 5;
    std::vector<BlockId> v(k + l);
    for (auto& x : v) x = static_cast<BlockId>(rng() % 6);
    const Partition p(k, l, v);
    CHECK(parse(format(p)) == p);
  }
}
