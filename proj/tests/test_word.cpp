#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "pcat/word.hpp"

using namespace pcat;

namespace {

// Enumerates 4k increasing positions directly from the definition: legs of k
// marks each, letters distinct, each leg letter odd on its own interval.
bool contains_w_oracle(const std::vector<BlockId>& w, std::size_t k) {
  const std::size_t n = w.size();
  if (k == 0) return true;
  if (4 * k > n) return false;
  std::vector<std::size_t> pos(4 * k);
  auto leg_ok = [&](std::size_t leg, const std::vector<BlockId>& letters) {
    const std::size_t b = pos[leg * k], e = pos[leg * k + k - 1];
    for (BlockId a : letters) {
      std::size_t cnt = 0;
      for (std::size_t i = b; i <= e; ++i) cnt += w[i] == a;
      if (cnt % 2 == 0) return false;
    }
    return true;
  };
  auto test = [&]() {
    std::vector<BlockId> letters;
    for (std::size_t i = 0; i < k; ++i) letters.push_back(w[pos[i]]);
    std::vector<BlockId> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
      if (w[pos[k + i]] != letters[k - 1 - i]) return false;
      if (w[pos[2 * k + i]] != letters[i]) return false;
      if (w[pos[3 * k + i]] != letters[k - 1 - i]) return false;
    }
    for (std::size_t leg = 0; leg < 4; ++leg)
      if (!leg_ok(leg, letters)) return false;
    return true;
  };
  // combinations of 4k positions out of n
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + 4 * k, true);
  do {
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) pos[j++] = i;
    if (test()) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

std::size_t wdepth_oracle(const Word& w) {
  std::size_t best = 0;
  for (std::size_t r = 0; r < std::max<std::size_t>(w.size(), 1); ++r) {
    const auto v = w.rotated(r).letters();
    for (std::size_t k = best + 1; 4 * k <= v.size(); ++k)
      if (contains_w_oracle(v, k)) best = k;
  }
  return best;
}

Word random_word(std::mt19937_64& rng, std::size_t len, std::size_t letters) {
  std::vector<BlockId> v(len);
  for (auto& x : v) x = static_cast<BlockId>(rng() % letters);
  return Word(std::move(v));
}

}  // namespace

TEST_CASE("single-double form keeps parity of runs") {
  CHECK(format(single_double_form(parse_word("aaabbbba"))) == "abba");
  CHECK(format(single_double_form(parse_word("aabbbb"))) == "aabb");
  CHECK(format(single_double_form(parse_word("abc"))) == "abc");
  CHECK(single_double_form(parse_word("")).empty());
}

TEST_CASE("Dyck paths step up on first visits") {
  CHECK(dyck_path(parse_word("aa")).to_string() == "DU");
  const DyckPath p = dyck_path(parse_word("abba"));
  CHECK(p.levels.size() == 5);
  CHECK(p.returns_to_zero());
}

TEST_CASE("doubling check flags odd patterns") {
  CHECK(doubling_check(parse_word("aabb")).empty());
  CHECK(doubling_check(to_word(named(NamedTag::pi, 2))).empty());
  CHECK_FALSE(doubling_check(parse_word("abab")).empty());
  CHECK_FALSE(doubling_check(parse_word("abcabc")).empty());
}

TEST_CASE("wdepth of the pi words") {
  for (std::size_t k = 1; k <= 5; ++k) CHECK(wdepth(to_word(named(NamedTag::pi, k))).depth == k);
  CHECK(wdepth(parse_word("aaaa")).depth == 1);
  CHECK(wdepth(parse_word("aabb")).depth == 0);
  CHECK(wdepth(parse_word("")).depth == 0);
}

TEST_CASE("wdepth witnesses validate") {
  for (const char* s : {"abccddbaeffghhgeabba", "abccddbaaeebccbaijji", "abbaabba"}) {
    const Word w = parse_word(s);
    const WDepth d = wdepth(w);
    REQUIRE(d.witness);
    std::string why;
    CHECK(validate_witness(w, *d.witness, &why));
    CHECK(why.empty());
  }
  CHECK(wdepth(parse_word("abccddbaeffghhgeabba")).depth == 2);
  CHECK(wdepth(parse_word("abccddbaaeebccbaijji")).depth == 3);
}

TEST_CASE("wdepth agrees with a brute-force search") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    const std::size_t len = 4 + rng() % 9;
    const Word w = random_word(rng, len, 2 + rng() % 3);
    INFO(format(w));
    CHECK(wdepth(w).depth == wdepth_oracle(w));
  }
}

TEST_CASE("wdepth is bounded by the number of blocks") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Word w = random_word(rng, 6 + rng() % 10, 4);
    CHECK(wdepth(w).depth <= w.num_letters());
  }
}

TEST_CASE("length cap is enforced unless overridden") {
  std::vector<BlockId> v(30, 0);
  const Word w(v);
  CHECK_THROWS_AS(wdepth(w), LengthCapError);
  WSearchOptions opt;
  opt.override_cap = true;
  CHECK(wdepth(w, opt).depth == 1);
}
