#include <catch_amalgamated.hpp>

#include <random>

#include "pcat/intertwiner.hpp"

using namespace pcat;

namespace {

// Dense T_p straight from the kernel condition.
QMatrix dense_oracle(const Partition& p, std::size_t n) {
  const std::size_t k = p.upper_arity(), l = p.lower_arity();
  std::size_t rows = 1, cols = 1;
  for (std::size_t i = 0; i < l; ++i) rows *= n;
  for (std::size_t i = 0; i < k; ++i) cols *= n;
  QMatrix t(rows, cols);
  std::vector<std::size_t> idx(k + l);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t x = c;
      for (std::size_t i = k; i-- > 0;) idx[i] = x % n, x /= n;
      x = r;
      for (std::size_t j = l; j-- > 0;) idx[k + j] = x % n, x /= n;
      bool ok = true;
      for (std::size_t a = 0; a < k + l && ok; ++a)
        for (std::size_t b = a + 1; b < k + l && ok; ++b)
          if (p.block_of(a) == p.block_of(b) && idx[a] != idx[b]) ok = false;
      if (ok) t(r, c) = 1;
    }
  return t;
}

Partition random_partition(std::mt19937_64& rng, std::size_t k, std::size_t l) {
  std::vector<BlockId> v(k + l);
  for (auto& x : v) x = static_cast<BlockId>(rng() % 4);
  return Partition(k, l, v);
}

}  // namespace

TEST_CASE("rational matrices") {
  QMatrix a(2, 2, {1, 2, 3, 4});
  CHECK((a * QMatrix::identity(2)) == a);
  CHECK((a - a).is_zero());
  CHECK(a.transpose()(0, 1) == 3);
  CHECK(a.to_string() == "[1 2; 3 4]");
  const QMatrix k = kron(QMatrix::identity(2), a);
  CHECK(k.rows() == 4);
  CHECK(k(2, 3) == 2);
  CHECK(k(0, 2) == 0);
  QMatrix h(1, 1, {Rational(1, 2)});
  CHECK((h + h)(0, 0) == 1);
  Rational q(3, 6);
  q.canonicalize();
  CHECK(to_string(q) == "1/2");
}

TEST_CASE("delta tensors of small partitions") {
  CHECK(delta_tensor(parse(";aa"), 3).nonzeros() == 3);
  CHECK(delta_tensor(parse("a;a"), 3).to_dense() == QMatrix::identity(3));
  CHECK(delta_tensor(parse(";ab"), 2).nonzeros() == 4);
  CHECK(delta_tensor(parse(";aaaa"), 2).nonzeros() == 2);
  const QMatrix cross = delta_tensor(parse("ab;ba"), 2).to_dense();
  CHECK(cross(1, 2) == 1);
  CHECK(cross(1, 1) == 0);
}

TEST_CASE("sparse tensors match the dense kernel oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Partition p = random_partition(rng, rng() % 3, rng() % 3);
    for (std::size_t n : {1, 2, 3}) CHECK(delta_tensor(p, n).to_dense() == dense_oracle(p, n));
  }
}

TEST_CASE("functoriality with loops") {
  const FunctorialityReport r = verify_functoriality(parse(";aa"), parse("aa;"), 3);
  CHECK(r.composition_checked);
  CHECK(r.removed_loops == 1);
  CHECK(r.ok());
  // dense check of the loop factor
  CHECK(dense_oracle(parse("aa;"), 3) * dense_oracle(parse(";aa"), 3) == QMatrix(1, 1, {3}));
  CHECK_FALSE(verify_functoriality(parse("a;a"), parse(";aa"), 2).composition_checked);
}

TEST_CASE("sigma_k has the advertised shape") {
  for (std::size_t k = 2; k <= 4; ++k) {
    const MatrixRep s = build_sigma_k(k);
    CHECK(s.n == k + 3);
    CHECK(s.dim == 2 * k);
    CHECK(s.entries.size() == s.n * s.n);
  }
  const MatrixRep inf = build_sigma_infty();
  CHECK(inf.n == 3);
  CHECK(inf.dim == 2);
}

TEST_CASE("relations on sigma_k hold exactly up to depth k") {
  for (std::size_t k = 2; k <= 4; ++k) {
    const MatrixRep s = build_sigma_k(k);
    CHECK(check_relations(s, k).ok());
    const RelationReport bad = check_relations(s, k + 1);
    CHECK_FALSE(bad.commutation);
    REQUIRE(bad.first_violation);
    CHECK(bad.first_violation->depth == k + 1);
    CHECK(check_relations_prime(s, k, 50) == 0);
  }
  CHECK(describe(*check_relations(build_sigma_k(2), 3).first_violation).find("u22 u11 u44") != std::string::npos);
}

TEST_CASE("signed permutations satisfy the relations at any depth") {
  const MatrixRep r = signed_permutation_rep({2, 0, 1}, {1, -1, 1});
  CHECK(check_relations(r, 5).ok());
  CHECK(intertwiner_check(parse_partition_arg("crossing"), r));
  CHECK(intertwiner_check(parse_partition_arg("fourblock"), r));
  CHECK_FALSE(intertwiner_check(parse(";a"), r));
}

TEST_CASE("sigma_infty intertwines exactly the expected generators") {
  const MatrixRep s = build_sigma_infty();
  CHECK(intertwiner_check(parse_partition_arg("fourblock"), s));
  CHECK(intertwiner_check(parse_partition_arg("fatcross"), s));
  CHECK(intertwiner_check(named(NamedTag::pi, 2), s));
  CHECK_FALSE(intertwiner_check(parse_partition_arg("pairpositioner"), s));
  CHECK_FALSE(intertwiner_check(parse_partition_arg("crossing"), s));
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(intertwiner_check(named(NamedTag::pi, 4), build_sigma_infty(), 64), BudgetExceeded);
}

TEST_CASE("balanced form splits the one-row word in the middle") {
  const Partition b = balanced_form(parse(";abbaabba"));
  CHECK(b.upper_arity() == 4);
  CHECK(b.lower_arity() == 4);
  CHECK(balanced_form(parse(";aaa")).upper_arity() == 2);
}

TEST_CASE("matrix literal export") {
  const std::string s = export_matrix_literal(build_sigma_infty());
  CHECK(s.rfind("matrix-rep 1", 0) == 0);
  CHECK(s.find("u 1 1") != std::string::npos);
}
