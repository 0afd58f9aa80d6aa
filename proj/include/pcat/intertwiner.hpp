#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Dense square-or-rectangular matrix over exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> values);

  static QMatrix identity(std::size_t d);
  static QMatrix zero(std::size_t d) { return QMatrix(d, d); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
  friend bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  QMatrix& operator+=(const QMatrix& y);

  std::string to_string() const;  // "[a b; c d]"

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix kron(const QMatrix& x, const QMatrix& y);

// ---------------------------------------------------------------------------
// T_p

/// Sparse T_p : (C^n)^{⊗k} → (C^n)^{⊗l}. Multi-indices are flattened with the
/// leftmost point most significant.
struct DeltaTensor {
  Partition partition;
  std::size_t n = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> coefficients;  // (lower, upper) -> value

  std::size_t nonzeros() const { return coefficients.size(); }
  QMatrix to_dense() const;
};

DeltaTensor delta_tensor(const Partition& p, std::size_t n);

struct FunctorialityReport {
  bool tensor_ok = true;
  bool composition_checked = false;
  bool composition_ok = true;
  bool involution_ok = true;
  std::size_t removed_loops = 0;
  std::vector<std::string> notes;

  bool ok() const { return tensor_ok && composition_ok && involution_ok; }
};

/// T_{p⊗q} = T_p ⊗ T_q, T_q T_p = n^{rl} T_{qp} (when composable), T_{p*} = T_p^t.
FunctorialityReport verify_functoriality(const Partition& p, const Partition& q, std::size_t n);

// ---------------------------------------------------------------------------
// operator-valued matrices

struct MatrixRep {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::string space;
  std::vector<QMatrix> entries;  // u'_{ij} at i*n + j (0-based)

  const QMatrix& u(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  QMatrix& u(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

/// σ_k on C^2 ⊗ C^k with n = k + 3.
MatrixRep build_sigma_k(std::size_t k);

/// σ_∞ on C^2 with n = 3.
MatrixRep build_sigma_infty();

/// Permutation matrix with signs; entries are 1x1 scalars.
MatrixRep signed_permutation_rep(const std::vector<std::size_t>& perm, const std::vector<int>& signs);

struct Violation {
  std::string relation;                                   // "(i)", "(ii)", "(iii)", "(iv)", ...
  std::size_t depth = 0;                                   // l for (ii)
  std::vector<std::pair<std::size_t, std::size_t>> index;  // 1-based (i_s, j_s)
  std::string detail;
};

struct RelationReport {
  std::size_t depth = 0;
  bool self_adjoint = true;
  bool orthogonality = true;
  bool square_sums = true;
  bool partial_isometries = true;
  bool commutation = true;  // relation (ii) for 2 <= l <= depth
  std::size_t products_checked = 0;
  std::optional<Violation> first_violation;

  bool ok() const { return self_adjoint && orthogonality && square_sums && partial_isometries && commutation; }
};

std::string describe(const Violation& v);

RelationReport check_relations(const MatrixRep& rep, std::size_t depth);

/// Relation (ii)' for 2 <= l <= depth on `samples` random multi-indices per l,
/// biased so that i = j or α = β in three cases out of four. Returns the
/// number of failing samples.
std::size_t check_relations_prime(const MatrixRep& rep, std::size_t depth, std::size_t samples,
                                  std::uint64_t seed = 1);

inline constexpr std::size_t kDefaultIntertwinerBudget = std::size_t{1} << 14;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact test of T_p u^{⊗k} = u^{⊗l} T_p. Requires n^{max(k,l)} · dim ≤ budget.
bool intertwiner_check(const Partition& p, const MatrixRep& rep,
                       std::size_t budget = kDefaultIntertwinerBudget);

/// p rotated so that the rows differ in length by at most one.
Partition balanced_form(const Partition& p);

/// Rows of fractions, one matrix per entry, for external cross-checks.
std::string export_matrix_literal(const MatrixRep& rep);

}  // namespace pcat
