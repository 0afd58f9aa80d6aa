#include "pcat/intertwiner.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace pcat {

std::string to_string(const Rational& q) { return q.get_str(); }

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> values)
    : rows_(rows), cols_(cols), a_(std::move(values)) {
  if (a_.size() != rows * cols) throw std::invalid_argument("QMatrix: wrong number of values");
}

QMatrix QMatrix::identity(std::size_t d) {
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix z(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rational& a = x(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < y.cols_; ++c)
        if (sgn(y(k, c)) != 0) z(r, c) += a * y(k, c);
    }
  return z;
}

QMatrix& QMatrix::operator+=(const QMatrix& y) {
  if (rows_ != y.rows_ || cols_ != y.cols_) throw std::invalid_argument("QMatrix: shape mismatch in sum");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += y.a_[i];
  return *this;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  QMatrix z = x;
  z += y;
  return z;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("QMatrix: shape mismatch in difference");
  QMatrix z = x;
  for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
  return z;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
  }
  os << ']';
  return os.str();
}

QMatrix kron(const QMatrix& x, const QMatrix& y) {
  QMatrix z(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b) {
      if (sgn(x(a, b)) == 0) continue;
      for (std::size_t c = 0; c < y.rows(); ++c)
        for (std::size_t d = 0; d < y.cols(); ++d) z(a * y.rows() + c, b * y.cols() + d) = x(a, b) * y(c, d);
    }
  return z;
}

// ---------------------------------------------------------------------------
// T_p

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

DeltaTensor delta_tensor(const Partition& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("delta_tensor: dimension must be positive");
  DeltaTensor t{p, n, {}};
  const std::size_t nb = p.num_blocks();
  std::vector<std::size_t> value(nb, 0);
  const std::uint64_t total = ipow(n, nb);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (std::size_t b = nb; b-- > 0;) {
      value[b] = x % n;
      x /= n;
    }
    std::uint64_t up = 0, lo = 0;
    for (std::size_t i = 0; i < p.upper_arity(); ++i) up = up * n + value[p.upper(i)];
    for (std::size_t j = 0; j < p.lower_arity(); ++j) lo = lo * n + value[p.lower(j)];
    t.coefficients.emplace(std::pair{lo, up}, Rational(1));
  }
  return t;
}

QMatrix DeltaTensor::to_dense() const {
  QMatrix m(ipow(n, partition.lower_arity()), ipow(n, partition.upper_arity()));
  for (const auto& [idx, v] : coefficients) m(idx.first, idx.second) = v;
  return m;
}

FunctorialityReport verify_functoriality(const Partition& p, const Partition& q, std::size_t n) {
  FunctorialityReport rep;
  const DeltaTensor tp = delta_tensor(p, n), tq = delta_tensor(q, n);

  {
    const DeltaTensor tpq = delta_tensor(tensor(p, q), n);
    const std::uint64_t lq = ipow(n, q.lower_arity()), uq = ipow(n, q.upper_arity());
    std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> prod;
    for (const auto& [a, x] : tp.coefficients)
      for (const auto& [b, y] : tq.coefficients) prod[{a.first * lq + b.first, a.second * uq + b.second}] += x * y;
    rep.tensor_ok = prod == tpq.coefficients;
    if (!rep.tensor_ok) rep.notes.push_back("T_{p(x)q} differs from T_p (x) T_q");
  }

  if (p.lower_arity() == q.upper_arity()) {
    rep.composition_checked = true;
    const Composition c = compose(q, p);
    rep.removed_loops = c.removed_loops;
    std::multimap<std::uint64_t, std::pair<std::uint64_t, const Rational*>> q_by_upper;
    for (const auto& [idx, v] : tq.coefficients) q_by_upper.emplace(idx.second, std::pair{idx.first, &v});
    std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> prod;
    for (const auto& [idx, x] : tp.coefficients) {
      auto [lo, hi] = q_by_upper.equal_range(idx.first);
      for (auto it = lo; it != hi; ++it) prod[{it->second.first, idx.second}] += x * *it->second.second;
    }
    const Rational scale(static_cast<unsigned long>(ipow(n, c.removed_loops)));
    std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> expect;
    for (const auto& [idx, v] : delta_tensor(c.result, n).coefficients) expect[idx] = scale * v;
    rep.composition_ok = prod == expect;
    if (!rep.composition_ok) rep.notes.push_back("T_q T_p differs from n^rl T_{qp}");
  } else {
    rep.notes.push_back("composition skipped: arities do not match");
  }

  {
    const DeltaTensor ts = delta_tensor(involute(p), n);
    std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> transposed;
    for (const auto& [idx, v] : tp.coefficients) transposed[{idx.second, idx.first}] = v;
    rep.involution_ok = transposed == ts.coefficients;
    if (!rep.involution_ok) rep.notes.push_back("T_{p*} differs from the transpose of T_p");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// representations

MatrixRep build_sigma_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("build_sigma_k: k must be at least 2");
  const std::size_t n = k + 3, dim = 2 * k;
  MatrixRep rep{n, dim, "C^2 (x) C^" + std::to_string(k), std::vector<QMatrix>(n * n, QMatrix::zero(dim))};

  const QMatrix one2 = QMatrix::identity(2);
  auto proj = [k](std::size_t i) {  // p_i onto C e_i, 1-based
    QMatrix m(k, k);
    m(i - 1, i - 1) = 1;
    return m;
  };
  const QMatrix p_ring(2, 2, {1, 0, 0, 0});
  const QMatrix q_ring(2, 2, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  const QMatrix p = kron(p_ring, proj(1));
  const QMatrix q = kron(q_ring, proj(k));
  const QMatrix one = QMatrix::identity(dim);

  for (std::size_t i = 1; i < k; ++i) {
    QMatrix swap = QMatrix::identity(k);
    swap(i - 1, i - 1) = 0;
    swap(i, i) = 0;
    swap(i - 1, i) = 1;
    swap(i, i - 1) = 1;
    rep.u(i - 1, i - 1) = kron(one2, swap);
  }
  const std::size_t a = k - 1, b = k + 1;  // 0-based corners of the two 2x2 blocks
  rep.u(a, a) = p;
  rep.u(a, a + 1) = one - p;
  rep.u(a + 1, a) = one - p;
  rep.u(a + 1, a + 1) = p;
  rep.u(b, b) = q;
  rep.u(b, b + 1) = one - q;
  rep.u(b + 1, b) = one - q;
  rep.u(b + 1, b + 1) = q;
  return rep;
}

MatrixRep build_sigma_infty() {
  MatrixRep rep{3, 2, "C^2", std::vector<QMatrix>(9, QMatrix::zero(2))};
  const QMatrix p(2, 2, {1, 0, 0, 0});
  const QMatrix w(2, 2, {0, 1, 1, 0});
  const QMatrix one = QMatrix::identity(2);
  rep.u(0, 0) = p;
  rep.u(0, 1) = one - p;
  rep.u(1, 0) = one - p;
  rep.u(1, 1) = p;
  rep.u(2, 2) = w;
  return rep;
}

MatrixRep signed_permutation_rep(const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
  const std::size_t n = perm.size();
  if (signs.size() != n) throw std::invalid_argument("signed_permutation_rep: sizes differ");
  MatrixRep rep{n, 1, "C", std::vector<QMatrix>(n * n, QMatrix::zero(1))};
  for (std::size_t i = 0; i < n; ++i) rep.u(i, perm.at(i))(0, 0) = signs[i];
  return rep;
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << "relation " << v.relation;
  if (v.depth) os << " at l=" << v.depth;
  if (!v.index.empty()) {
    os << " for";
    for (auto [i, j] : v.index) os << " u" << i << j;
  }
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

namespace {

struct Nonzero {
  std::size_t i, j;  // 0-based
  const QMatrix* m;
};

std::vector<Nonzero> nonzero_entries(const MatrixRep& rep) {
  std::vector<Nonzero> out;
  for (std::size_t i = 0; i < rep.n; ++i)
    for (std::size_t j = 0; j < rep.n; ++j)
      if (!rep.u(i, j).is_zero()) out.push_back({i, j, &rep.u(i, j)});
  return out;
}

// Distinct values of u_{i_2 j_2} ... u_{i_l j_l}^2 ... u_{i_2 j_2}, each tagged
// with the lexicographically first index tuple (i_2 j_2, ..., i_l j_l).
struct Sandwich {
  QMatrix value;
  std::vector<std::pair<std::size_t, std::size_t>> index;
};

std::vector<Sandwich> sandwiches(const std::vector<Nonzero>& nz, std::size_t length, std::size_t& products) {
  // innermost level
  std::vector<Sandwich> level;
  auto add = [](std::vector<Sandwich>& v, QMatrix m, std::vector<std::pair<std::size_t, std::size_t>> idx) {
    if (m.is_zero()) return;
    for (const auto& s : v)
      if (s.value == m) return;
    v.push_back({std::move(m), std::move(idx)});
  };
  for (const auto& e : nz) {
    ++products;
    add(level, *e.m * *e.m, {{e.i + 1, e.j + 1}});
  }
  for (std::size_t s = 1; s < length; ++s) {
    std::vector<Sandwich> next;
    for (const auto& e : nz)
      for (const auto& x : level) {
        ++products;
        auto idx = x.index;
        idx.insert(idx.begin(), {e.i + 1, e.j + 1});
        add(next, *e.m * x.value * *e.m, std::move(idx));
      }
    level = std::move(next);
  }
  return level;
}

}  // namespace

RelationReport check_relations(const MatrixRep& rep, std::size_t depth) {
  RelationReport r;
  r.depth = depth;
  const std::size_t n = rep.n;
  const QMatrix one = QMatrix::identity(rep.dim);
  auto record = [&](Violation v) {
    if (!r.first_violation) r.first_violation = std::move(v);
  };

  for (std::size_t i = 0; i < n && r.self_adjoint; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(rep.u(i, j).transpose() == rep.u(i, j))) {
        r.self_adjoint = false;
        record({"(i)", 0, {{i + 1, j + 1}}, "entry is not self-adjoint"});
        break;
      }

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (!(rep.u(i, k) * rep.u(j, k)).is_zero()) {
          if (r.orthogonality) record({"(iii)", 0, {{i + 1, k + 1}, {j + 1, k + 1}}, "column product is nonzero"});
          r.orthogonality = false;
        }
        if (!(rep.u(k, i) * rep.u(k, j)).is_zero()) {
          if (r.orthogonality) record({"(iii)", 0, {{k + 1, i + 1}, {k + 1, j + 1}}, "row product is nonzero"});
          r.orthogonality = false;
        }
      }

  for (std::size_t i = 0; i < n; ++i) {
    QMatrix row = QMatrix::zero(rep.dim), col = QMatrix::zero(rep.dim);
    for (std::size_t k = 0; k < n; ++k) {
      row += rep.u(i, k) * rep.u(i, k);
      col += rep.u(k, i) * rep.u(k, i);
    }
    if (!(row == one) || !(col == one)) {
      if (r.square_sums) record({"(iv)", 0, {{i + 1, 0}}, "squares do not sum to 1"});
      r.square_sums = false;
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QMatrix sq = rep.u(i, j) * rep.u(i, j);
      if (!(sq * sq == sq)) {
        if (r.partial_isometries) record({"partial isometry", 0, {{i + 1, j + 1}}, "u^4 != u^2"});
        r.partial_isometries = false;
      }
    }

  const auto nz = nonzero_entries(rep);
  for (std::size_t l = 2; l <= depth && r.commutation; ++l) {
    const auto inner = sandwiches(nz, l - 1, r.products_checked);
    for (const auto& f : nz) {  // u_{i_1 j_1}, in lexicographic order
      const QMatrix sq = *f.m * *f.m;
      const Sandwich* worst = nullptr;
      for (const auto& s : inner) {
        ++r.products_checked;
        if (sq * s.value == s.value * sq) continue;
        if (!worst || s.index < worst->index) worst = &s;
      }
      if (worst) {
        r.commutation = false;
        auto idx = worst->index;
        idx.insert(idx.begin(), {f.i + 1, f.j + 1});
        record({"(ii)", l, std::move(idx), "sandwich does not commute with u_{i1 j1}^2"});
        break;
      }
    }
  }
  return r;
}

std::size_t check_relations_prime(const MatrixRep& rep, std::size_t depth, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = rep.n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t failures = 0;
  for (std::size_t l = 2; l <= depth; ++l) {
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<std::size_t> i(l), j(l), al(l), be(l);
      for (auto* v : {&i, &j, &al, &be})
        for (auto& x : *v) x = pick(rng);
      if (s % 2 == 0) j = i;
      if (s % 4 < 2) be = al;
      const bool dij = i == j, dab = al == be;
      QMatrix lhs = QMatrix::zero(rep.dim), rhs = QMatrix::zero(rep.dim);
      if (dij) {
        QMatrix m = QMatrix::identity(rep.dim);
        for (std::size_t t = 1; t < l; ++t) m = m * rep.u(al[t], i[t]);
        for (std::size_t t = l; t-- > 1;) m = m * rep.u(be[t], i[t]);
        lhs = m * rep.u(be[0], i[0]) * rep.u(al[0], i[0]);
      }
      if (dab) {
        QMatrix m = rep.u(al[0], j[0]) * rep.u(al[0], i[0]);
        for (std::size_t t = 1; t < l; ++t) m = m * rep.u(al[t], i[t]);
        for (std::size_t t = l; t-- > 1;) m = m * rep.u(al[t], j[t]);
        rhs = m;
      }
      if (!(lhs == rhs)) ++failures;
    }
  }
  return failures;
}

// ---------------------------------------------------------------------------
// intertwiner test

Partition balanced_form(const Partition& p) {
  const Partition w = to_one_row(p);
  return split_one_row(w, (w.size() + 1) / 2);
}

namespace {

using EntryMap = std::map<std::pair<std::uint64_t, std::uint64_t>, QMatrix>;

// Σ over the free indices of products u_{x_1 y_1} ... u_{x_m y_m}, where one
// side of each factor is the given multi-index and the other is determined by
// the block labels (`labels`), with free blocks summed over.
void accumulate(const MatrixRep& rep, const std::vector<BlockId>& labels, std::vector<long>& value,
                const std::vector<std::size_t>& fixed, bool fixed_is_row, std::size_t pos, const QMatrix& acc,
                QMatrix& out) {
  if (pos == labels.size()) {
    out += acc;
    return;
  }
  auto step = [&](std::size_t v) {
    const QMatrix& e = fixed_is_row ? rep.u(fixed[pos], v) : rep.u(v, fixed[pos]);
    if (e.is_zero()) return;
    accumulate(rep, labels, value, fixed, fixed_is_row, pos + 1, acc * e, out);
  };
  const BlockId b = labels[pos];
  if (value[b] >= 0) {
    step(static_cast<std::size_t>(value[b]));
  } else {
    for (std::size_t v = 0; v < rep.n; ++v) {
      value[b] = static_cast<long>(v);
      step(v);
    }
    value[b] = -1;
  }
}

std::vector<std::size_t> digits(std::uint64_t x, std::size_t len, std::size_t n) {
  std::vector<std::size_t> d(len);
  for (std::size_t t = len; t-- > 0;) {
    d[t] = x % n;
    x /= n;
  }
  return d;
}

}  // namespace

bool intertwiner_check(const Partition& p, const MatrixRep& rep, std::size_t budget) {
  const std::size_t k = p.upper_arity(), l = p.lower_arity(), n = rep.n;
  if (ipow(n, std::max(k, l)) * rep.dim > budget)
    throw BudgetExceeded("intertwiner_check: n^max(k,l) * dim = " + std::to_string(ipow(n, std::max(k, l)) * rep.dim) +
                         " exceeds the budget " + std::to_string(budget));
  std::vector<BlockId> up(k), lo(l);
  for (std::size_t i = 0; i < k; ++i) up[i] = p.upper(i);
  for (std::size_t j = 0; j < l; ++j) lo[j] = p.lower(j);
  const QMatrix one = QMatrix::identity(rep.dim);

  // (T u^{⊗k})[j][i] = Σ_α δ_p(α, j) u_{α_1 i_1} ... u_{α_k i_k}
  EntryMap left;
  for (std::uint64_t jj = 0; jj < ipow(n, l); ++jj) {
    const auto j = digits(jj, l, n);
    std::vector<long> value(p.num_blocks(), -1);
    bool consistent = true;
    for (std::size_t t = 0; t < l && consistent; ++t) {
      long& v = value[lo[t]];
      if (v >= 0 && v != static_cast<long>(j[t])) consistent = false;
      v = static_cast<long>(j[t]);
    }
    if (!consistent) continue;
    for (std::uint64_t ii = 0; ii < ipow(n, k); ++ii) {
      const auto i = digits(ii, k, n);
      QMatrix sum = QMatrix::zero(rep.dim);
      auto v = value;
      accumulate(rep, up, v, i, false, 0, one, sum);
      if (!sum.is_zero()) left.emplace(std::pair{jj, ii}, std::move(sum));
    }
  }

  // (u^{⊗l} T)[j][i] = Σ_β u_{j_1 β_1} ... u_{j_l β_l} δ_p(i, β)
  EntryMap right;
  for (std::uint64_t ii = 0; ii < ipow(n, k); ++ii) {
    const auto i = digits(ii, k, n);
    std::vector<long> value(p.num_blocks(), -1);
    bool consistent = true;
    for (std::size_t t = 0; t < k && consistent; ++t) {
      long& v = value[up[t]];
      if (v >= 0 && v != static_cast<long>(i[t])) consistent = false;
      v = static_cast<long>(i[t]);
    }
    if (!consistent) continue;
    for (std::uint64_t jj = 0; jj < ipow(n, l); ++jj) {
      const auto j = digits(jj, l, n);
      QMatrix sum = QMatrix::zero(rep.dim);
      auto v = value;
      accumulate(rep, lo, v, j, true, 0, one, sum);
      if (!sum.is_zero()) right.emplace(std::pair{jj, ii}, std::move(sum));
    }
  }
  return left == right;
}

std::string export_matrix_literal(const MatrixRep& rep) {
  std::ostringstream os;
  os << "matrix-rep 1\n";
  os << "n " << rep.n << "\n";
  os << "dim " << rep.dim << "\n";
  os << "space " << rep.space << "\n";
  for (std::size_t i = 0; i < rep.n; ++i)
    for (std::size_t j = 0; j < rep.n; ++j) {
      os << "u " << i + 1 << " " << j + 1 << "\n";
      const QMatrix& m = rep.u(i, j);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
        os << "\n";
      }
    }
  return os.str();
}

}  // namespace pcat
