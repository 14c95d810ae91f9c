#pragma once
// Exact linear algebra over the Q(sqrt2) scalar: echelon forms, rank,
// kernels, linear solves, incremental span tracking, decomposition of
// expression vectors over a basis of independent functions, and
// symmetric-matrix inertia computed two independent ways (Sturm-sequence
// sign counts on the characteristic polynomial, and symmetric
// elimination with hyperbolic 2x2 pivots).

#include <Eigen/Core>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holv/expr.hpp"
#include "holv/polynomial.hpp"
#include "holv/rational.hpp"

namespace holv {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// ---------------------------------------------------------------------------
// Echelon machinery.
// ---------------------------------------------------------------------------

struct RowEchelon {
  DenseMatrix<KScalar> reduced;            // reduced row echelon form
  std::vector<Eigen::Index> pivot_columns; // one per nonzero row, increasing
};

// Reduced row echelon form with unit pivots; exact over Q(sqrt2).
template <class Derived>
RowEchelon rref(const Eigen::MatrixBase<Derived>& input) {
  RowEchelon out;
  out.reduced = input;
  DenseMatrix<KScalar>& a = out.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const KScalar inv = a(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const KScalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

// Exact rank by row reduction.
template <class Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivot_columns.size());
}

// Basis of the kernel {x : m x = 0}; columns span the nullspace.
template <class Derived>
DenseMatrix<KScalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  const RowEchelon e = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> free_cols;
  {
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Eigen::Index c : e.pivot_columns) is_pivot[static_cast<size_t>(c)] = true;
    for (Eigen::Index c = 0; c < cols; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  }
  DenseMatrix<KScalar> basis(cols, static_cast<Eigen::Index>(free_cols.size()));
  basis.setConstant(KScalar(0));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = KScalar(1);
    for (size_t i = 0; i < e.pivot_columns.size(); ++i) {
      basis(e.pivot_columns[i], static_cast<Eigen::Index>(k)) =
          -e.reduced(static_cast<Eigen::Index>(i), f);
    }
  }
  return basis;
}

// One solution of A x = b, or nullopt when the system is inconsistent.
template <class DA, class DB>
std::optional<DenseVector<KScalar>> solve_linear(const Eigen::MatrixBase<DA>& A,
                                                 const Eigen::MatrixBase<DB>& b) {
  DenseMatrix<KScalar> aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  const RowEchelon e = rref(aug);
  DenseVector<KScalar> x(A.cols());
  x.setConstant(KScalar(0));
  for (size_t i = 0; i < e.pivot_columns.size(); ++i) {
    const Eigen::Index c = e.pivot_columns[i];
    if (c == A.cols()) return std::nullopt; // pivot in the rhs column
    x(c) = e.reduced(static_cast<Eigen::Index>(i), A.cols());
  }
  return x;
}

// Basis of functionals vanishing on the span of the given rows: the kernel
// of the row matrix, i.e. all K with rows * K = 0.
template <class Derived>
DenseMatrix<KScalar> annihilator(const Eigen::MatrixBase<Derived>& rows) {
  return nullspace(rows);
}

// ---------------------------------------------------------------------------
// Incremental span tracking (rows kept in reduced echelon form).
// ---------------------------------------------------------------------------

class SpanBuilder {
 public:
  explicit SpanBuilder(Eigen::Index ncols) : ncols_(ncols) {}

  // Returns true when v enlarges the span.
  bool add(DenseVector<KScalar> v) {
    reduce(v);
    Eigen::Index p = leading_index(v);
    if (p < 0) return false;
    const KScalar inv = v(p).inverse();
    for (Eigen::Index j = p; j < ncols_; ++j) v(j) = v(j) * inv;
    // Eliminate the new pivot column from the stored rows.
    for (auto& [piv, row] : rows_) {
      if (row(p).is_zero()) continue;
      const KScalar f = row(p);
      for (Eigen::Index j = 0; j < ncols_; ++j) row(j) = row(j) - f * v(j);
    }
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  bool contains(DenseVector<KScalar> v) const {
    reduce(v);
    return leading_index(v) < 0;
  }

  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index cols() const { return ncols_; }

  // Current basis as rows of a matrix (echelon rows, pivot order unsorted).
  DenseMatrix<KScalar> basis_rows() const {
    DenseMatrix<KScalar> m(dim(), ncols_);
    m.setConstant(KScalar(0));
    for (Eigen::Index i = 0; i < dim(); ++i) m.row(i) = rows_[static_cast<size_t>(i)].second.transpose();
    return m;
  }

 private:
  void reduce(DenseVector<KScalar>& v) const {
    for (const auto& [piv, row] : rows_) {
      if (v(piv).is_zero()) continue;
      const KScalar f = v(piv);
      for (Eigen::Index j = 0; j < ncols_; ++j) v(j) = v(j) - f * row(j);
    }
  }
  Eigen::Index leading_index(const DenseVector<KScalar>& v) const {
    for (Eigen::Index j = 0; j < ncols_; ++j)
      if (!v(j).is_zero()) return j;
    return -1;
  }

  Eigen::Index ncols_;
  std::vector<std::pair<Eigen::Index, DenseVector<KScalar>>> rows_;
};

// ---------------------------------------------------------------------------
// Decomposition of expression vectors over independent basis functions.
// ---------------------------------------------------------------------------

// One basis function: monomial * exp(exponent). Distinct atoms are linearly
// independent functions, so exact rank over the atom basis equals exact rank
// of the expression family as functions.
struct FunctionAtom {
  Polynomial exponent; // P in e^P (zero polynomial for the pure-polynomial part)
  Mono monomial;       // x^alpha

  friend bool operator<(const FunctionAtom& l, const FunctionAtom& r) {
    const int c = Polynomial::key_compare(l.exponent, r.exponent);
    if (c != 0) return c < 0;
    return GradedLexLess{}(l.monomial, r.monomial);
  }
};

struct FunctionBasisDecomposition {
  std::vector<FunctionAtom> basis;
  DenseMatrix<KScalar> coeffs; // coeffs(k, j): coefficient of basis[j] in v[k]

  // Exact rank of the inputs as functions.
  Eigen::Index rank() const { return exact_rank(coeffs); }
};

inline FunctionBasisDecomposition function_basis_decompose(const std::vector<Expr>& v) {
  std::map<FunctionAtom, Eigen::Index> index;
  for (const Expr& e : v) {
    for (const auto& [expo, poly] : e.parts()) {
      for (const auto& [mono, coeff] : poly.terms()) {
        (void)coeff;
        index.emplace(FunctionAtom{expo, mono}, 0);
      }
    }
  }
  FunctionBasisDecomposition out;
  out.basis.reserve(index.size());
  Eigen::Index j = 0;
  for (auto& [atom, col] : index) {
    col = j++;
    out.basis.push_back(atom);
  }
  out.coeffs.resize(static_cast<Eigen::Index>(v.size()), j);
  out.coeffs.setConstant(KScalar(0));
  for (size_t k = 0; k < v.size(); ++k) {
    for (const auto& [expo, poly] : v[k].parts()) {
      for (const auto& [mono, coeff] : poly.terms()) {
        out.coeffs(static_cast<Eigen::Index>(k), index.at(FunctionAtom{expo, mono})) = coeff;
      }
    }
  }
  return out;
}

// Recompose row k of a decomposition back into an Expr (test support).
inline Expr function_basis_recompose(const FunctionBasisDecomposition& d, Eigen::Index k) {
  Expr out;
  for (Eigen::Index j = 0; j < d.coeffs.cols(); ++j) {
    const KScalar& c = d.coeffs(k, j);
    if (c.is_zero()) continue;
    Polynomial term = Polynomial::constant(c);
    for (int var = 0; var < kNumVars; ++var) {
      for (int e = 0; e < d.basis[static_cast<size_t>(j)].monomial[static_cast<size_t>(var)]; ++e)
        term = term * Polynomial::variable(var);
    }
    if (d.basis[static_cast<size_t>(j)].exponent.is_zero()) {
      out = out + Expr::from_polynomial(term);
    } else {
      out = out + Expr::exponential_term(term, d.basis[static_cast<size_t>(j)].exponent);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q(sqrt2) (characteristic polynomials, Sturm).
// ---------------------------------------------------------------------------

class UPoly {
 public:
  UPoly() = default; // zero polynomial
  explicit UPoly(std::vector<KScalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static UPoly constant(const KScalar& k) { return UPoly({k}); }
  static UPoly variable() { return UPoly({KScalar(0), KScalar(1)}); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const KScalar& coeff(size_t i) const {
    static const KScalar kZero(0);
    return i < c_.size() ? c_[i] : kZero;
  }
  const KScalar& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<KScalar>& coeffs() const { return c_; }

  KScalar eval(const KScalar& x) const {
    KScalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<KScalar> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = KScalar(static_cast<long>(i)) * c_[i];
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<KScalar> r(std::max(a.c_.size(), b.c_.size()), KScalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    std::vector<KScalar> r(c_);
    for (auto& x : r) x = -x;
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<KScalar> r(a.c_.size() + b.c_.size() - 1, KScalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const KScalar& k, const UPoly& p) {
    std::vector<KScalar> r(p.c_);
    for (auto& x : r) x = k * x;
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly r = a;
    std::vector<KScalar> q(
        a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0,
        KScalar(0));
    const KScalar lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int shift = r.degree() - b.degree();
      const KScalar f = r.leading() * lead_inv;
      q[static_cast<size_t>(shift)] = f;
      std::vector<KScalar> sub(r.c_);
      for (size_t i = 0; i < b.c_.size(); ++i)
        sub[i + static_cast<size_t>(shift)] = sub[i + static_cast<size_t>(shift)] - f * b.c_[i];
      sub.pop_back(); // leading term cancels exactly
      r = UPoly(std::move(sub));
    }
    return {UPoly(std::move(q)), r};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  UPoly monic() const {
    if (is_zero()) return UPoly();
    return leading().inverse() * (*this);
  }

  // Monic greatest common divisor.
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = (a % b).monic(); // normalization keeps coefficients tame
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Number of trailing zero coefficients (multiplicity of the root 0).
  int trailing_zeros() const {
    int z = 0;
    for (const auto& x : c_) {
      if (!x.is_zero()) break;
      ++z;
    }
    return z;
  }

  // Divide by x^k (requires the first k coefficients to vanish).
  UPoly shift_down(int k) const {
    if (trailing_zeros() < k) throw std::domain_error("shift_down: nonzero low coefficients");
    if (static_cast<size_t>(k) >= c_.size()) return UPoly();
    return UPoly(std::vector<KScalar>(c_.begin() + k, c_.end()));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<KScalar> c_; // c_[i] multiplies x^i; empty <=> zero
};

// Characteristic polynomial det(lambda I - S) by the Faddeev-LeVerrier
// recursion (exact; divisions are by integers only).
inline UPoly char_poly(const DenseMatrix<KScalar>& S) {
  const Eigen::Index n = S.rows();
  if (S.cols() != n) throw std::invalid_argument("char_poly: matrix must be square");
  std::vector<KScalar> c(static_cast<size_t>(n) + 1, KScalar(0));
  c[static_cast<size_t>(n)] = KScalar(1);
  DenseMatrix<KScalar> M = DenseMatrix<KScalar>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    DenseMatrix<KScalar> MS = S * M;
    KScalar tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += MS(i, i);
    const KScalar ck = -(tr / KScalar(static_cast<long>(k)));
    c[static_cast<size_t>(n - k)] = ck;
    M = MS + ck * DenseMatrix<KScalar>::Identity(n, n);
  }
  return UPoly(std::move(c));
}

// Square-free decomposition (Yun): result[i] has the factors of multiplicity
// i+1, each monic; product over i of result[i]^(i+1) = input/leading.
inline std::vector<UPoly> squarefree_factors(const UPoly& f) {
  std::vector<UPoly> out;
  if (f.degree() <= 0) return out;
  const UPoly fm = f.monic();
  const UPoly g = UPoly::gcd(fm, fm.derivative());
  UPoly c = fm / g;
  UPoly d = fm.derivative() / g - c.derivative();
  while (c.degree() > 0) {
    UPoly p = UPoly::gcd(c, d);
    out.push_back(p.monic());
    c = c / p;
    d = d / p - c.derivative();
  }
  return out;
}

// Sturm chain of a square-free polynomial.
struct SturmChain {
  std::vector<UPoly> seq;

  explicit SturmChain(const UPoly& f) {
    seq.push_back(f);
    UPoly d = f.derivative();
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2 && !seq.back().is_zero()) {
      UPoly r = -(seq[seq.size() - 2] % seq.back());
      if (r.is_zero()) break;
      seq.push_back(std::move(r));
    }
  }

  // Sign variation count of the chain at 0, +infinity, or -infinity.
  enum class At { kZero, kPlusInf, kMinusInf };
  int variations(At where) const {
    int count = 0, prev = 0;
    for (const UPoly& p : seq) {
      int s = 0;
      switch (where) {
        case At::kZero: s = p.eval(KScalar(0)).sign(); break;
        case At::kPlusInf: s = p.is_zero() ? 0 : p.leading().sign(); break;
        case At::kMinusInf:
          s = p.is_zero() ? 0 : (p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign());
          break;
      }
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  // Distinct roots in (0, +inf) and (-inf, 0); requires f(0) != 0.
  int roots_positive() const { return variations(At::kZero) - variations(At::kPlusInf); }
  int roots_negative() const { return variations(At::kMinusInf) - variations(At::kZero); }
};

struct Inertia {
  Eigen::Index positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Inertia of a symmetric matrix via Sturm-sequence sign counts on the
// characteristic polynomial: strip the zero eigenvalue, split the rest into
// square-free factors, and count sign-definite roots per multiplicity.
namespace detail {
inline void require_symmetric(const DenseMatrix<KScalar>& S, const char* who) {
  for (Eigen::Index i = 0; i < S.rows(); ++i)
    for (Eigen::Index j = i + 1; j < S.cols(); ++j)
      if (!(S(i, j) == S(j, i)))
        throw std::invalid_argument(std::string(who) + ": matrix must be symmetric");
}
} // namespace detail

inline Inertia signature_of(const DenseMatrix<KScalar>& S) {
  const Eigen::Index n = S.rows();
  detail::require_symmetric(S, "signature_of");
  const UPoly p = char_poly(S);
  Inertia out;
  out.zero = p.trailing_zeros();
  const UPoly q = p.shift_down(static_cast<int>(out.zero));
  const std::vector<UPoly> factors = squarefree_factors(q);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    const SturmChain chain(factors[i]);
    const Eigen::Index mult = static_cast<Eigen::Index>(i) + 1;
    out.positive += mult * chain.roots_positive();
    out.negative += mult * chain.roots_negative();
  }
  if (out.positive + out.negative + out.zero != n)
    throw std::logic_error("signature_of: root counts do not sum to the dimension");
  return out;
}

// Independent oracle: symmetric elimination with 1x1 pivots and hyperbolic
// 2x2 pivots (each contributing one positive and one negative direction).
inline Inertia inertia_by_elimination(DenseMatrix<KScalar> S) {
  detail::require_symmetric(S, "inertia_by_elimination");
  std::vector<Eigen::Index> active(static_cast<size_t>(S.rows()));
  for (size_t i = 0; i < active.size(); ++i) active[i] = static_cast<Eigen::Index>(i);
  Inertia out;
  while (!active.empty()) {
    // 1x1 pivot on a nonzero diagonal entry when one exists.
    Eigen::Index piv = -1;
    for (Eigen::Index k : active)
      if (!S(k, k).is_zero()) { piv = k; break; }
    if (piv >= 0) {
      (S(piv, piv).sign() > 0 ? out.positive : out.negative) += 1;
      const KScalar inv = S(piv, piv).inverse();
      std::vector<Eigen::Index> rest;
      for (Eigen::Index k : active)
        if (k != piv) rest.push_back(k);
      for (Eigen::Index i : rest)
        for (Eigen::Index j : rest) S(i, j) = S(i, j) - S(i, piv) * inv * S(piv, j);
      active = std::move(rest);
      continue;
    }
    // All active diagonal entries vanish: hyperbolic pair on any nonzero
    // off-diagonal entry, inertia (1, 1).
    Eigen::Index pi = -1, pj = -1;
    for (size_t a = 0; a < active.size() && pi < 0; ++a)
      for (size_t b = a + 1; b < active.size(); ++b)
        if (!S(active[a], active[b]).is_zero()) { pi = active[a]; pj = active[b]; break; }
    if (pi < 0) { // remaining block is identically zero
      out.zero += static_cast<Eigen::Index>(active.size());
      break;
    }
    out.positive += 1;
    out.negative += 1;
    const KScalar binv = S(pi, pj).inverse();
    std::vector<Eigen::Index> rest;
    for (Eigen::Index k : active)
      if (k != pi && k != pj) rest.push_back(k);
    for (Eigen::Index p : rest)
      for (Eigen::Index q : rest)
        S(p, q) = S(p, q) - binv * (S(p, pi) * S(pj, q) + S(p, pj) * S(pi, q));
    active = std::move(rest);
  }
  return out;
}

} // namespace holv
