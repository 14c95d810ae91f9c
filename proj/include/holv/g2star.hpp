#pragma once
// The 14-dimensional matrix Lie algebra preserving the split metric eta and
// the generic 3-form omega on R^7: the seven-by-seven coefficient pattern in
// the s1..s14 coordinates, its inverse readout with consistency validation,
// brackets, the h(A,z,c) parabolic embedding with its sigma/rho/U blocks,
// omega itself, and the Bryant metric reconstruction from omega.

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "holv/expr.hpp"
#include "holv/form.hpp"
#include "holv/rational.hpp"

namespace holv {

// A matrix that was expected to lie in the Eq.-pattern algebra but violates
// one of its repeated-entry consistency relations.
struct NotInG2 : std::runtime_error {
  explicit NotInG2(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// The coefficient pattern and its readout, generic over the coefficient ring
// (exact scalars for algebra work, expressions for curvature functions).
// ---------------------------------------------------------------------------

template <class Ring>
Eigen::Matrix<Ring, Eigen::Dynamic, Eigen::Dynamic> eq2_matrix(const std::array<Ring, 14>& s) {
  const Ring rt2{KScalar::sqrt2()};
  const Ring zero{KScalar(0)};
  auto v = [&](int i) -> const Ring& { return s[static_cast<size_t>(i - 1)]; };
  Eigen::Matrix<Ring, Eigen::Dynamic, Eigen::Dynamic> m(7, 7);
  m.setConstant(zero);
  m(0, 0) = v(1) + v(4);  m(0, 1) = -v(10);      m(0, 2) = v(9);
  m(0, 3) = rt2 * v(6);   m(0, 4) = -v(12);      m(0, 6) = -v(11);
  m(1, 0) = -v(8);        m(1, 1) = v(1);        m(1, 2) = v(2);
  m(1, 3) = rt2 * v(9);   m(1, 4) = v(6);        m(1, 5) = v(11);
  m(2, 0) = v(7);         m(2, 1) = v(3);        m(2, 2) = v(4);
  m(2, 3) = rt2 * v(10);  m(2, 5) = v(12);       m(2, 6) = -v(6);
  m(3, 0) = rt2 * v(5);   m(3, 1) = rt2 * v(7);  m(3, 2) = rt2 * v(8);
  m(3, 4) = rt2 * v(10);  m(3, 5) = rt2 * v(6);  m(3, 6) = rt2 * v(9);
  m(4, 0) = -v(14);       m(4, 1) = v(5);        m(4, 3) = rt2 * v(8);
  m(4, 4) = -v(4);        m(4, 5) = -v(9);       m(4, 6) = -v(2);
  m(5, 1) = v(13);        m(5, 2) = v(14);       m(5, 3) = rt2 * v(5);
  m(5, 4) = -v(7);        m(5, 5) = -v(1) - v(4); m(5, 6) = v(8);
  m(6, 0) = -v(13);       m(6, 2) = -v(5);       m(6, 3) = rt2 * v(7);
  m(6, 4) = -v(3);        m(6, 5) = v(10);       m(6, 6) = -v(1);
  return m;
}

// Read the 14 coordinates off the designated witness entries. No validation;
// pair with eq2_residual to certify pattern membership.
template <class Ring, class Derived>
std::array<Ring, 14> eq2_readout(const Eigen::MatrixBase<Derived>& m) {
  std::array<Ring, 14> s{};
  auto put = [&](int i, const Ring& val) { s[static_cast<size_t>(i - 1)] = val; };
  put(1, m(1, 1));
  put(4, m(0, 0) - m(1, 1));
  put(10, -m(0, 1));
  put(8, -m(1, 0));
  put(9, m(0, 2));
  put(6, m(1, 4));
  put(12, -m(0, 4));
  put(11, -m(0, 6));
  put(2, m(1, 2));
  put(3, m(2, 1));
  put(7, m(2, 0));
  put(5, m(4, 1));
  put(13, m(5, 1));
  put(14, -m(4, 0));
  return s;
}

// m minus the pattern rebuilt from its readout; identically zero exactly when
// m satisfies every repeated-entry relation of the pattern.
template <class Ring, class Derived>
Eigen::Matrix<Ring, Eigen::Dynamic, Eigen::Dynamic> eq2_residual(const Eigen::MatrixBase<Derived>& m) {
  return m - eq2_matrix<Ring>(eq2_readout<Ring>(m));
}

// ---------------------------------------------------------------------------
// Exact algebra elements.
// ---------------------------------------------------------------------------

class G2Element {
 public:
  G2Element() : s_{}, matrix_(eq2_matrix<KScalar>(s_)) {}

  static G2Element from_s(const std::array<KScalar, 14>& s) { return G2Element(s); }

  // Basis element with s_{i} = 1 (1-based index).
  static G2Element basis(int i) {
    std::array<KScalar, 14> s{};
    for (auto& x : s) x = KScalar(0);
    s[static_cast<size_t>(i - 1)] = KScalar(1);
    return G2Element(s);
  }

  // Validates the consistency relations; throws NotInG2 on violation.
  static G2Element from_matrix(const KMat& m) {
    if (m.rows() != 7 || m.cols() != 7) throw std::invalid_argument("from_matrix: need 7x7");
    const std::array<KScalar, 14> s = eq2_readout<KScalar>(m);
    const KMat back = eq2_matrix<KScalar>(s);
    for (Eigen::Index i = 0; i < 7; ++i)
      for (Eigen::Index j = 0; j < 7; ++j)
        if (!(m(i, j) == back(i, j)))
          throw NotInG2("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") violates the coefficient-pattern relations");
    return G2Element(s);
  }

  const std::array<KScalar, 14>& s() const { return s_; }
  const KMat& matrix() const { return matrix_; }

  bool is_zero() const {
    for (const auto& x : s_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend G2Element operator+(const G2Element& a, const G2Element& b) {
    std::array<KScalar, 14> s;
    for (size_t i = 0; i < 14; ++i) s[i] = a.s_[i] + b.s_[i];
    return G2Element(s);
  }
  friend G2Element operator-(const G2Element& a, const G2Element& b) {
    std::array<KScalar, 14> s;
    for (size_t i = 0; i < 14; ++i) s[i] = a.s_[i] - b.s_[i];
    return G2Element(s);
  }
  G2Element operator-() const {
    std::array<KScalar, 14> s;
    for (size_t i = 0; i < 14; ++i) s[i] = -s_[i];
    return G2Element(s);
  }
  friend G2Element operator*(const KScalar& k, const G2Element& a) {
    std::array<KScalar, 14> s;
    for (size_t i = 0; i < 14; ++i) s[i] = k * a.s_[i];
    return G2Element(s);
  }
  friend bool operator==(const G2Element& a, const G2Element& b) {
    for (size_t i = 0; i < 14; ++i)
      if (!(a.s_[i] == b.s_[i])) return false;
    return true;
  }

  // Matrix commutator xy - yx, re-read into coordinates. Closure of the
  // algebra makes the validation a structural self-check.
  friend G2Element bracket(const G2Element& x, const G2Element& y) {
    return from_matrix(x.matrix_ * y.matrix_ - y.matrix_ * x.matrix_);
  }

 private:
  explicit G2Element(const std::array<KScalar, 14>& s) : s_(s), matrix_(eq2_matrix<KScalar>(s)) {}

  std::array<KScalar, 14> s_;
  KMat matrix_;
};

// The parabolic slice: s3 = s5 = s7 = s13 = s14 = 0.
inline bool p2_member(const G2Element& x) {
  for (int i : {3, 5, 7, 13, 14})
    if (!x.s()[static_cast<size_t>(i - 1)].is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The h(A, z, c) embedding and its blocks.
// ---------------------------------------------------------------------------

struct HParams {
  KMat A;                      // 2x2
  std::array<KScalar, 4> z;    // z1..z4
  KScalar c;

  HParams() : A(KMat(2, 2)), z{}, c(KScalar(0)) {
    A.setConstant(KScalar(0));
    for (auto& x : z) x = KScalar(0);
  }
  HParams(KMat a, std::array<KScalar, 4> zz, KScalar cc) : A(std::move(a)), z(zz), c(std::move(cc)) {}
};

inline KMat sigma_of(const std::array<KScalar, 4>& z) {
  KMat m(2, 3);
  const KScalar rt2 = KScalar::sqrt2();
  m << z[1], rt2 * z[2], z[3],
       z[0], rt2 * z[1], z[2];
  return m;
}

inline KMat sigma_star_of(const std::array<KScalar, 4>& z) {
  KMat m(3, 2);
  const KScalar rt2 = KScalar::sqrt2();
  m << -z[3], -z[2],
       rt2 * z[2], rt2 * z[1],
       -z[1], -z[0];
  return m;
}

inline KMat rho_of(const KMat& A) {
  const KScalar a1 = A(0, 0), a2 = A(0, 1), a3 = A(1, 0), a4 = A(1, 1);
  const KScalar rt2 = KScalar::sqrt2();
  KMat m(3, 3);
  m << a1 - a4, -rt2 * a2, KScalar(0),
       -rt2 * a3, KScalar(0), -rt2 * a2,
       KScalar(0), -rt2 * a3, a4 - a1;
  return m;
}

inline KMat u_of(const KScalar& c) {
  KMat m(2, 2);
  m << KScalar(0), -c,
       c, KScalar(0);
  return m;
}

inline G2Element h_of(const HParams& p) {
  KMat m(7, 7);
  m.setConstant(KScalar(0));
  m.block(0, 0, 2, 2) = p.A;
  m.block(0, 2, 2, 3) = sigma_of(p.z);
  m.block(0, 5, 2, 2) = u_of(p.c);
  m.block(2, 2, 3, 3) = rho_of(p.A);
  m.block(2, 5, 3, 2) = sigma_star_of(p.z);
  m.block(5, 5, 2, 2) = -p.A.transpose();
  return G2Element::from_matrix(m);
}

// h-parameters of a parabolic-slice element (requires p2_member).
inline HParams h_params_of(const G2Element& x) {
  if (!p2_member(x)) throw std::invalid_argument("h_params_of: element is not in the parabolic slice");
  const auto& s = x.s();
  auto v = [&](int i) { return s[static_cast<size_t>(i - 1)]; };
  KMat A(2, 2);
  A << v(1) + v(4), -v(10),
       -v(8), v(1);
  return HParams(A, {v(2), v(9), v(6), -v(12)}, v(11));
}

// Induced action of a 2x2 matrix on the z-coordinates: the unique linear
// action satisfying sigma(A.z) = A sigma(z) - sigma(z) rho(A).
inline std::array<KScalar, 4> gl2_action_on_z(const KMat& A, const std::array<KScalar, 4>& z) {
  const KScalar a1 = A(0, 0), a2 = A(0, 1), a3 = A(1, 0), a4 = A(1, 1);
  return {
      (KScalar(2) * a4 - a1) * z[0] + KScalar(3) * a3 * z[1],
      a2 * z[0] + a4 * z[1] + KScalar(2) * a3 * z[2],
      KScalar(2) * a2 * z[1] + a1 * z[2] + a3 * z[3],
      KScalar(3) * a2 * z[2] + (KScalar(2) * a1 - a4) * z[3],
  };
}

inline bool sigma_intertwine_check(const KMat& A, const std::array<KScalar, 4>& z) {
  const KMat lhs = sigma_of(gl2_action_on_z(A, z));
  const KMat rhs = A * sigma_of(z) - sigma_of(z) * rho_of(A);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      if (!(lhs(i, j) == rhs(i, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The invariant metric and 3-form.
// ---------------------------------------------------------------------------

inline const KMat& eta_matrix() {
  static const KMat eta = [] {
    KMat m(7, 7);
    m.setConstant(KScalar(0));
    m(0, 5) = m(5, 0) = KScalar(1); // pairs (1,6)
    m(1, 6) = m(6, 1) = KScalar(1); // (2,7)
    m(2, 4) = m(4, 2) = KScalar(1); // (3,5)
    m(3, 3) = KScalar(-1);          // (4,4)
    return m;
  }();
  return eta;
}

// omega = sqrt2(-b^{157} + b^{236}) - b^4 ^ (b^{16} - b^{27} - b^{35}),
// expanded over sorted frame-index triples.
inline const Form& omega_form() {
  static const Form omega = [] {
    Form w(3);
    const KScalar rt2 = KScalar::sqrt2();
    auto mask = [](int i, int j, int k) {
      return static_cast<FormIndexSet>((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)));
    };
    w.add_term(mask(1, 5, 7), Expr(-rt2));
    w.add_term(mask(2, 3, 6), Expr(rt2));
    w.add_term(mask(1, 4, 6), Expr(KScalar(1)));
    w.add_term(mask(2, 4, 7), Expr(KScalar(-1)));
    w.add_term(mask(3, 4, 5), Expr(KScalar(-1)));
    return w;
  }();
  return omega;
}

namespace detail {
// Dense antisymmetric coefficient table of omega on frame indices (0-based).
inline const std::array<std::array<std::array<KScalar, 7>, 7>, 7>& omega_table() {
  static const auto table = [] {
    std::array<std::array<std::array<KScalar, 7>, 7>, 7> t;
    for (auto& plane : t)
      for (auto& row : plane)
        for (auto& x : row) x = KScalar(0);
    for (const auto& [mask, coeff] : omega_form().terms()) {
      std::array<int, 3> idx{};
      int n = 0;
      for (int i = 0; i < 7; ++i)
        if (mask >> i & 1) idx[static_cast<size_t>(n++)] = i;
      const KScalar c = coeff.as_polynomial().constant_term();
      // all even permutations get +c, odd ones -c
      const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
      for (int p = 0; p < 6; ++p) {
        const KScalar signed_c = p < 3 ? c : -c;
        t[static_cast<size_t>(idx[static_cast<size_t>(perms[p][0])])]
         [static_cast<size_t>(idx[static_cast<size_t>(perms[p][1])])]
         [static_cast<size_t>(idx[static_cast<size_t>(perms[p][2])])] = signed_c;
      }
    }
    return t;
  }();
  return table;
}
} // namespace detail

// True iff the induced degree-3 action of X kills omega:
// omega(Xu, v, w) + omega(u, Xv, w) + omega(u, v, Xw) = 0 for all triples.
// Accepts any 7x7 matrix, so it can also certify that a matrix lies outside
// the annihilator (e.g. a generic eta-skew matrix).
inline bool annihilates_omega(const KMat& X) {
  const auto& w = detail::omega_table();
  for (int u = 0; u < 7; ++u) {
    for (int v = u + 1; v < 7; ++v) {
      for (int t = v + 1; t < 7; ++t) {
        KScalar acc(0);
        for (int a = 0; a < 7; ++a) {
          acc += X(a, u) * w[static_cast<size_t>(a)][static_cast<size_t>(v)][static_cast<size_t>(t)];
          acc += X(a, v) * w[static_cast<size_t>(u)][static_cast<size_t>(a)][static_cast<size_t>(t)];
          acc += X(a, t) * w[static_cast<size_t>(u)][static_cast<size_t>(v)][static_cast<size_t>(a)];
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

inline bool annihilates_omega(const G2Element& x) { return annihilates_omega(x.matrix()); }

// Reconstruct the invariant metric from omega through
// <X, Y> vol = (1/6) iota_X(omega) ^ iota_Y(omega) ^ omega, with
// vol = b^1 ^ ... ^ b^7. Returns the matrix and the single global sign s
// with matrix = s * eta; throws if no global sign works (a structural bug).
inline std::pair<KMat, int> bryant_metric_from_omega() {
  const Form& omega = omega_form();
  KMat metric(7, 7);
  const KScalar sixth = KScalar(1) / KScalar(6);
  std::array<std::vector<Expr>, 7> frame;
  for (int i = 0; i < 7; ++i) {
    frame[static_cast<size_t>(i)].assign(7, Expr(KScalar(0)));
    frame[static_cast<size_t>(i)][static_cast<size_t>(i)] = Expr(KScalar(1));
  }
  std::array<Form, 7> contracted = {Form(2), Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  for (int i = 0; i < 7; ++i) contracted[static_cast<size_t>(i)] = omega.interior(frame[static_cast<size_t>(i)]);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      const Form seven = wedge(wedge(contracted[static_cast<size_t>(i)], contracted[static_cast<size_t>(j)]), omega);
      const Expr& top = seven.coefficient(0b1111111);
      metric(i, j) = sixth * (top.is_zero() ? KScalar(0) : top.as_polynomial().constant_term());
    }
  }
  const KMat& eta = eta_matrix();
  for (int sign : {1, -1}) {
    bool match = true;
    for (Eigen::Index i = 0; i < 7 && match; ++i)
      for (Eigen::Index j = 0; j < 7 && match; ++j)
        if (!(metric(i, j) == KScalar(sign) * eta(i, j))) match = false;
    if (match) return {metric, sign};
  }
  throw std::logic_error("bryant_metric_from_omega: result is not proportional to the invariant metric");
}

} // namespace holv
