// Closed symbolic class for the toolkit: finite sums
//     sum_P  c_P(x) * e^{P(x)}
// with polynomial coefficients c_P and polynomial exponents P having zero
// constant term.  The class is closed under ring operations and
// differentiation, and admits exact evaluation at points where every
// exponent polynomial vanishes ("admissible" points, where e^0 = 1).
#pragma once

#include <holv/polynomial.hpp>

#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holv {

class Expr {
 public:
  using PartMap = std::map<Polynomial, Polynomial, PolynomialKeyLess>;

  Expr() = default;
  explicit Expr(const KScalar& c) { set_part(Polynomial{}, Polynomial(c)); }
  /*implicit*/ Expr(int n) : Expr(KScalar(n)) {}
  static Expr from_polynomial(const Polynomial& p) {
    Expr e;
    e.set_part(Polynomial{}, p);
    return e;
  }
  static Expr variable(int var) {
    return from_polynomial(Polynomial::variable(var));
  }
  // c(x) * e^{P(x)}; P must have zero constant term so that the atom is
  // well defined over Q(sqrt2) at admissible points.
  static Expr exponential_term(const Polynomial& coeff, const Polynomial& p) {
    if (!p.constant_term().is_zero())
      throw std::domain_error("exponent polynomial has a constant term");
    Expr e;
    e.set_part(p, coeff);
    return e;
  }

  const PartMap& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool is_polynomial() const {
    return parts_.empty() ||
           (parts_.size() == 1 && parts_.begin()->first.is_zero());
  }
  const Polynomial& polynomial_part() const {
    static const Polynomial zero;
    auto it = parts_.find(Polynomial{});
    return it == parts_.end() ? zero : it->second;
  }
  Polynomial as_polynomial() const {
    if (!is_polynomial())
      throw std::domain_error("expression has exponential atoms");
    return polynomial_part();
  }

  Expr operator-() const {
    Expr r;
    for (const auto& [p, c] : parts_) r.parts_[p] = -c;
    return r;
  }
  Expr& operator+=(const Expr& o) {
    for (const auto& [p, c] : o.parts_) add_part(p, c);
    return *this;
  }
  Expr& operator-=(const Expr& o) {
    for (const auto& [p, c] : o.parts_) add_part(p, -c);
    return *this;
  }
  friend Expr operator+(Expr l, const Expr& r) { return l += r; }
  friend Expr operator-(Expr l, const Expr& r) { return l -= r; }
  friend Expr operator*(const Expr& l, const Expr& r) {
    Expr out;
    for (const auto& [pl, cl] : l.parts_)
      for (const auto& [pr, cr] : r.parts_) out.add_part(pl + pr, cl * cr);
    return out;
  }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  friend Expr operator*(const KScalar& c, const Expr& e) {
    Expr out;
    if (c.is_zero()) return out;
    for (const auto& [p, ec] : e.parts_) out.parts_[p] = c * ec;
    return out;
  }
  friend Expr operator*(const Expr& e, const KScalar& c) { return c * e; }
  friend Expr operator/(const Expr& e, const KScalar& c) {
    return c.inverse() * e;
  }
  friend bool operator==(const Expr& l, const Expr& r) {
    return l.parts_ == r.parts_;
  }
  friend bool operator!=(const Expr& l, const Expr& r) { return !(l == r); }

  // Multiplicative inverse, defined exactly for single-term expressions
  // with constant coefficient: (c e^P)^{-1} = c^{-1} e^{-P}.
  Expr unit_inverse() const {
    if (parts_.size() != 1 || !parts_.begin()->second.is_constant())
      throw std::domain_error("expression is not an invertible unit");
    const auto& [p, c] = *parts_.begin();
    Expr out;
    out.set_part(-p, Polynomial(c.constant_term().inverse()));
    return out;
  }

  Expr derivative(int var) const {
    Expr out;
    for (const auto& [p, c] : parts_) {
      Polynomial d = c.derivative(var) + c * p.derivative(var);
      out.add_part(p, d);
    }
    return out;
  }

  // Exact value at an admissible point: every exponent polynomial must
  // vanish there (so each atom is e^0 = 1).
  KScalar eval(std::span<const KScalar> pt) const {
    KScalar acc(0);
    for (const auto& [p, c] : parts_) {
      if (!p.eval(pt).is_zero())
        throw std::domain_error(
            "point is not admissible: exponential atom does not reduce to 1");
      acc += c.eval(pt);
    }
    return acc;
  }
  bool admissible_at(std::span<const KScalar> pt) const {
    for (const auto& [p, c] : parts_)
      if (!p.eval(pt).is_zero()) return false;
    return true;
  }

  // Variables the expression actually depends on, including those that only
  // appear inside an exponential argument.
  std::set<int> support() const {
    std::set<int> vars;
    for (const auto& [p, c] : parts_) {
      p.collect_support(vars);
      c.collect_support(vars);
    }
    return vars;
  }

  static int key_compare(const Expr& l, const Expr& r) {
    auto il = l.parts_.begin(), ir = r.parts_.begin();
    for (; il != l.parts_.end() && ir != r.parts_.end(); ++il, ++ir) {
      int c = Polynomial::key_compare(il->first, ir->first);
      if (c != 0) return c;
      c = Polynomial::key_compare(il->second, ir->second);
      if (c != 0) return c;
    }
    if (il != l.parts_.end()) return 1;
    if (ir != r.parts_.end()) return -1;
    return 0;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Expr& e) {
    if (e.parts_.empty()) return os << "0";
    bool first = true;
    for (const auto& [p, c] : e.parts_) {
      if (!first) os << " + ";
      first = false;
      if (p.is_zero()) {
        os << c;
      } else {
        os << '(' << c << ")*exp(" << p << ')';
      }
    }
    return os;
  }

 private:
  void set_part(const Polynomial& p, Polynomial c) {
    if (!c.is_zero()) parts_[p] = std::move(c);
  }
  void add_part(const Polynomial& p, const Polynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = parts_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) parts_.erase(it);
    }
  }
  PartMap parts_;
};

inline Expr pow(const Expr& base, int n) {
  if (n < 0) throw std::domain_error("negative exponent");
  Expr out(KScalar(1));
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

}  // namespace holv

namespace Eigen {
template <>
struct NumTraits<holv::Expr> : GenericNumTraits<holv::Expr> {
  typedef holv::Expr Real;
  typedef holv::Expr NonInteger;
  typedef holv::Expr Nested;
  typedef holv::Expr Literal;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 40,
    AddCost = 150,
    MulCost = 300,
  };
};
}  // namespace Eigen

namespace holv {
using EMat = Eigen::Matrix<Expr, Eigen::Dynamic, Eigen::Dynamic>;
using EVec = Eigen::Matrix<Expr, Eigen::Dynamic, 1>;
}  // namespace holv
