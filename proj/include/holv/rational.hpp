// Exact arithmetic in the real quadratic field Q(sqrt 2).
//
// A KScalar is a + b*sqrt2 with arbitrary-precision rational a, b.  All
// operations are exact; comparisons use the real embedding (sqrt2 > 0).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace holv {

class KScalar {
 public:
  KScalar() : a_(0), b_(0) {}
  KScalar(int n) : a_(n), b_(0) {}
  KScalar(long n) : a_(n), b_(0) {}
  KScalar(const mpq_class& a) : a_(a), b_(0) { canon(); }
  KScalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    canon();
  }
  static KScalar sqrt2() { return KScalar(mpq_class(0), mpq_class(1)); }
  static KScalar of_fraction(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return KScalar(q);
  }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  KScalar operator-() const { return KScalar(-a_, -b_); }
  KScalar& operator+=(const KScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  KScalar& operator-=(const KScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  KScalar& operator*=(const KScalar& o) {
    // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s
    mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  KScalar inverse() const {
    // 1/(a + b s) = (a - b s)/(a^2 - 2 b^2); the norm vanishes only at 0
    // because sqrt2 is irrational.
    mpq_class n = a_ * a_ - 2 * b_ * b_;
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt2)");
    return KScalar(a_ / n, -b_ / n);
  }
  KScalar& operator/=(const KScalar& o) { return *this *= o.inverse(); }

  friend KScalar operator+(KScalar l, const KScalar& r) { return l += r; }
  friend KScalar operator-(KScalar l, const KScalar& r) { return l -= r; }
  friend KScalar operator*(KScalar l, const KScalar& r) { return l *= r; }
  friend KScalar operator/(KScalar l, const KScalar& r) { return l /= r; }
  friend bool operator==(const KScalar& l, const KScalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const KScalar& l, const KScalar& r) {
    return !(l == r);
  }

  // Sign of the real number a + b*sqrt2.
  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b| sqrt2  <=>  a^2 vs 2 b^2
    mpq_class d = a_ * a_ - 2 * b_ * b_;
    return sgn(d) * sa;
  }
  friend bool operator<(const KScalar& l, const KScalar& r) {
    return (l - r).sign() < 0;
  }
  friend bool operator<=(const KScalar& l, const KScalar& r) {
    return (l - r).sign() <= 0;
  }
  friend bool operator>(const KScalar& l, const KScalar& r) { return r < l; }
  friend bool operator>=(const KScalar& l, const KScalar& r) {
    return r <= l;
  }

  // Arbitrary total order usable as a map key (not the real-line order).
  static int key_compare(const KScalar& l, const KScalar& r) {
    int c = cmp(l.a_, r.a_);
    if (c != 0) return c;
    return cmp(l.b_, r.b_);
  }

  KScalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return a_.get_d() + b_.get_d() * 1.41421356237309504880; }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const KScalar& v) {
    if (v.b_ == 0) return os << v.a_;
    if (v.a_ == 0) {
      if (v.b_ == 1) return os << "sqrt2";
      if (v.b_ == -1) return os << "-sqrt2";
      return os << v.b_ << "*sqrt2";
    }
    os << v.a_;
    if (v.b_ > 0)
      os << '+';
    if (v.b_ == 1)
      os << "sqrt2";
    else if (v.b_ == -1)
      os << "-sqrt2";
    else
      os << v.b_ << "*sqrt2";
    return os;
  }

 private:
  void canon() {
    a_.canonicalize();
    b_.canonicalize();
  }
  mpq_class a_, b_;
};

inline KScalar abs(const KScalar& v) { return v.abs(); }

struct KScalarKeyLess {
  bool operator()(const KScalar& l, const KScalar& r) const {
    return KScalar::key_compare(l, r) < 0;
  }
};

}  // namespace holv

#include <Eigen/Core>

namespace Eigen {
template <>
struct NumTraits<holv::KScalar> : GenericNumTraits<holv::KScalar> {
  typedef holv::KScalar Real;
  typedef holv::KScalar NonInteger;
  typedef holv::KScalar Nested;
  typedef holv::KScalar Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30,
  };
};
}  // namespace Eigen

namespace holv {
using KMat = Eigen::Matrix<KScalar, Eigen::Dynamic, Eigen::Dynamic>;
using KVec = Eigen::Matrix<KScalar, Eigen::Dynamic, 1>;
}  // namespace holv
