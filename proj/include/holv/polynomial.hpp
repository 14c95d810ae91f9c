// Multivariate polynomials in the coordinates x1..x7 over Q(sqrt 2),
// stored as a canonical graded-lex ordered map from exponent vectors to
// nonzero coefficients.
#pragma once

#include <holv/rational.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>

namespace holv {

inline constexpr int kNumVars = 7;
using Mono = std::array<std::uint8_t, kNumVars>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

struct GradedLexLess {
  bool operator()(const Mono& l, const Mono& r) const {
    int dl = mono_degree(l), dr = mono_degree(r);
    if (dl != dr) return dl < dr;
    return l < r;  // lexicographic on exponent vectors
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Mono, KScalar, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(const KScalar& c) {
    if (!c.is_zero()) terms_[Mono{}] = c;
  }
  static Polynomial constant(const KScalar& c) { return Polynomial(c); }
  static Polynomial variable(int var) {
    if (var < 0 || var >= kNumVars) throw std::out_of_range("variable index");
    Polynomial p;
    Mono m{};
    m[var] = 1;
    p.terms_[m] = KScalar(1);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Mono{});
  }
  KScalar constant_term() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? KScalar(0) : it->second;
  }
  int degree() const {
    return terms_.empty() ? -1 : mono_degree(terms_.rbegin()->first);
  }
  // Adds the 0-based indices of all variables that actually occur.
  void collect_support(std::set<int>& vars) const {
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < kNumVars; ++i)
        if (m[i] != 0) vars.insert(i);
  }
  std::set<int> support() const {
    std::set<int> vars;
    collect_support(vars);
    return vars;
  }

  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial l, const Polynomial& r) {
    return l += r;
  }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) {
    return l -= r;
  }
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    Polynomial out;
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_) {
        Mono m;
        for (int i = 0; i < kNumVars; ++i) {
          int e = ml[i] + mr[i];
          if (e > 255) throw std::overflow_error("monomial exponent overflow");
          m[i] = static_cast<std::uint8_t>(e);
        }
        out.add_term(m, cl * cr);
      }
    return out;
  }
  friend Polynomial operator*(const KScalar& c, const Polynomial& p) {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_[m] = c * pc;
    return out;
  }
  friend bool operator==(const Polynomial& l, const Polynomial& r) {
    return l.terms_ == r.terms_;
  }
  friend bool operator!=(const Polynomial& l, const Polynomial& r) {
    return !(l == r);
  }

  Polynomial derivative(int var) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Mono d = m;
      d[var] -= 1;
      out.add_term(d, KScalar(static_cast<long>(m[var])) * c);
    }
    return out;
  }

  KScalar eval(std::span<const KScalar> pt) const {
    if (pt.size() != kNumVars) throw std::invalid_argument("point dimension");
    KScalar acc(0);
    for (const auto& [m, c] : terms_) {
      KScalar t = c;
      for (int i = 0; i < kNumVars; ++i)
        for (int e = 0; e < m[i]; ++e) t *= pt[i];
      acc += t;
    }
    return acc;
  }

  // Strict total order usable as a map key.
  static int key_compare(const Polynomial& l, const Polynomial& r) {
    auto il = l.terms_.begin(), ir = r.terms_.begin();
    GradedLexLess less;
    for (; il != l.terms_.end() && ir != r.terms_.end(); ++il, ++ir) {
      if (less(il->first, ir->first)) return -1;
      if (less(ir->first, il->first)) return 1;
      int c = KScalar::key_compare(il->second, ir->second);
      if (c != 0) return c;
    }
    if (il != l.terms_.end()) return 1;
    if (ir != r.terms_.end()) return -1;
    return 0;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!first) os << " + ";
      first = false;
      bool has_vars = mono_degree(m) > 0;
      if (!has_vars || c != KScalar(1)) {
        bool paren = !c.is_rational() && has_vars;
        if (paren) os << '(';
        os << c;
        if (paren) os << ')';
        if (has_vars) os << '*';
      }
      bool firstv = true;
      for (int i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        if (!firstv) os << '*';
        firstv = false;
        os << 'x' << (i + 1);
        if (m[i] > 1) os << '^' << int(m[i]);
      }
    }
    return os;
  }

 private:
  void add_term(const Mono& m, const KScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  TermMap terms_;
};

struct PolynomialKeyLess {
  bool operator()(const Polynomial& l, const Polynomial& r) const {
    return Polynomial::key_compare(l, r) < 0;
  }
};

}  // namespace holv
