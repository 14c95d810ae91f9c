#pragma once
// Exterior algebra on seven coordinates with Expr coefficients: wedge
// products, the exterior derivative, and interior products with vector
// fields. A degree-p term is keyed by the set of its coordinate indices
// (a 7-bit mask), which makes antisymmetry structural: only strictly
// increasing index tuples are ever stored.

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holv/expr.hpp"

namespace holv {

// Bit i set <=> dx_{i+1} appears in the basis term (indices 0-based).
using FormIndexSet = std::uint8_t;

inline int mask_degree(FormIndexSet m) { return std::popcount(static_cast<unsigned>(m)); }

// Sign of dx_A ^ dx_B relative to the sorted union; 0 when the sets overlap.
inline int wedge_sign(FormIndexSet a, FormIndexSet b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int bit = 0; bit < 7; ++bit) {
    if (a >> bit & 1)
      inversions += std::popcount(static_cast<unsigned>(b & ((1u << bit) - 1u)));
  }
  return inversions % 2 ? -1 : 1;
}

class Form {
 public:
  explicit Form(int degree) : degree_(degree) {
    if (degree < 0 || degree > 8)
      throw std::invalid_argument("Form: degree out of range");
  }

  static Form scalar(const Expr& f) {
    Form out(0);
    out.add_term(0, f);
    return out;
  }

  // dx_{i+1} for 0-based coordinate index i.
  static Form coordinate_differential(int i) {
    if (i < 0 || i >= kNumVars) throw std::invalid_argument("coordinate_differential: bad index");
    Form out(1);
    out.add_term(static_cast<FormIndexSet>(1u << i), Expr(KScalar(1)));
    return out;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormIndexSet, Expr>& terms() const { return terms_; }

  const Expr& coefficient(FormIndexSet mask) const {
    static const Expr kZero;
    auto it = terms_.find(mask);
    return it == terms_.end() ? kZero : it->second;
  }

  void add_term(FormIndexSet mask, const Expr& coeff) {
    if (mask_degree(mask) != degree_)
      throw std::invalid_argument("Form::add_term: index count does not match degree");
    Expr& slot = terms_[mask];
    slot = slot + coeff;
    if (slot.is_zero()) terms_.erase(mask);
  }

  friend Form operator+(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("Form addition: degree mismatch");
    Form out = a;
    for (const auto& [mask, coeff] : b.terms_) out.add_term(mask, coeff);
    return out;
  }
  friend Form operator-(const Form& a, const Form& b) { return a + (-b); }
  Form operator-() const {
    Form out(degree_);
    for (const auto& [mask, coeff] : terms_) out.terms_.emplace(mask, -coeff);
    return out;
  }
  friend Form operator*(const Expr& f, const Form& a) {
    Form out(a.degree_);
    for (const auto& [mask, coeff] : a.terms_) out.add_term(mask, f * coeff);
    return out;
  }
  friend Form operator*(const KScalar& k, const Form& a) { return Expr(k) * a; }

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && (a - b).is_zero();
  }

  friend Form wedge(const Form& a, const Form& b) {
    Form out(a.degree_ + b.degree_);
    for (const auto& [ma, fa] : a.terms_) {
      for (const auto& [mb, fb] : b.terms_) {
        const int s = wedge_sign(ma, mb);
        if (s == 0) continue;
        Expr c = fa * fb;
        if (s < 0) c = -c;
        out.add_term(static_cast<FormIndexSet>(ma | mb), c);
      }
    }
    return out;
  }

  // Exterior derivative: d(f dx_S) = sum_i (d f/d x_i) dx_i ^ dx_S.
  Form d() const {
    Form out(degree_ + 1);
    for (const auto& [mask, coeff] : terms_) {
      for (int i = 0; i < kNumVars; ++i) {
        const FormIndexSet di = static_cast<FormIndexSet>(1u << i);
        const int s = wedge_sign(di, mask);
        if (s == 0) continue;
        Expr c = coeff.derivative(i);
        if (c.is_zero()) continue;
        if (s < 0) c = -c;
        out.add_term(static_cast<FormIndexSet>(di | mask), c);
      }
    }
    return out;
  }

  // Interior product with the vector field X = sum_i X[i] d/dx_{i+1}.
  Form interior(const std::vector<Expr>& X) const {
    if (static_cast<int>(X.size()) != kNumVars)
      throw std::invalid_argument("Form::interior: expected 7 components");
    if (degree_ == 0) return Form(0);
    Form out(degree_ - 1);
    for (const auto& [mask, coeff] : terms_) {
      int position = 0; // index of the slot within the sorted tuple
      for (int i = 0; i < kNumVars; ++i) {
        if (!(mask >> i & 1)) continue;
        if (!X[static_cast<size_t>(i)].is_zero()) {
          Expr c = X[static_cast<size_t>(i)] * coeff;
          if (position % 2 != 0) c = -c;
          out.add_term(static_cast<FormIndexSet>(mask & ~(1u << i)), c);
        }
        ++position;
      }
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, coeff] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff.str() << ")";
      for (int i = 0; i < kNumVars; ++i)
        if (mask >> i & 1) os << "*dx" << (i + 1);
    }
    return os.str();
  }

 private:
  int degree_;
  std::map<FormIndexSet, Expr> terms_; // only nonzero coefficients stored
};

} // namespace holv
