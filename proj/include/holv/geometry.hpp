#pragma once
// Frame-based Cartan calculus over the symbolic expression ring: coframe
// assembly from catalog cases, structure functions, the Levi-Civita
// connection form, curvature with its covariant-derivative layers, exact
// membership and span certification against the case algebras, and the
// metric signature verdict at admissible points.

#include <Eigen/Core>

#include <array>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holv/catalog.hpp"
#include "holv/expr.hpp"
#include "holv/form.hpp"
#include "holv/g2star.hpp"
#include "holv/linalg.hpp"
#include "holv/polynomial.hpp"
#include "holv/rational.hpp"

namespace holv {

// A base point with exact coordinates (x1..x7).
using Point = std::array<KScalar, 7>;

// The 14 coefficient-pattern coordinates with expression entries: an
// algebra-valued function of the base coordinates.
using SFunc = std::array<Expr, 14>;

// Span certification could not be grounded at a point: the function-basis
// span reaches the algebra dimension but no candidate base point realizes
// it.  Reported as a failure, never silently passed.
struct InconclusiveSpan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Coframe: row i of B holds the components of b^i over (dx1..dx7),
// triangular with diagonal units 1, 1, 1, 1, 1, e^{w6}, e^{z7}:
//
//   b1 = dx1 + r4 dx4 + r5 dx5 + r6 dx6 + r7 dx7
//   b2 = dx2 + s4 dx4 + s5 dx5 + s6 dx6 + s7 dx7
//   b3 = dx3 + t6 dx6 + t7 dx7
//   b4 = dx4 + u6 dx6 + u7 dx7
//   b5 = dx5 + v6 dx6 + v7 dx7
//   b6 = e^{w6} dx6 + w7 dx7
//   b7 = e^{z7} dx7
// ---------------------------------------------------------------------------

struct Coframe {
  EMat B;     // 7x7
  EMat Binv;  // exact inverse: B * Binv = I
};

namespace detail {

// The w6 / z7 slots sit inside an exponential, so they must be polynomial
// with no constant term (the unit is then exactly 1 at the origin).
inline Polynomial exponent_polynomial(const Expr& e, const char* slot) {
  if (!e.is_polynomial())
    throw std::domain_error(std::string("coframe: exponent slot ") + slot +
                            " must be a polynomial");
  Polynomial p = e.as_polynomial();
  if (!p.constant_term().is_zero())
    throw std::domain_error(std::string("coframe: exponent slot ") + slot +
                            " must vanish at the origin");
  return p;
}

} // namespace detail

inline Coframe coframe_from_slots(const std::map<std::string, Expr>& slots) {
  auto at = [&](const char* name) -> Expr {
    auto it = slots.find(name);
    return it == slots.end() ? Expr() : it->second;
  };
  const Expr one(KScalar(1));
  const Polynomial unit_coeff(KScalar(1));
  EMat B(7, 7);
  B.setConstant(Expr());
  for (int i = 0; i < 5; ++i) B(i, i) = one;
  B(0, 3) = at("r4"); B(0, 4) = at("r5"); B(0, 5) = at("r6"); B(0, 6) = at("r7");
  B(1, 3) = at("s4"); B(1, 4) = at("s5"); B(1, 5) = at("s6"); B(1, 6) = at("s7");
  B(2, 5) = at("t6"); B(2, 6) = at("t7");
  B(3, 5) = at("u6"); B(3, 6) = at("u7");
  B(4, 5) = at("v6"); B(4, 6) = at("v7");
  B(5, 5) = Expr::exponential_term(unit_coeff, detail::exponent_polynomial(at("w6"), "w6"));
  B(5, 6) = at("w7");
  B(6, 6) = Expr::exponential_term(unit_coeff, detail::exponent_polynomial(at("z7"), "z7"));

  // Back-substitution column by column; the diagonal entries are units whose
  // inverses stay inside the expression class.
  EMat X(7, 7);
  X.setConstant(Expr());
  for (int j = 6; j >= 0; --j) {
    X(j, j) = B(j, j).unit_inverse();
    for (int i = j - 1; i >= 0; --i) {
      Expr acc;
      for (int k = i + 1; k <= j; ++k) acc += B(i, k) * X(k, j);
      if (!acc.is_zero()) X(i, j) = -(B(i, i).unit_inverse() * acc);
    }
  }
  return {std::move(B), std::move(X)};
}

inline Coframe coframe_from_case(const CaseRecord& rec, const ParamMap& inst) {
  return coframe_from_slots(parse_case_functions(rec, inst));
}

inline Coframe coframe_from_case(const CaseRecord& rec, std::size_t inst_index = 0) {
  return coframe_from_case(rec, parameter_instantiations(rec).at(inst_index));
}

// b^i as a 1-form over the coordinate differentials.
inline Form coframe_row_form(const Coframe& F, int i) {
  Form out(1);
  for (int c = 0; c < 7; ++c)
    if (!F.B(i, c).is_zero())
      out.add_term(static_cast<FormIndexSet>(1u << c), F.B(i, c));
  return out;
}

// ---------------------------------------------------------------------------
// Structure functions:  db^i = -1/2 c^i_{jk} b^j ^ b^k.
// ---------------------------------------------------------------------------

struct StructureFunctions {
  std::array<EMat, 7> c;  // c[i](j, k) = c^i_{jk}, antisymmetric in (j, k)
};

inline StructureFunctions structure_functions(const Coframe& F) {
  StructureFunctions out;
  for (int i = 0; i < 7; ++i) {
    // Coordinate-basis coefficients of db^i, pulled back to the frame.
    EMat D(7, 7);
    for (int a = 0; a < 7; ++a)
      for (int c = 0; c < 7; ++c)
        D(a, c) = F.B(i, c).derivative(a) - F.B(i, a).derivative(c);
    out.c[static_cast<size_t>(i)] = -(F.Binv.transpose() * D * F.Binv);
  }
  return out;
}

// d b^i + sum_{j<k} c^i_{jk} b^j ^ b^k; identically zero when the structure
// functions are consistent with the coframe.
inline Form db_residual(const Coframe& F, const StructureFunctions& sf, int i) {
  std::array<Form, 7> b = {Form(1), Form(1), Form(1), Form(1), Form(1), Form(1), Form(1)};
  for (int r = 0; r < 7; ++r) b[static_cast<size_t>(r)] = coframe_row_form(F, r);
  Form out = coframe_row_form(F, i).d();
  for (int j = 0; j < 7; ++j) {
    for (int k = j + 1; k < 7; ++k) {
      const Expr& cijk = sf.c[static_cast<size_t>(i)](j, k);
      if (cijk.is_zero()) continue;
      out = out + cijk * wedge(b[static_cast<size_t>(j)], b[static_cast<size_t>(k)]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Levi-Civita connection form.
// ---------------------------------------------------------------------------

// theta[k](i, j) = Gamma^i_{jk}, the value of theta^i_j on the frame vector
// b_k; the 1-form is theta^i_j = Gamma^i_{jk} b^k.
struct ConnectionForm {
  std::array<EMat, 7> theta;
};

inline ConnectionForm levi_civita(const Coframe& F, const StructureFunctions& sf) {
  const KMat& eta = eta_matrix();
  // Lowered structure functions c_{ljk} = eta_{lm} c^m_{jk}.
  std::array<EMat, 7> low;
  for (int l = 0; l < 7; ++l) {
    EMat m(7, 7);
    m.setConstant(Expr());
    for (int mm = 0; mm < 7; ++mm) {
      if (eta(l, mm).is_zero()) continue;
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k)
          m(j, k) += eta(l, mm) * sf.c[static_cast<size_t>(mm)](j, k);
    }
    low[static_cast<size_t>(l)] = std::move(m);
  }
  // Koszul in the frame: Gamma_{ljk} = 1/2 (c_{lkj} - c_{jkl} - c_{kjl}),
  // then raise the first index with eta.
  const KScalar half = KScalar::of_fraction(1, 2);
  auto gamma_low = [&](int l, int j, int k) {
    return half * (low[static_cast<size_t>(l)](k, j) - low[static_cast<size_t>(j)](k, l) -
                   low[static_cast<size_t>(k)](j, l));
  };
  ConnectionForm out;
  for (int k = 0; k < 7; ++k) {
    EMat th(7, 7);
    th.setConstant(Expr());
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        Expr acc;
        for (int l = 0; l < 7; ++l) {
          if (eta(i, l).is_zero()) continue;
          acc += eta(i, l) * gamma_low(l, j, k);
        }
        th(i, j) = std::move(acc);
      }
    }
    out.theta[static_cast<size_t>(k)] = std::move(th);
  }
  return out;
}

inline ConnectionForm levi_civita(const Coframe& F) {
  return levi_civita(F, structure_functions(F));
}

// d b^i + theta^i_j ^ b^j for one row, assembled over the coordinate basis;
// the first structure equation makes it identically zero.
inline Form first_structure_residual(const Coframe& F, const ConnectionForm& cf, int i) {
  std::array<Form, 7> b = {Form(1), Form(1), Form(1), Form(1), Form(1), Form(1), Form(1)};
  for (int r = 0; r < 7; ++r) b[static_cast<size_t>(r)] = coframe_row_form(F, r);
  Form out = coframe_row_form(F, i).d();
  for (int j = 0; j < 7; ++j) {
    Form theta_ij(1);  // theta^i_j = sum_k Gamma^i_{jk} b^k
    for (int k = 0; k < 7; ++k) {
      const Expr& g = cf.theta[static_cast<size_t>(k)](i, j);
      if (g.is_zero()) continue;
      theta_ij = theta_ij + g * b[static_cast<size_t>(k)];
    }
    out = out + wedge(theta_ij, b[static_cast<size_t>(j)]);
  }
  return out;
}

// Both defining invariants: the first structure equation for every row and
// metric compatibility eta theta_k + theta_k^T eta = 0 in every direction.
inline bool connection_invariants_hold(const Coframe& F, const ConnectionForm& cf) {
  const KMat& eta = eta_matrix();
  for (int k = 0; k < 7; ++k) {
    const EMat& th = cf.theta[static_cast<size_t>(k)];
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        Expr acc;
        for (int l = 0; l < 7; ++l) {
          if (!eta(i, l).is_zero()) acc += eta(i, l) * th(l, j);
          if (!eta(l, j).is_zero()) acc += th(l, i) * eta(l, j);
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  for (int i = 0; i < 7; ++i) {
    const Form resid = first_structure_residual(F, cf, i);
    for (const auto& [mask, coeff] : resid.terms())
      if (!coeff.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Membership of the connection form in a subalgebra span.
// ---------------------------------------------------------------------------

struct ThetaMembership {
  bool ok = true;
  std::vector<std::string> violations;
};

inline ThetaMembership theta_membership(const ConnectionForm& cf,
                                        const std::vector<G2Element>& h) {
  ThetaMembership out;
  // First the coefficient-pattern relations, entry by entry.
  for (int k = 0; k < 7; ++k) {
    const EMat& th = cf.theta[static_cast<size_t>(k)];
    const EMat resid = eq2_residual<Expr>(th);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (!resid(i, j).is_zero())
          out.violations.push_back(
              "theta(b" + std::to_string(k + 1) + ") entry (" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + ") leaves the coefficient pattern: " + resid(i, j).str());
  }
  // Then membership in span(h), tested against its annihilator.
  DenseMatrix<KScalar> rows(static_cast<Eigen::Index>(h.size()), 14);
  for (size_t r = 0; r < h.size(); ++r)
    for (int c = 0; c < 14; ++c)
      rows(static_cast<Eigen::Index>(r), c) = h[r].s()[static_cast<size_t>(c)];
  const DenseMatrix<KScalar> ann = annihilator(rows);
  for (int k = 0; k < 7; ++k) {
    const std::array<Expr, 14> s = eq2_readout<Expr>(cf.theta[static_cast<size_t>(k)]);
    for (Eigen::Index a = 0; a < ann.cols(); ++a) {
      Expr acc;
      for (int c = 0; c < 14; ++c) acc += ann(c, a) * s[static_cast<size_t>(c)];
      if (!acc.is_zero())
        out.violations.push_back("theta(b" + std::to_string(k + 1) + ") violates span relation " +
                                 std::to_string(a + 1) + ": " + acc.str());
    }
  }
  out.ok = out.violations.empty();
  return out;
}

inline ThetaMembership theta_membership(const ConnectionForm& cf,
                                        const AlgebraDescriptor& bound) {
  return theta_membership(cf, generators(bound));
}

// ---------------------------------------------------------------------------
// Curvature and covariant-derivative layers.
// ---------------------------------------------------------------------------

using FramePair = std::pair<int, int>;
// Key of one tensor entry: the derivative directions (outermost first),
// then the frame pair i < j the curvature was evaluated on.
using LayerKey = std::pair<std::vector<int>, FramePair>;
using CurvLayer = std::map<LayerKey, SFunc>;

struct CurvTensor {
  std::vector<CurvLayer> layers;  // layers[m]: the complete order-m table
  int order() const { return static_cast<int>(layers.size()) - 1; }
  const SFunc& base(int i, int j) const {
    return layers.at(0).at(LayerKey{{}, {i, j}});
  }
};

namespace detail {

// Frame vector field b_k = sum_c Binv(c, k) d/dx_c applied to an expression.
inline Expr frame_derivative(const Coframe& F, int k, const Expr& e) {
  Expr out;
  for (int c = 0; c < 7; ++c) {
    const Expr& comp = F.Binv(c, k);
    if (comp.is_zero()) continue;
    out += comp * e.derivative(c);
  }
  return out;
}

inline EMat frame_derivative(const Coframe& F, int k, const EMat& m) {
  EMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = frame_derivative(F, k, m(i, j));
  return out;
}

// Entry of a layer at a possibly non-canonical final pair: antisymmetric in
// the last two indices, zero on the diagonal.
inline SFunc layer_entry(const CurvLayer& layer, const std::vector<int>& ks, int a, int b) {
  if (a == b) return SFunc{};
  const bool flip = a > b;
  const SFunc& s = layer.at(LayerKey{ks, {flip ? b : a, flip ? a : b}});
  if (!flip) return s;
  SFunc neg;
  for (size_t c = 0; c < 14; ++c) neg[c] = -s[c];
  return neg;
}

// Read a matrix into pattern coordinates, insisting that it satisfies every
// repeated-entry relation identically.
inline SFunc read_pattern(const EMat& m, const char* who) {
  SFunc s = eq2_readout<Expr>(m);
  const EMat back = eq2_matrix<Expr>(s);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!(m(i, j) == back(i, j)))
        throw NotInG2(std::string(who) + ": entry (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ") violates the coefficient-pattern relations");
  return s;
}

} // namespace detail

// Curvature matrices R(b_i, b_j) = (d theta + theta ^ theta)(b_i, b_j),
// before any pattern readout; valid for arbitrary metric coframes.
inline std::map<FramePair, EMat> curvature_matrices(const Coframe& F,
                                                    const StructureFunctions& sf,
                                                    const ConnectionForm& cf) {
  std::map<FramePair, EMat> out;
  for (int i = 0; i < 7; ++i) {
    const EMat& ti = cf.theta[static_cast<size_t>(i)];
    for (int j = i + 1; j < 7; ++j) {
      const EMat& tj = cf.theta[static_cast<size_t>(j)];
      EMat R = detail::frame_derivative(F, i, tj) - detail::frame_derivative(F, j, ti) +
               ti * tj - tj * ti;
      for (int m = 0; m < 7; ++m) {
        const Expr& cm = sf.c[static_cast<size_t>(m)](i, j);
        if (cm.is_zero()) continue;
        R -= cm * cf.theta[static_cast<size_t>(m)];
      }
      out.emplace(FramePair{i, j}, std::move(R));
    }
  }
  return out;
}

// First Bianchi identity over all frame triples, at the matrix level so it
// applies to arbitrary metric coframes as well.
inline bool bianchi_identity_holds(const std::map<FramePair, EMat>& R) {
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      for (int k = j + 1; k < 7; ++k) {
        const EMat& rij = R.at({i, j});
        const EMat& rjk = R.at({j, k});
        const EMat& rik = R.at({i, k});
        for (int a = 0; a < 7; ++a) {
          // R_ij b_k + R_jk b_i + R_ki b_j with R_ki = -R_ik.
          const Expr acc = rij(a, k) + rjk(a, i) - rik(a, j);
          if (!acc.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

inline CurvTensor curvature(const Coframe& F, const StructureFunctions& sf,
                            const ConnectionForm& cf) {
  CurvTensor out;
  CurvLayer base;
  for (auto& [pr, M] : curvature_matrices(F, sf, cf)) {
    const std::string who = "curvature R(b" + std::to_string(pr.first + 1) + ",b" +
                            std::to_string(pr.second + 1) + ")";
    base.emplace(LayerKey{{}, pr}, detail::read_pattern(M, who.c_str()));
  }
  out.layers.push_back(std::move(base));
  return out;
}

inline CurvTensor curvature(const Coframe& F) {
  const StructureFunctions sf = structure_functions(F);
  return curvature(F, sf, levi_civita(F, sf));
}

// One derivative layer of the top layer of T in the frame direction k:
//   (nabla_k T)_I = b_k(T_I) + [theta_k, T_I] - sum_p Gamma^a_{I_p k} T_{I_p -> a}
// with the correction sum running over every index position of I.
inline CurvLayer covariant_derivative(const CurvTensor& T, const Coframe& F,
                                      const ConnectionForm& cf, int k) {
  const CurvLayer& top = T.layers.back();
  const EMat& th = cf.theta[static_cast<size_t>(k)];
  CurvLayer out;
  for (const auto& [key, s] : top) {
    const auto& [ks, pr] = key;
    SFunc ns;
    for (size_t c = 0; c < 14; ++c) ns[c] = detail::frame_derivative(F, k, s[c]);
    // Commutator part, validated back into pattern coordinates.
    const EMat M = eq2_matrix<Expr>(s);
    const EMat C = th * M - M * th;
    const SFunc cs = detail::read_pattern(C, "covariant derivative commutator");
    for (size_t c = 0; c < 14; ++c) ns[c] += cs[c];
    // Corrections at the derivative positions (full table in those slots).
    for (size_t t = 0; t < ks.size(); ++t) {
      for (int a = 0; a < 7; ++a) {
        const Expr& g = th(a, ks[t]);
        if (g.is_zero()) continue;
        std::vector<int> mod = ks;
        mod[t] = a;
        const SFunc& sib = top.at(LayerKey{std::move(mod), pr});
        for (size_t c = 0; c < 14; ++c) ns[c] -= g * sib[c];
      }
    }
    // Corrections at the two final positions, with antisymmetry.
    for (int pos = 0; pos < 2; ++pos) {
      const int ip = pos == 0 ? pr.first : pr.second;
      for (int a = 0; a < 7; ++a) {
        const Expr& g = th(a, ip);
        if (g.is_zero()) continue;
        const SFunc sib = pos == 0 ? detail::layer_entry(top, ks, a, pr.second)
                                   : detail::layer_entry(top, ks, pr.first, a);
        for (size_t c = 0; c < 14; ++c) ns[c] -= g * sib[c];
      }
    }
    std::vector<int> nk;
    nk.reserve(ks.size() + 1);
    nk.push_back(k);
    nk.insert(nk.end(), ks.begin(), ks.end());
    out.emplace(LayerKey{std::move(nk), pr}, std::move(ns));
  }
  return out;
}

// Extend T by one complete derivative layer (all seven frame directions).
inline void add_derivative_layer(CurvTensor& T, const Coframe& F, const ConnectionForm& cf) {
  CurvLayer next;
  for (int k = 0; k < 7; ++k) next.merge(covariant_derivative(T, F, cf, k));
  T.layers.push_back(std::move(next));
}

// ---------------------------------------------------------------------------
// Candidate base points and admissibility.
// ---------------------------------------------------------------------------

// Deterministic candidates with coordinates in {0, +-1, +-2, 1/2}, ordered to
// prefer the x6 = 0 hyperplane; the origin comes first and is admissible for
// every coframe built here, because exponent polynomials carry no constant
// term.
inline const std::vector<Point>& candidate_base_points() {
  static const std::vector<Point> pts = [] {
    std::vector<Point> out;
    Point origin;
    origin.fill(KScalar(0));
    out.push_back(origin);
    const std::array<KScalar, 5> vals = {KScalar(1), KScalar(-1), KScalar(2), KScalar(-2),
                                         KScalar::of_fraction(1, 2)};
    for (const KScalar& v : vals) {
      for (int c : {0, 1, 2, 3, 4, 6}) {
        Point p = origin;
        p[static_cast<size_t>(c)] = v;
        out.push_back(p);
      }
    }
    const FramePair pairs[] = {{0, 1}, {0, 3}, {1, 3}, {3, 4}, {0, 4},
                               {1, 4}, {0, 6}, {3, 6}, {4, 6}, {1, 6}};
    for (const auto& [c, d] : pairs) {
      for (int sign : {1, -1}) {
        Point p = origin;
        p[static_cast<size_t>(c)] = KScalar(1);
        p[static_cast<size_t>(d)] = KScalar(sign);
        out.push_back(p);
      }
    }
    for (const KScalar& v : vals) {
      Point p = origin;
      p[5] = v;
      out.push_back(p);
    }
    return out;
  }();
  return pts;
}

namespace detail {

using ExponentSet = std::set<Polynomial, PolynomialKeyLess>;

inline void collect_exponents(const Expr& e, ExponentSet& atoms) {
  for (const auto& [p, c] : e.parts())
    if (!p.is_zero()) atoms.insert(p);
}

inline bool admissible(const Point& pt, const ExponentSet& atoms) {
  for (const Polynomial& p : atoms)
    if (!p.eval(pt).is_zero()) return false;
  return true;
}

// Span of the per-atom coefficient vectors inside the 14-dimensional
// coordinate space: distinct atoms are independent functions, so the value
// at any admissible point is a combination of these vectors.  The result is
// an upper bound for the span dimension at every point.
inline Eigen::Index function_rank(const std::vector<SFunc>& els) {
  std::vector<Expr> flat;
  flat.reserve(els.size() * 14);
  for (const SFunc& s : els)
    for (const Expr& e : s) flat.push_back(e);
  const FunctionBasisDecomposition d = function_basis_decompose(flat);
  SpanBuilder sb(14);
  for (size_t r = 0; r < els.size(); ++r) {
    for (Eigen::Index a = 0; a < d.coeffs.cols(); ++a) {
      DenseVector<KScalar> v(14);
      bool nonzero = false;
      for (Eigen::Index c = 0; c < 14; ++c) {
        v(c) = d.coeffs(static_cast<Eigen::Index>(r) * 14 + c, a);
        nonzero = nonzero || !v(c).is_zero();
      }
      if (nonzero) sb.add(std::move(v));
    }
  }
  return sb.dim();
}

inline Eigen::Index point_rank(const std::vector<SFunc>& els, const Point& pt) {
  SpanBuilder sb(14);
  for (const SFunc& s : els) {
    DenseVector<KScalar> v(14);
    for (int c = 0; c < 14; ++c) v(c) = s[static_cast<size_t>(c)].eval(pt);
    sb.add(std::move(v));
  }
  return sb.dim();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Holonomy span certification.
// ---------------------------------------------------------------------------

struct HolonomyReport {
  std::string case_id;
  ParamMap params;
  int dim_h = 0;
  bool theta_in_h = false;
  std::vector<std::string> theta_violations;
  bool span_in_h = false;  // every computed layer lies in span(h) identically
  int span_dim_function_basis = 0;
  int span_dim_at_point = 0;
  Point base_point{};
  int order_reached = 0;
  bool equals_h = false;
  double seconds = 0.0;
};

inline HolonomyReport holonomy_span(const CaseRecord& rec, const ParamMap& inst,
                                    int max_order = 4) {
  if (max_order < 0) throw std::invalid_argument("holonomy_span: max_order must be nonnegative");
  const auto t0 = std::chrono::steady_clock::now();
  HolonomyReport rep;
  rep.case_id = rec.id;
  rep.params = inst;
  rep.base_point.fill(KScalar(0));

  const std::vector<G2Element> gens = generators(bind_params(rec.descriptor, inst));
  rep.dim_h = span_rank(gens);
  DenseMatrix<KScalar> gen_rows(static_cast<Eigen::Index>(gens.size()), 14);
  for (size_t r = 0; r < gens.size(); ++r)
    for (int c = 0; c < 14; ++c)
      gen_rows(static_cast<Eigen::Index>(r), c) = gens[r].s()[static_cast<size_t>(c)];
  const DenseMatrix<KScalar> ann = annihilator(gen_rows);

  const Coframe F = coframe_from_case(rec, inst);
  const StructureFunctions sf = structure_functions(F);
  const ConnectionForm cf = levi_civita(F, sf);
  ThetaMembership tm = theta_membership(cf, gens);
  rep.theta_in_h = tm.ok;
  rep.theta_violations = std::move(tm.violations);

  CurvTensor T = curvature(F, sf, cf);

  std::vector<SFunc> elements;
  detail::ExponentSet atoms;
  rep.span_in_h = true;
  auto absorb = [&](const CurvLayer& layer) {
    for (const auto& [key, s] : layer) {
      for (Eigen::Index a = 0; a < ann.cols(); ++a) {
        Expr acc;
        for (int c = 0; c < 14; ++c) acc += ann(c, a) * s[static_cast<size_t>(c)];
        if (!acc.is_zero()) rep.span_in_h = false;
      }
      for (const Expr& e : s) detail::collect_exponents(e, atoms);
      elements.push_back(s);
    }
  };
  absorb(T.layers[0]);

  // The first admissible candidate (the origin) is the primary base point;
  // layers are added until its span stops growing or reaches dim h, so the
  // recorded derivative order is tied to the preferred point.  Other
  // candidates serve as fallbacks at the final order only.
  auto primary_point = [&]() -> const Point& {
    for (const Point& cand : candidate_base_points())
      if (detail::admissible(cand, atoms)) return cand;
    return candidate_base_points().front();
  };
  auto rescan = [&]() {
    rep.span_dim_function_basis = static_cast<int>(detail::function_rank(elements));
    rep.base_point = primary_point();
    rep.span_dim_at_point = static_cast<int>(detail::point_rank(elements, rep.base_point));
  };
  rescan();
  while (rep.span_dim_at_point < rep.dim_h && T.order() < max_order) {
    const int prev_f = rep.span_dim_function_basis;
    const int prev_p = rep.span_dim_at_point;
    add_derivative_layer(T, F, cf);
    absorb(T.layers.back());
    rescan();
    if (rep.span_dim_function_basis == prev_f && rep.span_dim_at_point == prev_p) break;
  }
  rep.order_reached = T.order();
  if (rep.span_dim_at_point < rep.dim_h) {
    for (const Point& cand : candidate_base_points()) {
      if (!detail::admissible(cand, atoms)) continue;
      const int r = static_cast<int>(detail::point_rank(elements, cand));
      if (r > rep.span_dim_at_point) {
        rep.span_dim_at_point = r;
        rep.base_point = cand;
      }
      if (rep.span_dim_at_point >= rep.dim_h) break;
    }
  }
  rep.equals_h = rep.theta_in_h && rep.span_in_h && rep.span_dim_at_point == rep.dim_h;
  rep.seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - t0)
          .count();
  if (rep.span_dim_function_basis == rep.dim_h && rep.span_dim_at_point < rep.dim_h)
    throw InconclusiveSpan(
        "case " + rec.id + ": the function-basis span reaches " +
        std::to_string(rep.span_dim_function_basis) + " but the best point span is " +
        std::to_string(rep.span_dim_at_point) + " over every candidate base point");
  return rep;
}

inline HolonomyReport holonomy_span(const CaseRecord& rec, std::size_t inst_index = 0,
                                    int max_order = 4) {
  return holonomy_span(rec, parameter_instantiations(rec).at(inst_index), max_order);
}

// ---------------------------------------------------------------------------
// Metric matrix and signature verdict.
// ---------------------------------------------------------------------------

inline EMat metric_matrix(const Coframe& F) {
  const KMat& eta = eta_matrix();
  EMat G(7, 7);
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      Expr acc;
      for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
          if (eta(i, j).is_zero()) continue;
          acc += eta(i, j) * (F.B(i, a) * F.B(j, b));
        }
      }
      G(a, b) = std::move(acc);
    }
  }
  return G;
}

struct MetricVerdict {
  EMat G;                        // 7x7 symmetric
  std::vector<Point> points;     // admissible sample points tested
  std::vector<Inertia> inertias; // exact inertia at each point
  bool signature_matches = false; // every inertia equals the flat one (3 positive, 4 negative)
};

inline MetricVerdict metric_matrix(const CaseRecord& rec, const ParamMap& inst,
                                   int sample_points = 3) {
  MetricVerdict out;
  out.G = metric_matrix(coframe_from_case(rec, inst));
  detail::ExponentSet atoms;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) detail::collect_exponents(out.G(a, b), atoms);
  const Inertia expected = signature_of(eta_matrix());
  out.signature_matches = true;
  for (const Point& cand : candidate_base_points()) {
    if (static_cast<int>(out.points.size()) >= sample_points) break;
    if (!detail::admissible(cand, atoms)) continue;
    DenseMatrix<KScalar> Gp(7, 7);
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) Gp(a, b) = out.G(a, b).eval(cand);
    const Inertia in = signature_of(Gp);
    out.points.push_back(cand);
    out.inertias.push_back(in);
    if (!(in == expected)) out.signature_matches = false;
  }
  if (out.points.empty()) out.signature_matches = false;
  return out;
}

inline MetricVerdict metric_matrix(const CaseRecord& rec, std::size_t inst_index = 0,
                                   int sample_points = 3) {
  return metric_matrix(rec, parameter_instantiations(rec).at(inst_index), sample_points);
}

} // namespace holv
