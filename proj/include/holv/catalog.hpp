#pragma once
// Registry of the Type II holonomy cases.  Each case couples an exact
// algebra descriptor (an a-part acting on a nilpotent z-block, optionally
// replaced by a twisted line) with the adapted-coframe functions that
// realize it, the coordinate dependencies each function is allowed to use,
// and the representative parameter values the suite runs.  A sectioned
// UTF-8 case-file format lets external files supply new cases without code
// changes; loading validates the descriptor constraints, the coframe slot
// template, and - for known ids - the declared dependency sets.

#include <Eigen/Core>

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holv/g2star.hpp"
#include "holv/linalg.hpp"
#include "holv/parser.hpp"

namespace holv {

// ---------------------------------------------------------------------------
// Errors.
// ---------------------------------------------------------------------------

class UnknownCase : public std::runtime_error {
 public:
  explicit UnknownCase(const std::string& id)
      : std::runtime_error("unknown case id '" + id + "'") {}
};

class ConstraintViolation : public std::runtime_error {
 public:
  explicit ConstraintViolation(const std::string& what)
      : std::runtime_error(what) {}
};

class CaseFileError : public std::runtime_error {
 public:
  explicit CaseFileError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Algebra descriptors.
// ---------------------------------------------------------------------------

// The a-part: a subalgebra of gl(2) acting block-diagonally.
enum class APart { gl2, sl2, co2, C_a, d, diag_line, scalar_I, zero };
// An optional single twisted generator h(A0, z0, 0) replacing the a-part.
enum class Twist { none, Y0, Y1 };
// The z-block: all of R^4, a coordinate subspace, or one of the lines/planes
// Z0..Z5 cut out by fixed linear relations.
enum class NPart { n, n_indices, Z0, Z1, Z2, Z3, Z4, Z5 };

using ParamMap = std::map<std::string, KScalar>;

struct AlgebraDescriptor {
  APart a_part = APart::zero;
  Twist twist = Twist::none;
  NPart n_part = NPart::n;
  std::vector<int> n_indices;  // 1-based z-coordinates, only for n_indices
  ParamMap params;             // bound values; empty entries stay symbolic

  bool operator==(const AlgebraDescriptor&) const = default;

  // Parameter names the a-part and n-part require before generators can be
  // built.
  std::vector<std::string> required_params() const {
    std::vector<std::string> names;
    if (a_part == APart::C_a) names.push_back("a");
    if (a_part == APart::diag_line) names.push_back("mu");
    if (n_part == NPart::Z3) names.push_back("alpha");
    if (n_part == NPart::Z4) {
      names.push_back("s");
      names.push_back("beta");
    }
    if (n_part == NPart::Z5) names.push_back("kappa");
    return names;
  }

  std::string str() const;
};

inline AlgebraDescriptor bind_params(AlgebraDescriptor d, const ParamMap& p) {
  d.params = p;
  return d;
}

namespace detail {

inline std::string trimmed(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline const KScalar& require_param(const AlgebraDescriptor& d,
                                    const char* name) {
  auto it = d.params.find(name);
  if (it == d.params.end())
    throw ConstraintViolation(std::string("missing parameter '") + name +
                              "' for descriptor " + "'" + d.str() + "'");
  return it->second;
}

}  // namespace detail

// Checks every structural and parameter constraint of a descriptor:
//   diag(1,mu):  -1 <= mu < 1
//   Z3(alpha):   alpha > 0 and 9*alpha^4 - 12*alpha^2 + 1 <= 0
//   Z4(s,beta):  0 < s <= 1, beta != 0, and 3*beta^2 - (s+1)*beta - s = 0
//   Z5(kappa):   kappa^2 = 1
// Missing required parameters and malformed index lists are violations too.
inline void validate_descriptor(const AlgebraDescriptor& d) {
  if (d.twist != Twist::none && d.a_part != APart::zero)
    throw ConstraintViolation(
        "a twisted line replaces the a-part; use a-part '0' with Y0/Y1");
  if (d.n_part == NPart::n_indices) {
    if (d.n_indices.empty() || d.n_indices.size() > 3)
      throw ConstraintViolation("n(...) takes between 1 and 3 indices");
    int prev = 0;
    for (int i : d.n_indices) {
      if (i < 1 || i > 4 || i <= prev)
        throw ConstraintViolation(
            "n(...) indices must be strictly increasing within 1..4");
      prev = i;
    }
  } else if (!d.n_indices.empty()) {
    throw ConstraintViolation("only n(...) carries an index list");
  }

  const KScalar one(1);
  if (d.a_part == APart::C_a) detail::require_param(d, "a");
  if (d.a_part == APart::diag_line) {
    const KScalar& mu = detail::require_param(d, "mu");
    if (mu < -one || one <= mu)
      throw ConstraintViolation("diag(1,mu) requires -1 <= mu < 1, got mu = " +
                                mu.str());
  }
  if (d.n_part == NPart::Z3) {
    const KScalar& al = detail::require_param(d, "alpha");
    const KScalar q =
        KScalar(9) * al * al * al * al - KScalar(12) * al * al + one;
    if (al.sign() <= 0 || q.sign() > 0)
      throw ConstraintViolation(
          "Z3 requires alpha > 0 with 9*alpha^4 - 12*alpha^2 + 1 <= 0, got "
          "alpha = " +
          al.str());
  }
  if (d.n_part == NPart::Z4) {
    const KScalar& s = detail::require_param(d, "s");
    const KScalar& beta = detail::require_param(d, "beta");
    if (s.sign() <= 0 || one < s)
      throw ConstraintViolation("Z4 requires 0 < s <= 1, got s = " + s.str());
    if (beta.is_zero())
      throw ConstraintViolation("Z4 requires beta != 0");
    const KScalar rel = KScalar(3) * beta * beta - (s + one) * beta - s;
    if (!rel.is_zero())
      throw ConstraintViolation(
          "Z4 requires 3*beta^2 - (s+1)*beta - s = 0; at s = " + s.str() +
          ", beta = " + beta.str() + " the left side is " + rel.str());
  }
  if (d.n_part == NPart::Z5) {
    const KScalar& k = detail::require_param(d, "kappa");
    if (!(k * k == one))
      throw ConstraintViolation("Z5 requires kappa = 1 or kappa = -1, got " +
                                k.str());
  }
}

// ---------------------------------------------------------------------------
// Generators.
// ---------------------------------------------------------------------------

// The z-block basis vectors of the n-part (validated descriptor).
inline std::vector<std::array<KScalar, 4>> npart_z_vectors(
    const AlgebraDescriptor& d) {
  const KScalar zero(0), one(1);
  auto unit = [&](int i) {
    std::array<KScalar, 4> v{zero, zero, zero, zero};
    v[static_cast<std::size_t>(i - 1)] = one;
    return v;
  };
  switch (d.n_part) {
    case NPart::n:
      return {unit(1), unit(2), unit(3), unit(4)};
    case NPart::n_indices: {
      std::vector<std::array<KScalar, 4>> out;
      for (int i : d.n_indices) out.push_back(unit(i));
      return out;
    }
    case NPart::Z0:
      return {{KScalar(3), zero, one, zero}, {zero, one, zero, KScalar(3)}};
    case NPart::Z1:
      return {{one, zero, one, zero}, {zero, zero, zero, one}};
    case NPart::Z2:
      return {{zero, one, zero, -one}, {zero, zero, one, zero}};
    case NPart::Z3: {
      const KScalar& al = detail::require_param(d, "alpha");
      return {{one, al, zero, zero}, {zero, zero, al, one}};
    }
    case NPart::Z4: {
      const KScalar& s = detail::require_param(d, "s");
      const KScalar& beta = detail::require_param(d, "beta");
      return {{s, zero, -beta, zero}, {zero, -beta, zero, one}};
    }
    case NPart::Z5: {
      const KScalar& k = detail::require_param(d, "kappa");
      return {{one, zero, k, zero}, {zero, one, zero, zero},
              {zero, zero, zero, one}};
    }
  }
  throw std::logic_error("npart_z_vectors: unhandled n-part");
}

// The 2x2 a-part basis matrices (validated descriptor).
inline std::vector<KMat> apart_matrices(const AlgebraDescriptor& d) {
  const KScalar zero(0), one(1);
  auto mat = [&](KScalar m11, KScalar m12, KScalar m21, KScalar m22) {
    KMat m(2, 2);
    m << std::move(m11), std::move(m12), std::move(m21), std::move(m22);
    return m;
  };
  switch (d.a_part) {
    case APart::gl2:
      return {mat(one, zero, zero, zero), mat(zero, one, zero, zero),
              mat(zero, zero, one, zero), mat(zero, zero, zero, one)};
    case APart::sl2:
      return {mat(zero, one, zero, zero), mat(zero, zero, one, zero),
              mat(one, zero, zero, -one)};
    case APart::co2:
      return {mat(one, zero, zero, one), mat(zero, -one, one, zero)};
    case APart::C_a: {
      const KScalar& a = detail::require_param(d, "a");
      return {mat(a, -one, one, a)};
    }
    case APart::d:
      return {mat(one, zero, zero, zero), mat(zero, zero, zero, one)};
    case APart::diag_line: {
      const KScalar& mu = detail::require_param(d, "mu");
      return {mat(one, zero, zero, mu)};
    }
    case APart::scalar_I:
      return {mat(one, zero, zero, one)};
    case APart::zero:
      return {};
  }
  throw std::logic_error("apart_matrices: unhandled a-part");
}

// A finite exact generating set: the a-part basis through h(A,0,0), the
// twisted line if present, the n-part basis through h(0,z,0), and the
// central direction h(0,0,1).  Throws ConstraintViolation when the
// descriptor's parameter constraints fail.
inline std::vector<G2Element> generators(const AlgebraDescriptor& d) {
  validate_descriptor(d);
  const KScalar zero(0), one(1);
  std::vector<G2Element> out;
  for (const KMat& A : apart_matrices(d))
    out.push_back(h_of(HParams(A, {zero, zero, zero, zero}, zero)));
  if (d.twist != Twist::none) {
    KMat A(2, 2);
    std::array<KScalar, 4> z{zero, zero, zero, zero};
    if (d.twist == Twist::Y0) {
      A << one, zero, zero, KScalar::of_fraction(1, 2);
      z[0] = one;
    } else {
      A << one, zero, zero, zero;
      z[1] = one;
    }
    out.push_back(h_of(HParams(std::move(A), z, zero)));
  }
  for (const auto& z : npart_z_vectors(d))
    out.push_back(h_of(HParams(KMat::Constant(2, 2, zero), z, zero)));
  out.push_back(h_of(HParams(KMat::Constant(2, 2, zero),
                             {zero, zero, zero, zero}, one)));
  return out;
}

// Rank of the span of a list of algebra elements in the 14 coefficient
// coordinates.
inline int span_rank(const std::vector<G2Element>& els) {
  DenseMatrix<KScalar> rows(static_cast<Eigen::Index>(els.size()), 14);
  for (std::size_t r = 0; r < els.size(); ++r)
    for (int c = 0; c < 14; ++c)
      rows(static_cast<Eigen::Index>(r), c) = els[r].s()[static_cast<std::size_t>(c)];
  return static_cast<int>(exact_rank(rows));
}

// Bound parameters plus the derived inverse/offset quantities the coframe
// function sources use (the expression grammar has no division):
//   C(a):       ainv1 = 1/(a^2+1), ainv2 = ainv1^2
//   diag(1,mu): gamma = 1 - mu
//   Z4(s,beta): binv = 1/beta, sinv = 1/s
//   Z5(kappa):  kinv = 1/kappa
inline ParamMap effective_params(const AlgebraDescriptor& d) {
  ParamMap p = d.params;
  if (d.a_part == APart::C_a && p.count("a")) {
    const KScalar& a = p.at("a");
    const KScalar ainv1 = (a * a + KScalar(1)).inverse();
    p["ainv1"] = ainv1;
    p["ainv2"] = ainv1 * ainv1;
  }
  if (d.a_part == APart::diag_line && p.count("mu"))
    p["gamma"] = KScalar(1) - p.at("mu");
  if (d.n_part == NPart::Z4) {
    if (p.count("beta") && !p.at("beta").is_zero())
      p["binv"] = p.at("beta").inverse();
    if (p.count("s") && !p.at("s").is_zero()) p["sinv"] = p.at("s").inverse();
  }
  if (d.n_part == NPart::Z5 && p.count("kappa") && !p.at("kappa").is_zero())
    p["kinv"] = p.at("kappa").inverse();
  return p;
}

// ---------------------------------------------------------------------------
// Descriptor strings: "<a-part> ⋉ <n-part>" with parameter parentheses,
// e.g. "gl2 ⋉ n", "C(a) ⋉ n", "Y0 ⋉ n(2,3)",
// "R*I ⋉ Z5(kappa)".  Bound parameters print as values ("C(2)").
// ---------------------------------------------------------------------------

namespace detail {

constexpr std::string_view kDescriptorJoin = "⋉";  // the semidirect sign

inline std::string param_or_name(const AlgebraDescriptor& d,
                                 const char* name) {
  auto it = d.params.find(name);
  return it == d.params.end() ? std::string(name) : it->second.str();
}

}  // namespace detail

inline std::string descriptor_to_string(const AlgebraDescriptor& d) {
  std::string a;
  if (d.twist == Twist::Y0) {
    a = "Y0";
  } else if (d.twist == Twist::Y1) {
    a = "Y1";
  } else {
    switch (d.a_part) {
      case APart::gl2: a = "gl2"; break;
      case APart::sl2: a = "sl2"; break;
      case APart::co2: a = "co2"; break;
      case APart::C_a: a = "C(" + detail::param_or_name(d, "a") + ")"; break;
      case APart::d: a = "d"; break;
      case APart::diag_line:
        a = "diag(1," + detail::param_or_name(d, "mu") + ")";
        break;
      case APart::scalar_I: a = "R*I"; break;
      case APart::zero: a = "0"; break;
    }
  }
  std::string n;
  switch (d.n_part) {
    case NPart::n: n = "n"; break;
    case NPart::n_indices: {
      n = "n(";
      for (std::size_t i = 0; i < d.n_indices.size(); ++i) {
        if (i) n += ",";
        n += std::to_string(d.n_indices[i]);
      }
      n += ")";
      break;
    }
    case NPart::Z0: n = "Z0"; break;
    case NPart::Z1: n = "Z1"; break;
    case NPart::Z2: n = "Z2"; break;
    case NPart::Z3: n = "Z3(" + detail::param_or_name(d, "alpha") + ")"; break;
    case NPart::Z4:
      n = "Z4(" + detail::param_or_name(d, "s") + "," +
          detail::param_or_name(d, "beta") + ")";
      break;
    case NPart::Z5: n = "Z5(" + detail::param_or_name(d, "kappa") + ")"; break;
  }
  return a + " " + std::string(detail::kDescriptorJoin) + " " + n;
}

inline std::string AlgebraDescriptor::str() const {
  return descriptor_to_string(*this);
}

namespace detail {

// A parenthesis field is either the expected parameter name (stays
// symbolic) or a constant scalar expression (binds the value).
inline void bind_field(AlgebraDescriptor& d, const std::string& field,
                       const char* name) {
  const std::string t = trimmed(field);
  if (t.empty()) throw CaseFileError("empty parameter field in descriptor");
  bool ident = std::isalpha(static_cast<unsigned char>(t[0])) != 0;
  for (char c : t)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ident = false;
  if (ident && t != "sqrt2") {
    if (t != name)
      throw CaseFileError("descriptor parameter must be named '" +
                          std::string(name) + "', got '" + t + "'");
    return;  // symbolic; value supplied separately
  }
  try {
    const Expr e = parse_expr(t, {});
    if (!e.is_polynomial() || !e.as_polynomial().is_constant())
      throw CaseFileError("descriptor parameter '" + std::string(name) +
                          "' must be a constant, got '" + t + "'");
    d.params[name] = e.as_polynomial().constant_term();
  } catch (const ParseError& pe) {
    throw CaseFileError("descriptor parameter '" + std::string(name) +
                        "': " + pe.what());
  }
}

inline std::vector<std::string> split_fields(const std::string& inner) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : inner) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "token(inner)" -> true with inner extracted; bare "token" -> true with
// empty inner; anything else -> false.
inline bool match_call(const std::string& src, std::string_view head,
                       std::string& inner) {
  if (src == head) {
    inner.clear();
    return true;
  }
  if (src.size() > head.size() + 1 && src.compare(0, head.size(), head) == 0 &&
      src[head.size()] == '(' && src.back() == ')') {
    inner = src.substr(head.size() + 1, src.size() - head.size() - 2);
    return true;
  }
  return false;
}

}  // namespace detail

inline AlgebraDescriptor descriptor_from_string(const std::string& src) {
  const std::string join(detail::kDescriptorJoin);
  const std::size_t cut = src.find(join);
  if (cut == std::string::npos)
    throw CaseFileError("descriptor '" + src +
                        "' is missing the '" + join + "' separator");
  const std::string a_tok = detail::trimmed(src.substr(0, cut));
  const std::string n_tok = detail::trimmed(src.substr(cut + join.size()));

  AlgebraDescriptor d;
  std::string inner;
  if (a_tok == "gl2") {
    d.a_part = APart::gl2;
  } else if (a_tok == "sl2") {
    d.a_part = APart::sl2;
  } else if (a_tok == "co2") {
    d.a_part = APart::co2;
  } else if (a_tok == "d") {
    d.a_part = APart::d;
  } else if (a_tok == "R*I") {
    d.a_part = APart::scalar_I;
  } else if (a_tok == "0") {
    d.a_part = APart::zero;
  } else if (a_tok == "Y0") {
    d.a_part = APart::zero;
    d.twist = Twist::Y0;
  } else if (a_tok == "Y1") {
    d.a_part = APart::zero;
    d.twist = Twist::Y1;
  } else if (detail::match_call(a_tok, "C", inner) && !inner.empty()) {
    d.a_part = APart::C_a;
    detail::bind_field(d, inner, "a");
  } else if (detail::match_call(a_tok, "diag", inner) && !inner.empty()) {
    d.a_part = APart::diag_line;
    const auto fields = detail::split_fields(inner);
    if (fields.size() != 2 || detail::trimmed(fields[0]) != "1")
      throw CaseFileError("diagonal a-part must be written diag(1,mu)");
    detail::bind_field(d, fields[1], "mu");
  } else {
    throw CaseFileError("unknown a-part token '" + a_tok + "'");
  }

  if (n_tok == "n") {
    d.n_part = NPart::n;
  } else if (n_tok == "Z0") {
    d.n_part = NPart::Z0;
  } else if (n_tok == "Z1") {
    d.n_part = NPart::Z1;
  } else if (n_tok == "Z2") {
    d.n_part = NPart::Z2;
  } else if (detail::match_call(n_tok, "n", inner) && !inner.empty()) {
    d.n_part = NPart::n_indices;
    for (const std::string& f : detail::split_fields(inner)) {
      const std::string t = detail::trimmed(f);
      if (t.size() != 1 || t[0] < '1' || t[0] > '4')
        throw CaseFileError("n(...) index must be one of 1..4, got '" + t +
                            "'");
      d.n_indices.push_back(t[0] - '0');
    }
  } else if (detail::match_call(n_tok, "Z3", inner) && !inner.empty()) {
    d.n_part = NPart::Z3;
    detail::bind_field(d, inner, "alpha");
  } else if (detail::match_call(n_tok, "Z4", inner) && !inner.empty()) {
    d.n_part = NPart::Z4;
    const auto fields = detail::split_fields(inner);
    if (fields.size() != 2)
      throw CaseFileError("Z4 takes two parameters: Z4(s,beta)");
    detail::bind_field(d, fields[0], "s");
    detail::bind_field(d, fields[1], "beta");
  } else if (detail::match_call(n_tok, "Z5", inner) && !inner.empty()) {
    d.n_part = NPart::Z5;
    detail::bind_field(d, inner, "kappa");
  } else {
    throw CaseFileError("unknown n-part token '" + n_tok + "'");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Case records and the builtin table.
// ---------------------------------------------------------------------------

struct CaseRecord {
  std::string id;
  AlgebraDescriptor descriptor;  // parameters unbound; see instantiations
  int dim = 0;
  // Coframe function sources by slot; omitted slots are zero.
  std::map<std::string, std::string> functions;
  // Allowed coordinate support per slot (0-based variable indices).  Slots
  // absent from this map must not carry a function.
  std::map<std::string, std::set<int>> dependencies;
  // Representative exact parameter values; a parameter-free case has one
  // empty map.
  std::vector<ParamMap> instantiations;

  bool operator==(const CaseRecord&) const = default;
};

// Every Type II case with its coframe functions and instantiation policy.
const std::vector<CaseRecord>& builtin_catalog();

inline const CaseRecord& find_case(const std::string& id) {
  for (const CaseRecord& c : builtin_catalog())
    if (c.id == id) return c;
  throw UnknownCase(id);
}

inline const CaseRecord* find_case_opt(const std::string& id) {
  for (const CaseRecord& c : builtin_catalog())
    if (c.id == id) return &c;
  return nullptr;
}

inline const std::vector<ParamMap>& parameter_instantiations(
    const CaseRecord& rec) {
  return rec.instantiations;
}
inline const std::vector<ParamMap>& parameter_instantiations(
    const std::string& id) {
  return find_case(id).instantiations;
}

// Parse every coframe function of `rec` at one parameter instantiation.
// Slots absent from the result are zero.
inline std::map<std::string, Expr> parse_case_functions(const CaseRecord& rec,
                                                        const ParamMap& inst) {
  const ParamMap eff = effective_params(bind_params(rec.descriptor, inst));
  std::map<std::string, Expr> out;
  for (const auto& [slot, src] : rec.functions) out.emplace(slot, parse_expr(src, eff));
  return out;
}

// ---------------------------------------------------------------------------
// The coframe slot template.
//
//   b1 = dx1 + r4 dx4 + r5 dx5 + r6 dx6 + r7 dx7
//   b2 = dx2 + s4 dx4 + s5 dx5 + s6 dx6 + s7 dx7
//   b3 = dx3 + t6 dx6 + t7 dx7
//   b4 = dx4 + u6 dx6 + u7 dx7
//   b5 = dx5 + v6 dx6 + v7 dx7
//   b6 = exp(w6) dx6 + w7 dx7
//   b7 = exp(z7) dx7
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& coframe_slots() {
  static const std::vector<std::string> slots = {
      "r4", "r5", "r6", "r7", "s4", "s5", "s6", "s7", "t6",
      "t7", "u6", "u7", "v6", "v7", "w6", "w7", "z7"};
  return slots;
}

// Coframe row (1..7) a template slot belongs to, or 0 for names outside the
// template.
inline int slot_row(const std::string& slot) {
  for (const std::string& s : coframe_slots())
    if (s == slot)
      return static_cast<int>(std::string("rstuvwz").find(slot[0])) + 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Case files: sectioned UTF-8 key-value text.
//
//   [case]
//   id = 3c
//   dim = 5
//   algebra = d <semidirect> n(2,3)
//   param.alpha = 3/4            (one line per bound parameter)
//
//   [coframe]
//   b1.r5 = -1/2*x3*x7*(2 + x7)  (row prefix optional: "r5 = ..." works too)
//
// Lines starting with '#' are comments.  Omitted slots are zero.  Loading
// validates the descriptor constraints, that generators span the declared
// dimension, that every slot sits on its template row, and - when the id is
// a builtin case - that used slots and their variable support stay inside
// the declared dependency sets.
// ---------------------------------------------------------------------------

namespace detail {

inline KScalar parse_constant_value(const std::string& src,
                                    const std::string& what) {
  try {
    const Expr e = parse_expr(src, {});
    if (!e.is_polynomial() || !e.as_polynomial().is_constant())
      throw CaseFileError(what + " must be a constant scalar, got '" + src +
                          "'");
    return e.as_polynomial().constant_term();
  } catch (const ParseError& pe) {
    throw CaseFileError(what + ": " + pe.what());
  }
}

}  // namespace detail

inline CaseRecord parse_case_file(const std::string& content,
                                  const std::string& origin = "case file") {
  enum class Section { none, case_section, coframe };
  Section section = Section::none;

  std::string id, algebra;
  bool have_dim = false;
  int dim = 0;
  ParamMap file_params;
  std::map<std::string, std::string> functions;

  std::istringstream in(content);
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw CaseFileError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = detail::trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line == "[case]")
        section = Section::case_section;
      else if (line == "[coframe]")
        section = Section::coframe;
      else
        fail("unknown section '" + line + "'");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = detail::trimmed(line.substr(0, eq));
    const std::string value = detail::trimmed(line.substr(eq + 1));
    if (section == Section::none) fail("content before any section header");
    if (section == Section::case_section) {
      if (key == "id") {
        if (!id.empty()) fail("duplicate key 'id'");
        id = value;
      } else if (key == "dim") {
        if (have_dim) fail("duplicate key 'dim'");
        try {
          std::size_t used = 0;
          dim = std::stoi(value, &used);
          if (used != value.size() || dim <= 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
          fail("dim must be a positive integer, got '" + value + "'");
        }
        have_dim = true;
      } else if (key == "algebra") {
        if (!algebra.empty()) fail("duplicate key 'algebra'");
        algebra = value;
      } else if (key.rfind("param.", 0) == 0) {
        const std::string name = key.substr(6);
        if (name.empty()) fail("parameter key needs a name: param.<name>");
        if (file_params.count(name)) fail("duplicate parameter '" + name + "'");
        try {
          file_params[name] =
              detail::parse_constant_value(value, "parameter '" + name + "'");
        } catch (const CaseFileError& e) {
          fail(e.what());
        }
      } else {
        fail("unknown [case] key '" + key + "'");
      }
    } else {
      std::string slot = key;
      int declared_row = 0;
      if (key.size() > 2 && key[0] == 'b' &&
          std::isdigit(static_cast<unsigned char>(key[1])) && key[2] == '.') {
        declared_row = key[1] - '0';
        slot = key.substr(3);
      }
      const int row = slot_row(slot);
      if (row == 0)
        fail("slot '" + slot + "' is not in the coframe template");
      if (declared_row != 0 && declared_row != row)
        fail("slot '" + slot + "' belongs on b" + std::to_string(row) +
             ", not b" + std::to_string(declared_row));
      if (functions.count(slot)) fail("duplicate slot '" + slot + "'");
      functions[slot] = value;
    }
  }

  lineno = 0;  // errors below refer to the file as a whole
  if (id.empty()) throw CaseFileError(origin + ": missing [case] key 'id'");
  if (algebra.empty())
    throw CaseFileError(origin + ": missing [case] key 'algebra'");
  if (!have_dim) throw CaseFileError(origin + ": missing [case] key 'dim'");

  CaseRecord rec;
  rec.id = id;
  rec.dim = dim;
  try {
    rec.descriptor = descriptor_from_string(algebra);
  } catch (const CaseFileError& e) {
    throw CaseFileError(origin + ": " + e.what());
  }
  // Values bound inline in the descriptor string and param.* lines must
  // agree; together they form the single instantiation the file defines.
  ParamMap inst = rec.descriptor.params;
  for (const auto& [name, value] : file_params) {
    auto it = inst.find(name);
    if (it != inst.end() && !(it->second == value))
      throw CaseFileError(origin + ": parameter '" + name +
                          "' bound twice with different values");
    inst[name] = value;
  }
  rec.descriptor.params.clear();
  rec.functions = functions;
  rec.instantiations = {inst};

  // Constraint validation + declared dimension.
  const std::vector<G2Element> gens =
      generators(bind_params(rec.descriptor, inst));
  const int rank = span_rank(gens);
  if (rank != rec.dim)
    throw CaseFileError(origin + ": declared dim " + std::to_string(rec.dim) +
                        " but the generators span dimension " +
                        std::to_string(rank));

  // Parse all functions once (surface expression errors at load time) and
  // collect their actual variable support.
  std::map<std::string, std::set<int>> supports;
  const ParamMap eff = effective_params(bind_params(rec.descriptor, inst));
  for (const auto& [slot, src] : rec.functions) {
    try {
      supports[slot] = parse_expr(src, eff).support();
    } catch (const ParseError& pe) {
      throw CaseFileError(origin + ": slot '" + slot + "': " + pe.what());
    }
  }

  if (const CaseRecord* builtin = find_case_opt(rec.id)) {
    for (const auto& [slot, sup] : supports) {
      auto it = builtin->dependencies.find(slot);
      if (it == builtin->dependencies.end())
        throw CaseFileError(origin + ": slot '" + slot +
                            "' is not declared for case " + rec.id);
      for (int v : sup)
        if (!it->second.count(v))
          throw CaseFileError(origin + ": function '" + slot +
                              "' depends on x" + std::to_string(v + 1) +
                              " outside the declared set for case " + rec.id);
    }
    rec.dependencies = builtin->dependencies;
  } else {
    rec.dependencies = supports;
  }
  return rec;
}

inline CaseRecord load_case_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CaseFileError("cannot open case file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_case_file(buf.str(), path);
}

inline std::string format_case_file(const CaseRecord& rec,
                                    std::size_t inst_index = 0) {
  if (!rec.instantiations.empty() && inst_index >= rec.instantiations.size())
    throw CaseFileError("case " + rec.id + " has " +
                        std::to_string(rec.instantiations.size()) +
                        " instantiations; index " +
                        std::to_string(inst_index) + " is out of range");
  std::ostringstream os;
  os << "[case]\n";
  os << "id = " << rec.id << "\n";
  os << "dim = " << rec.dim << "\n";
  os << "algebra = " << descriptor_to_string(rec.descriptor) << "\n";
  if (!rec.instantiations.empty())
    for (const auto& [name, value] : rec.instantiations[inst_index])
      os << "param." << name << " = " << value << "\n";
  os << "\n[coframe]\n";
  for (const std::string& slot : coframe_slots()) {
    auto it = rec.functions.find(slot);
    if (it == rec.functions.end()) continue;
    os << "b" << slot_row(slot) << "." << slot << " = " << it->second << "\n";
  }
  return os.str();
}

inline void export_case_file(const CaseRecord& rec, const std::string& path,
                             std::size_t inst_index = 0) {
  const std::string text = format_case_file(rec, inst_index);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CaseFileError("cannot write case file '" + path + "'");
  out << text;
  if (!out) throw CaseFileError("write failed for case file '" + path + "'");
}

}  // namespace holv
