// The builtin case table: every Type II holonomy case with its adapted
// coframe functions, declared per-slot coordinate dependencies, and the
// exact parameter values the suite runs.
//
// Instantiation policy: parameters stay rational so the kernel is exact.
// Rank and span conclusions are open conditions, so representative interior
// values cover each family, with a second value as a robustness check where
// the family is more than a point:
//   C(a):        a = 1 and a = 2
//   diag(1,mu):  mu = -1 and mu = 1/2 (mu = 0 appears in its own case 4c.1)
//   Z3(alpha):   alpha = 1/2 and alpha = 3/4 (both interior to the
//                admissible band 9*alpha^4 - 12*alpha^2 + 1 <= 0)
//   Z4(s,beta):  (1,1), (1,-1/3), (1/6,1/2) - three exact roots of
//                3*beta^2 - (s+1)*beta - s = 0 with 0 < s <= 1
//   Z5(kappa):   kappa = 1 and kappa = -1

#include <holv/catalog.hpp>

namespace holv {
namespace {

using FnList = std::initializer_list<std::pair<const char*, const char*>>;

// "34567" -> {x3..x7} as 0-based indices.
std::set<int> vars(const char* digits) {
  std::set<int> out;
  for (; *digits; ++digits) out.insert(*digits - '1');
  return out;
}

KScalar Q(long n, long d = 1) { return KScalar::of_fraction(n, d); }

AlgebraDescriptor desc(APart a, NPart n, std::vector<int> idx = {},
                       Twist tw = Twist::none) {
  AlgebraDescriptor d;
  d.a_part = a;
  d.twist = tw;
  d.n_part = n;
  d.n_indices = std::move(idx);
  return d;
}

CaseRecord make(const char* id, AlgebraDescriptor d, int dim, FnList fns,
                FnList deps, std::vector<ParamMap> insts) {
  CaseRecord r;
  r.id = id;
  r.descriptor = std::move(d);
  r.dim = dim;
  for (const auto& [slot, src] : fns) r.functions.emplace(slot, src);
  for (const auto& [slot, digits] : deps)
    r.dependencies.emplace(slot, vars(digits));
  r.instantiations = std::move(insts);
  return r;
}

std::vector<CaseRecord> build_catalog() {
  std::vector<CaseRecord> cat;
  const std::vector<ParamMap> once = {{}};
  const std::vector<ParamMap> a_vals = {{{"a", Q(1)}}, {{"a", Q(2)}}};
  const std::vector<ParamMap> mu_vals = {{{"mu", Q(-1)}}, {{"mu", Q(1, 2)}}};
  const std::vector<ParamMap> alpha_vals = {{{"alpha", Q(1, 2)}},
                                            {{"alpha", Q(3, 4)}}};
  const std::vector<ParamMap> sbeta_vals = {
      {{"beta", Q(1)}, {"s", Q(1)}},
      {{"beta", Q(-1, 3)}, {"s", Q(1)}},
      {{"beta", Q(1, 2)}, {"s", Q(1, 6)}}};
  const std::vector<ParamMap> kappa_vals = {{{"kappa", Q(1)}},
                                            {{"kappa", Q(-1)}}};

  // ---- family 1: full and trace-free gl(2) ------------------------------
  const FnList deps_1 = {{"r4", "34567"},   {"r5", "34567"}, {"r6", "1234567"},
                         {"r7", "1234567"}, {"s4", "34567"}, {"s5", "34567"},
                         {"s7", "1234567"}, {"t7", "34567"}, {"u7", "34567"}};
  cat.push_back(make(
      "1a", desc(APart::gl2, NPart::n), 9,
      {{"r4", "2*sqrt2*x3*x5 + 4*sqrt2*x4^2 - 4*x4*x7"},
       {"r5", "2*x3*(x7 - sqrt2*x4)"},
       {"r6",
        "2*x2*x3 + sqrt2*x1*x4 + 2*x4^2*x7^2 + 2*sqrt2*x3*x5*(sqrt2*(x4^2 - "
        "x3*x5) - x4*x7) + 16/3*x4^3*(x4 - sqrt2*x7)"},
       {"r7",
        "2*x1*x5 + 2*x2*(2*sqrt2*x4 - x7) - sqrt2*x4*x7 + 4*x3*x5^2*(x7 - "
        "2*sqrt2*x4) + 2*sqrt2*x4*x5*(14/3*x4^2 - 4*sqrt2*x4*x7 + x7^2)"},
       {"s4", "1/2*sqrt2 + 2*x4*x5 - sqrt2*x5*x7"},
       {"s7", "2*x2*x5 + 1/2*x3^2 - 8/3*x3*x5^3"},
       {"t7", "-2*(x3*x5 + x4^2) + sqrt2*x4*x7"},
       {"u7", "-2*x4*x5"}},
      deps_1, once));
  cat.push_back(make(
      "1b", desc(APart::sl2, NPart::n), 8,
      {{"r4", "sqrt2*(x5 - 1/2*x5^2)"},
       {"r5", "-3*sqrt2*x4*(x5 - 1)"},
       {"r6",
        "x2*(x5 - 1) + sqrt2*x4*(x4^2*(x3 - 1) + 3/2*(x3^2 - 2*x3 - "
        "x5^2)*(x5 - 1))"},
       {"r7", "6*x4^2*(x3*x5 - x3 - x5 + 1) + x4^4"},
       {"s4", "1/2*sqrt2*(x3^2 - 2*x3 - 3*x5^2)"},
       {"s5", "3*x5*(1 - sqrt2*x4)"},
       {"s7", "x1*(x3 - 1) + sqrt2*x4^3*(x5 - 1)"},
       {"t7", "x5 - 1/2*x5^2"},
       {"u7", "sqrt2*(x3 - 1/2*x3^2)"}},
      deps_1, once));

  // ---- family 2: conformal rotations ------------------------------------
  cat.push_back(make(
      "2a", desc(APart::co2, NPart::n), 7,
      {{"r4", "-x4*(1/2*x6^2 + x7)"},
       {"r6",
        "-(1/2*x6^2 + x7)*x1 + x3*(sqrt2*(1 - x6)*x4 - x5*x6) + 1/2*x3^2*x6 "
        "+ (x6^2*(1/4*x6^2 + x7) - x6 + x7^2)*(1/2*x4^2 - 2*sqrt2*x4*x5 + "
        "2*x5^2)"},
       {"r7",
        "-(1/2*x6^2 + x7)*x1 - (x6^2 + 2*x7)*x2 + (3/2*x6 - 1)*x3^2 + (2 - "
        "3*x6)*x3*x5 + (x6^2*(1/4*x6^2 + x7) - x6 + x7^2)*(1/2*x4^2 - "
        "2*sqrt2*x3*x4) + sqrt2*(1 - x6)*x3*x4 + 3/2*(1 - x6)*x4^2"},
       {"s4", "1/2*sqrt2*(x6^2 + 2*x7)*(x3 - x5)"},
       {"s5", "-1/2*sqrt2*(x6^2 + 2*x7)*x4"},
       {"s7",
        "(1/2*x6^2 + x7)*x1 - 5/2*(x6^2*(1/4*x6^2 + x7) - x6 + x7^2)*x4^2 - "
        "3/2*x4^2*x6"},
       {"t7", "1/2*sqrt2*(x6^2 + 2*x7)*x4"},
       {"u7", "-1/2*sqrt2*(x6^2 + 2*x7)*(x3 - x5)"},
       {"w7", "1"}},
      {{"r4", "34567"},
       {"r5", "34567"},
       {"r6", "1234567"},
       {"r7", "1234567"},
       {"s4", "34567"},
       {"s5", "34567"},
       {"s7", "1234567"},
       {"t7", "34567"},
       {"u7", "34567"},
       {"w7", "67"}},
      once));
  const FnList deps_2b = {{"r4", "34567"},   {"r6", "1234567"},
                          {"r7", "1234567"}, {"s4", "34567"},
                          {"s7", "1234567"}, {"t6", "467"},
                          {"t7", "467"},     {"u6", "34567"},
                          {"u7", "34567"},   {"w7", "67"}};
  cat.push_back(make(
      "2b", desc(APart::co2, NPart::Z0), 5,
      {{"r4", "(x7 - 20/3)*x4*x6"},
       {"r6",
        "2*x1*x6 + 1/2*x3^2 + 3*x3*x5 + 9/2*x5^2 + (x6^2*(x7 - 64/9) + "
        "1/2*x7 - 3)*x4^2"},
       {"r7",
        "(2/3*x6^2 - 1)*x1*x6^2 + 4*x2*x6 + 1/6*x3^2*x6^3 + (2*sqrt2*(1 - "
        "8/3*x6^2)*x4 + x5*x6^3)*x3 + (1/3*(x7 - 64/9)*x6^4 + (13/3 - "
        "1/2*x7)*x6^2 + 1/2*(1 - 8*x7))*x4^2*x6 + 2/3*sqrt2*(5 - "
        "8*x6^2)*x4*x5 + 3/2*x5^2*x6^3"},
       {"s4", "-2*sqrt2*(x3 + 1/3*x5)*x6 - 2*x4*x7"},
       {"s7",
        "-2*x1*x6 - x2*x6^2 + 9/2*x3^2 + (3*x5 + 8/3*sqrt2*x4*x6^3)*x3 + "
        "1/2*x5^2 + 8/9*sqrt2*x4*x5*x6^3"},
       {"t7", "-8/3*sqrt2*x4*x6"},
       {"u6", "4/3*x4*x6"},
       {"u7", "2*sqrt2*x6*(x3 - x5) + 4/9*x4*x6^4"},
       {"w7", "1/3*x6^3"}},
      deps_2b, once));
  cat.push_back(make(
      "2c", desc(APart::C_a, NPart::n), 6,
      {{"r4", "2*sqrt2*(a*(x3 - x5) - sqrt2*x4)*x6"},
       {"r6",
        "sqrt2*a^3*x4*x6^2*(x3 - 3/2*x5) + a^2*x6*(x1 - x6*(1/2*x3^2 + "
        "7*x4^2)) + a*(-x2*x6 + sqrt2*x4*(x3 - 3/2*x5 + x6^2*(2*x3 + "
        "5/2*x5))) + 1/2*(x3^2 + x5^2) - 2*x4^2 + 1/2*x3^2*x6^2 - x3*x5*(1 "
        "+ x6^2) + ((1/2*sqrt2*a*x4 + x3)*x5 + x4^2)*exp(-1/2*(a^2 + "
        "1)*x6^2)"},
       {"r7",
        "(2*a^3*x4^2*x6^2 + a^2*(x2*x6 + sqrt2*x4*x6^2*(4*x3 - 5*x5)) + "
        "2*a*(x1*x6 - x3*x6^2*(3*x3 - 5*x5) + x4^2*(1 - 2*x6^2)) - x2*x6 - "
        "sqrt2*x4*x5*x6^2 + sqrt2*x4*(2*x3 - x5))*exp(1/2*(a^2 + 1)*x6^2) + "
        "2*sqrt2*x4*x5 + 1/2*a*x5^2"},
       {"s4", "sqrt2*x6*(x3 + sqrt2*a*x4)"},
       {"s5", "a*x3*x6"},
       {"s7",
        "1/2*(x3^2 + x5^2) + ((x1 + a*x2)*x6 + ((5*a^2 - 3)*x6^2 + "
        "1)*x4^2)*exp(1/2*(a^2 + 1)*x6^2)"},
       {"t7", "-(a*(x3 - x5) - sqrt2*x4)*x6*exp(1/2*(a^2 + 1)*x6^2)"},
       {"u7", "-sqrt2*x6*(x3 - x5 + sqrt2*a*x4)*exp(1/2*(a^2 + 1)*x6^2)"},
       {"z7", "1/2*(a^2 + 1)*x6^2"}},
      {{"r4", "34567"},
       {"r6", "1234567"},
       {"r7", "1234567"},
       {"s4", "3467"},
       {"s5", "3567"},
       {"s7", "1234567"},
       {"t7", "34567"},
       {"u7", "34567"},
       {"w7", "67"},
       {"z7", "67"}},
      a_vals));
  cat.push_back(make(
      "2d", desc(APart::C_a, NPart::Z0), 4,
      {{"r4", "-sqrt2*a*(x3 + 3*x5)*ainv1"},
       {"r6",
        "-a*(x1*a - x2)*ainv1 + sqrt2*a*x4*(a^2 - 1/3)*(x3 + 3*x5)*ainv2 - "
        "x4^2*(114*a^2 + 10)*1/36*ainv2 - (9*x3^2 + 54*x3*x5 + "
        "81*x5^2)*1/36*ainv1"},
       {"r7",
        "(-(2*x1*a + x2*a^2 - x2) + 3*x4*(sqrt2*((7/9*x5 + x3)*a^2 - 7/9*x3 "
        "- x5) + 1/3*a*x4*(a^2 - 3))*ainv1)*exp(-x6)*ainv1"},
       {"s4", "-1/3*sqrt2*(3*x3 + x5)*ainv1"},
       {"s7",
        "-(x1 + a*x2 + 9/4*x3^2 + 3/2*x3*x5 + 1/4*x5^2 - "
        "5/2*x4^2)*exp(-x6)*ainv1 + (4*sqrt2*a*(x3 + 1/3*x5)*x4 - "
        "14/3*x4^2)*exp(-x6)*ainv2"},
       {"t6", "-4*sqrt2*a*x4*ainv1"},
       {"t7", "-4/3*sqrt2*x4*ainv1*exp(-x6)"},
       {"u6", "(3*sqrt2*a*(x3 - x5) + 2*x4)*1/3*ainv1"},
       {"u7", "(sqrt2*(x3 - x5) + 2*x4*a)*ainv1*exp(-x6)"},
       {"z7", "-x6"}},
      {{"r4", "34567"},
       {"r6", "1234567"},
       {"r7", "1234567"},
       {"s4", "34567"},
       {"s7", "1234567"},
       {"t6", "467"},
       {"t7", "467"},
       {"u6", "34567"},
       {"u7", "34567"},
       {"w7", "67"},
       {"z7", "67"}},
      a_vals));

  // ---- family 3: diagonal 2x2 -------------------------------------------
  cat.push_back(make(
      "3a", desc(APart::d, NPart::n), 7,
      {{"r5", "-2*x3*x7"},
       {"r6",
        "-x1*x7 - 2*x3*x5*x7^2 - 2*x4^2*x7^2 + 1/2*x5^2 + sqrt2*x4*(x3 - "
        "1/2*x3^2*x7)"},
       {"r7", "2*x4^2 - 2*x4*x7*(x3*x4 + 2*sqrt2*x5*x7)"},
       {"s5", "1/2*x3^2 - sqrt2*x4*x7"},
       {"s7", "-x2*x3 - x3^3*x5 - 1/3*sqrt2*x4^3*x7"},
       {"t7", "1/2*x3^2"},
       {"u7", "sqrt2*x5*x7"}},
      {{"r5", "3567"},
       {"r6", "134567"},
       {"r7", "34567"},
       {"s5", "34567"},
       {"s7", "234567"},
       {"t7", "367"},
       {"u7", "567"}},
      once));
  cat.push_back(make(
      "3b", desc(APart::d, NPart::n_indices, {1, 3}), 5,
      {{"r6", "-x1*x7 - sqrt2*x4*(x6*x7^2 + 1)*exp(x6*x7)"},
       {"r7",
        "1/2*x5*(2*x3*(x6*x7*(x7 - 1) - 1) + x3^2*x7*exp(-x6*x7) - 4*x6*(x7 "
        "- 1)*(x6*x7*(x7 - 1) + 3*x7 - 2)*exp(x6*x7))"},
       {"s5",
        "x3*x6*(x7 - 1) + 1/2*x3^2*exp(-x6*x7) + x6*(1 - 2*x6*(x7 - "
        "1)^2)*exp(x6*x7)"},
       {"s7",
        "-x2*(x6*(x7 - 1) + x3*exp(-x6*x7)) - x3^3*x5*exp(-2*x6*x7) + "
        "x5*x6*((2*x6*(x7 - 2)*(x7 - 1)^2 - 5*x7 + 6)*x6*exp(x6*x7) + "
        "x3^2*(5/2 - 3*x7)*exp(-x6*x7))"},
       {"t6", "x7*(exp(x6*x7) - x3)"},
       {"t7", "x3*x6*(x7 - 1) + 1/2*x3^2*exp(-x6*x7)"},
       {"v6", "x5*x7"}},
      {{"r6", "1467"},
       {"r7", "3567"},
       {"s5", "3567"},
       {"s7", "23567"},
       {"t6", "367"},
       {"t7", "367"},
       {"v6", "567"}},
      once));
  cat.push_back(make(
      "3c", desc(APart::d, NPart::n_indices, {2, 3}), 5,
      {{"r5", "-1/2*x3*x7*(2 + x7)"},
       {"r6", "-1/2*x1*x7*(2 + x7) + sqrt2*x3*x4"},
       {"r7", "2*x4^2 - x3*x5*x7*(1 + 1/2*x6*x7^2 + x6*x7)"},
       {"s5", "-1/2*sqrt2*x4*x7*(2 + x7)"},
       {"s7",
        "x2*x6*x7 - 1/2*sqrt2*x4*x5*x6*x7^2*(2 + x7) - sqrt2*x4*x5*x7 + "
        "x5^2*x7^2*(1/4*x7^2 + x7 + 1)"},
       {"t6", "-1/2*x3*x7*(2 + x7)"},
       {"t7", "-x3*x6*x7"},
       {"u7", "1/2*sqrt2*x5*x7*(2 + x7)"},
       {"v7", "x5*x6*x7"}},
      {{"r5", "3567"},
       {"r6", "134567"},
       {"r7", "34567"},
       {"s5", "4567"},
       {"s7", "24567"},
       {"t6", "367"},
       {"t7", "367"},
       {"u7", "567"},
       {"v7", "567"}},
      once));
  cat.push_back(make(
      "3d", desc(APart::d, NPart::n_indices, {1, 2, 3}), 6,
      {{"r5", "1 - x3*x7"},
       {"r6", "-x1*x7 + 1/2*(x3^2*(1 + sqrt2*x4*x7) - exp(-x3))"},
       {"r7",
        "2*x3^2*x5*x7 + 2*x3*(x4^2*x7 + sqrt2*x4 - x5) + sqrt2*x4*exp(-x3)"},
       {"s5", "1/2*x3^2 - sqrt2*x4*x7"},
       {"s7",
        "-x2*x3 + x3*x5*(1 - x3^2 + 2*sqrt2*x4*x7) + x5^2*x7^2 + x4*(x4 + "
        "1/3*sqrt2*x4^2*x7 - sqrt2*x5) + 1/2*(x5 - x4^2)*exp(-x3)"},
       {"t6", "1 - x3*x7"},
       {"t7", "1/2*x3^2"},
       {"u7", "sqrt2*x5*x7"}},
      {{"r5", "3567"},
       {"r6", "134567"},
       {"r7", "34567"},
       {"s5", "34567"},
       {"s7", "234567"},
       {"t6", "367"},
       {"t7", "367"},
       {"u7", "567"}},
      once));
  cat.push_back(make(
      "3e", desc(APart::d, NPart::n_indices, {1, 2, 4}), 6,
      {{"r5", "2*x3*x5"},
       {"r6", "x1*x5"},
       {"r7", "2*x3*x6 + 1/2*x3^2*x5^2"},
       {"s5", "-1/2*x3^2 + sqrt2*x4*x5"},
       {"s7",
        "x2*x3 + sqrt2*x4*x6 + 1/2*sqrt2*x3*x4*x5^2 - x3^3*x5 + 1/4*x5^4"},
       {"t7", "-1/2*x3^2"},
       {"u7", "-1/2*sqrt2*x5^2"}},
      {{"r5", "3567"},
       {"r6", "13567"},
       {"r7", "34567"},
       {"s5", "34567"},
       {"s7", "234567"},
       {"t7", "367"},
       {"u7", "567"}},
      once));

  // ---- family 4a: the diagonal line diag(1,mu) --------------------------
  cat.push_back(make(
      "4a.1", desc(APart::diag_line, NPart::n), 6,
      {{"r6", "sqrt2*x3*x4"},
       {"r7", "x1*x6 + 2*(x3*x5 + x4^2)*exp(-x6*x7)"},
       {"s5", "gamma*x3*x6"},
       {"s7",
        "mu*x2*x6 + sqrt2*x4*x5*exp(-x6*x7) + (2*mu - 1)*gamma*x3*x5*x6^2"},
       {"t7", "gamma*x3*x6"},
       {"w6", "x6*x7"}},
      {{"r6", "34567"},
       {"r7", "134567"},
       {"s5", "3567"},
       {"s7", "234567"},
       {"t7", "367"},
       {"u7", "67"},
       {"v7", "567"},
       {"w6", "67"}},
      mu_vals));
  cat.push_back(make(
      "4a.2", desc(APart::diag_line, NPart::n_indices, {2, 3}), 4,
      {{"r6", "sqrt2*gamma*x3*x4"},
       {"r7", "x1*x6 + gamma*(x3*x5 + 2*x4^2)*exp(-x6*x7)"},
       {"s7", "mu*x2*x6 + sqrt2*gamma*x4*x5*exp(-x6*x7)"},
       {"v7", "-gamma*x5*x6"},
       {"t7", "gamma*x3*x6"},
       {"w6", "x6*x7"}},
      {{"r6", "3467"},
       {"r7", "134567"},
       {"s7", "24567"},
       {"t7", "367"},
       {"u7", "67"},
       {"v7", "567"},
       {"w6", "67"}},
      mu_vals));
  cat.push_back(make(
      "4a.3", desc(APart::diag_line, NPart::n_indices, {1, 2, 3}), 5,
      {{"r6", "sqrt2*gamma*x3*x4"},
       {"r7", "x1*x6 + 2*gamma*(x3*x5 + x4^2)*exp(-x6*x7)"},
       {"s5", "gamma*x3*x6"},
       {"s7",
        "mu*x2*x6 + 1/2*x3^2 + sqrt2*gamma*x4*x5*exp(-x6*x7) + (mu*gamma - "
        "gamma^2)*x3*x5*x6^2"},
       {"t7", "gamma*x3*x6"},
       {"w6", "x6*x7"}},
      {{"r6", "3467"},
       {"r7", "134567"},
       {"s5", "3567"},
       {"s7", "234567"},
       {"t7", "367"},
       {"u7", "67"},
       {"w6", "67"}},
      mu_vals));
  cat.push_back(make(
      "4a.4", desc(APart::diag_line, NPart::n_indices, {1, 2, 4}), 5,
      {{"r6", "1/2*x5^2"},
       {"r7", "x1*x6 + x3^2"},
       {"s5", "gamma*x3*x6"},
       {"s7",
        "mu*x2*x6 + sqrt2*x3*x4 + (mu*gamma - gamma^2)*x3*x5*x6^2"},
       {"t7", "gamma*x3*x6"},
       {"w6", "x6*x7"}},
      {{"r6", "3567"},
       {"r7", "13567"},
       {"s5", "3567"},
       {"s7", "234567"},
       {"t7", "367"},
       {"u7", "67"},
       {"w6", "67"}},
      mu_vals));
  cat.push_back(make(
      "4a.5", desc(APart::diag_line, NPart::n_indices, {1, 3, 4}), 5,
      {{"r6", "sqrt2*x4*x5*exp(x6*x7)"},
       {"r7", "x1*x6 + x5^2"},
       {"s5", "gamma*x3*x6"},
       {"s7", "mu*x2*x6 + 1/2*x3^2 + (mu*gamma - gamma^2)*x3*x5*x6^2"},
       {"t7", "gamma*x3*x6"},
       {"w6", "x6*x7"}},
      {{"r6", "4567"},
       {"r7", "1567"},
       {"s5", "3567"},
       {"s7", "23567"},
       {"t7", "367"},
       {"w6", "67"}},
      mu_vals));
  cat.push_back(make(
      "4a.6", desc(APart::diag_line, NPart::n_indices, {2, 3, 4}), 5,
      {{"r6", "sqrt2*gamma*x3*x4 + 1/2*x5^2"},
       {"r7", "x1*x6 + gamma*(x3*x5 + 2*x4^2)*exp(-x6*x7)"},
       {"s7", "mu*x2*x6 + sqrt2*gamma*x4*x5*exp(-x6*x7)"},
       {"v7", "-gamma*x5*x6"},
       {"t7", "gamma*x3*x6"},
       {"w6", "x6*x7"}},
      {{"r6", "34567"},
       {"r7", "134567"},
       {"s7", "24567"},
       {"t7", "367"},
       {"u7", "67"},
       {"v7", "567"},
       {"w6", "67"}},
      mu_vals));

  // ---- family 4b/4c: twisted lines --------------------------------------
  const FnList deps_4b = {{"r6", "3467"}, {"r7", "134567"}, {"s7", "234567"},
                          {"t7", "367"},  {"u7", "67"},     {"v7", "567"},
                          {"w6", "67"}};
  const FnList deps_4b2 = {{"r6", "34567"}, {"r7", "134567"}, {"s7", "234567"},
                           {"t7", "367"},   {"u7", "67"},     {"v7", "567"},
                           {"w6", "67"}};
  const FnList fns_4b_tail = {
      {"r7", "x1*x6 + (1/2*x3*x5 + x4^2)*exp(-x6*x7)"},
      {"s7", "(1/2*x2 + x3)*x6 + 1/2*sqrt2*x4*x5*exp(-x6*x7)"},
      {"t7", "1/2*x3*x6"},
      {"v7", "-1/2*x5*x6"},
      {"w6", "x6*x7"}};
  {
    CaseRecord r = make("4b.1",
                        desc(APart::zero, NPart::n_indices, {2, 3}, Twist::Y0),
                        4, fns_4b_tail, deps_4b, once);
    r.functions.emplace("r6", "1/2*sqrt2*x3*x4");
    cat.push_back(std::move(r));
  }
  {
    CaseRecord r =
        make("4b.2", desc(APart::zero, NPart::n_indices, {2, 3, 4}, Twist::Y0),
             5, fns_4b_tail, deps_4b2, once);
    r.functions.emplace("r6", "1/2*sqrt2*x3*x4 + 1/2*x5^2");
    cat.push_back(std::move(r));
  }
  cat.push_back(make(
      "4c.1", desc(APart::diag_line, NPart::n_indices, {2, 4}), 4,
      {{"r5", "2*x3*x5 - 1/3*x5*x7^3"},
       {"r6", "x1*x5 - x3*x7"},
       {"r7", "-sqrt2*x4*x7"},
       {"s5", "sqrt2*x4*x5 - x5^3*x7 + x5*x6*x7^2"},
       {"u7", "-1/2*sqrt2*x5^2 + sqrt2*x6*x7"}},
      {{"r5", "3567"},
       {"r6", "13567"},
       {"r7", "4567"},
       {"s5", "4567"},
       {"u7", "567"}},
      {{{"mu", Q(0)}}}));
  cat.push_back(make(
      "4c.2", desc(APart::zero, NPart::n_indices, {1, 4}, Twist::Y1), 4,
      {{"r5", "-x3*x7"},
       {"r6", "-(x1 + x3)*x7 - x3*x5*x7^2"},
       {"r7", "-x3*x5 - sqrt2*x4*x7"},
       {"u7", "sqrt2*x6*x7"},
       {"v6", "x5*x7"}},
      {{"r5", "3567"},
       {"r6", "13567"},
       {"r7", "34567"},
       {"s7", "367"},
       {"u7", "67"},
       {"v6", "567"}},
      once));
  cat.push_back(make(
      "4c.3", desc(APart::zero, NPart::n_indices, {3, 4}, Twist::Y1), 4,
      {{"r5", "x3*x5"},
       {"r6", "x1*x5 + x3*(1 - 1/2*x5^2)*x5 + x4^2"},
       {"r7", "2*sqrt2*x4*x5"},
       {"s7", "1/2*x5^2 + 1/2*x6^2"},
       {"v6", "-1/2*x5^2"}},
      {{"r5", "34567"},
       {"r6", "134567"},
       {"r7", "4567"},
       {"s7", "567"},
       {"t7", "67"},
       {"v6", "56"}},
      once));
  cat.push_back(make(
      "4c.4", desc(APart::zero, NPart::n_indices, {1, 3, 4}, Twist::Y1), 5,
      {{"r5", "x3*x5"},
       {"r6", "x1*x5 + x3*(1 - 1/2*x5^2)*x5 + x4^2"},
       {"r7", "2*sqrt2*x4*x5"},
       {"s7", "1/2*x5^2 + x3*x6"},
       {"v6", "-1/2*x5^2"}},
      {{"r5", "3567"},
       {"r6", "134567"},
       {"r7", "34567"},
       {"s7", "34567"},
       {"u6", "567"},
       {"u7", "567"},
       {"v6", "567"}},
      once));

  // ---- family 5a: no a-part --------------------------------------------
  cat.push_back(make(
      "5a.1", desc(APart::zero, NPart::n), 5,
      {{"r6", "sqrt2*x3*(x4 + x6)"},
       {"r7", "2*(x3*x5 + x4^2 + 2*x4*x6)"},
       {"s7", "sqrt2*x5*(x4 + x6)"},
       {"u6", "sqrt2*x6"}},
      {{"r6", "34567"},
       {"r7", "34567"},
       {"s7", "34567"},
       {"u6", "67"},
       {"u7", "67"}},
      once));
  cat.push_back(make(
      "5a.2", desc(APart::zero, NPart::n_indices, {1, 3}), 3,
      {{"r6", "-sqrt2*x4*x7"},
       {"r7", "-x5*x7"},
       {"s7", "1/2*x3^2"},
       {"t7", "-x6*x7"}},
      {{"r6", "467"}, {"r7", "567"}, {"s7", "367"}, {"t7", "67"}}, once));
  cat.push_back(make(
      "5a.3", desc(APart::zero, NPart::n_indices, {2, 3}), 3,
      {{"r6", "x3*(1/2*x6^2 - x7)"},
       {"r7", "sqrt2*x4*(x6^2 - x7)"},
       {"s7", "1/2*x5*x6^2"},
       {"u7", "sqrt2*x6*x7"}},
      {{"r6", "367"}, {"r7", "3467"}, {"s7", "567"}, {"u7", "67"}}, once));
  // The n-part label of this row and of 5b.4 is n(1,3,4); the classification
  // statement groups them under n(1,2,4).  The holonomy report records the
  // algebra the coframe functions actually realize, which settles the label.
  cat.push_back(make(
      "5a.4", desc(APart::zero, NPart::n_indices, {1, 3, 4}), 4,
      {{"r6", "sqrt2*x4*x5"}, {"r7", "x5^2"}, {"s7", "x3*x6"}},
      {{"r6", "4567"}, {"r7", "567"}, {"s7", "367"}, {"t7", "67"}}, once));
  cat.push_back(make(
      "5a.5", desc(APart::zero, NPart::n_indices, {2, 3, 4}), 4,
      {{"r6", "-x3*x7 + sqrt2*x4*x5"},
       {"r7", "-2*sqrt2*x4*x7"},
       {"s5", "1/2*x7^2 - 2*x5*x6"}},
      {{"r6", "34567"},
       {"r7", "4567"},
       {"s5", "567"},
       {"u6", "67"},
       {"u7", "67"}},
      once));
  cat.push_back(make(
      "5a.6", desc(APart::zero, NPart::Z1), 3,
      {{"r6", "1/2*x5^2"},
       {"r7", "sqrt2*x4*x6 + 2*x5*x7"},
       {"s7", "(x3 + x5)*x6"},
       {"t7", "-2*x6*x7"},
       {"u7", "1/2*sqrt2*x6^2"}},
      {{"r6", "567"},
       {"r7", "4567"},
       {"s7", "3567"},
       {"t7", "67"},
       {"u7", "67"}},
      once));
  cat.push_back(make(
      "5a.7", desc(APart::zero, NPart::Z2), 3,
      {{"r6", "-sqrt2*x4*x6*x7 - (x3 - x5)*x7"},
       {"r7", "-2*sqrt2*x4*x7 - x5*x6*x7"},
       {"s7", "-x5*x7"},
       {"t7", "-1/2*x6^2*x7"}},
      {{"r6", "34567"},
       {"r7", "4567"},
       {"s7", "567"},
       {"t6", "67"},
       {"t7", "67"}},
      once));
  cat.push_back(make(
      "5a.8", desc(APart::zero, NPart::Z3), 3,
      {{"r6", "-1/2*x7^2*(sqrt2*alpha*x4 + x5)"},
       {"r7", "1/2*alpha*(2*x3*x6 - x5*x7^2)"},
       {"s7", "(sqrt2*alpha*x4 + x3)*x6"},
       {"t6", "1/6*alpha*x7^3"},
       {"v7", "-1/2*alpha*x6^2"}},
      {{"r6", "4567"},
       {"r7", "34567"},
       {"s7", "34567"},
       {"t6", "67"},
       {"t7", "67"},
       {"u6", "67"},
       {"v7", "67"}},
      alpha_vals));
  cat.push_back(make(
      "5a.9", desc(APart::zero, NPart::Z4), 3,
      {{"r6", "2*x4*x6*x7"},
       {"r7",
        "-sqrt2*x6*(beta*sinv*x4 + x7*binv*(2*s*x3 - (beta + s*binv)*x5))"},
       {"s7", "-x6*(2*s*binv*x4*x7 + sinv*(beta*x5 - s*x3))"},
       {"t6", "1/2*sqrt2*(beta - 1)*(1 - s*binv^2)*x6*x7^2"},
       {"t7", "1/2*sqrt2*(beta - s*binv)*x6^2*x7"},
       {"u7", "-1/2*sqrt2*beta*sinv*x6^2"}},
      {{"r6", "4567"},
       {"r7", "34567"},
       {"s7", "34567"},
       {"t6", "67"},
       {"t7", "67"},
       {"u6", "67"},
       {"u7", "67"}},
      sbeta_vals));
  cat.push_back(make(
      "5a.10", desc(APart::zero, NPart::Z5), 4,
      {{"r6", "sqrt2*kappa*x4*x6 + 1/2*x5^2"},
       {"r7", "(2*x3 + kappa*x5)*x6 + 1/2*sqrt2*kappa*x4*x6^2"},
       {"s7", "1/2*x6^2*(x3 + kappa*x5) + sqrt2*x4*x6"},
       {"t7", "1/2*kappa*x6^2"},
       {"u6", "-1/2*sqrt2*kappa*x6^2*x7"}},
      {{"r6", "4567"},
       {"r7", "34567"},
       {"s7", "34567"},
       {"t7", "67"},
       {"u6", "67"},
       {"u7", "67"}},
      kappa_vals));

  // ---- family 5b: scalar a-part ----------------------------------------
  cat.push_back(make(
      "5b.1", desc(APart::scalar_I, NPart::n), 6,
      {{"r6", "sqrt2*x4*x5*exp(x6*x7)"},
       {"r7", "x1*x6 + x3^2 + x5^2"},
       {"s7", "x2*x6 + sqrt2*x3*x4"},
       {"w6", "x6*x7"}},
      {{"r6", "134567"},
       {"r7", "134567"},
       {"s7", "234567"},
       {"u6", "67"},
       {"u7", "67"},
       {"w6", "67"}},
      once));
  cat.push_back(make(
      "5b.2", desc(APart::scalar_I, NPart::n_indices, {1, 3}), 4,
      {{"s6", "x1*x6*exp(x6*x7) + sqrt2*x4*x6*x7"},
       {"s7", "x2*x6 + 1/2*x3^2 + x5*x6*x7*exp(-x6*x7)"},
       {"u7", "1/2*sqrt2*x6^2*x7"},
       {"w6", "x6*x7"}},
      {{"s6", "1467"}, {"s7", "234567"}, {"u7", "67"}, {"w6", "67"}}, once));
  cat.push_back(make(
      "5b.3", desc(APart::scalar_I, NPart::n_indices, {2, 3}), 4,
      {{"r6", "x3*exp(x6*x7)"},
       {"r7", "x1*x6 + 2*sqrt2*x4"},
       {"s7", "x2*x6 + x5"},
       {"w6", "x6*x7"}},
      {{"r6", "3467"}, {"r7", "14567"}, {"s7", "2567"}, {"u7", "67"},
       {"w6", "67"}},
      once));
  cat.push_back(make(
      "5b.4", desc(APart::scalar_I, NPart::n_indices, {1, 3, 4}), 5,
      {{"r6", "sqrt2*x4*x5*exp(x6*x7)"},
       {"r7", "x1*x6 + x5^2"},
       {"s7", "x2*x6 + 1/2*x3^2"},
       {"w6", "x6*x7"}},
      {{"r6", "4567"}, {"r7", "1567"}, {"s7", "23567"}, {"t7", "67"},
       {"w6", "67"}},
      once));
  cat.push_back(make(
      "5b.5", desc(APart::scalar_I, NPart::n_indices, {2, 3, 4}), 5,
      {{"r6", "(x3*x5 + x4^2)*exp(x6*x7)"},
       {"r7", "x1*x6 + 2*sqrt2*x4*x5"},
       {"s7", "x2*x6 + 1/2*x5^2"},
       {"w6", "x6*x7"}},
      {{"r6", "34567"}, {"r7", "14567"}, {"s7", "2567"}, {"u6", "67"},
       {"w6", "67"}},
      once));
  cat.push_back(make(
      "5b.6", desc(APart::scalar_I, NPart::Z1), 4,
      {{"r6", "1/2*x5^2"},
       {"r7", "1/2*x1*x6^2 + sqrt2*x4*x6*exp(-1/2*x6^2*x7)"},
       {"s7", "1/2*x2*x6^2 + x6*(x3 + x5)*exp(-1/2*x6^2*x7)"},
       {"u7", "1/2*sqrt2*x6^2"},
       {"w6", "1/2*x6^2*x7"}},
      {{"r6", "567"},
       {"r7", "14567"},
       {"s7", "23567"},
       {"t7", "67"},
       {"u7", "67"},
       {"w6", "67"}},
      once));
  cat.push_back(make(
      "5b.7", desc(APart::scalar_I, NPart::Z2), 4,
      {{"r6", "-x7*(sqrt2*x4*x6 - (x3 - x5)*exp(1/2*x6*x7^2))"},
       {"r7", "x1*x6*x7 + 2*sqrt2*x4*x7 - x5*x6*x7*exp(-1/2*x6*x7^2)"},
       {"s7", "x2*x6*x7 + x5*x7"},
       {"t6", "1/2*x6*x7^2"},
       {"w6", "1/2*x6*x7^2"}},
      {{"r6", "34567"},
       {"r7", "14567"},
       {"s7", "2567"},
       {"t6", "67"},
       {"t7", "67"},
       {"w6", "67"}},
      once));
  cat.push_back(make(
      "5b.8", desc(APart::scalar_I, NPart::Z3), 4,
      {{"r6",
        "(alpha^2*x3 + sqrt2*alpha*x4 + x5)*(x6 - 1/2*x7^2)*exp(1/2*x6^2*x7)"},
       {"r7",
        "1/2*x1*x6^2 + 2*alpha*(x3 + sqrt2*alpha*x4 + x5)*(x6 - 1/2*x7^2)"},
       {"s7",
        "1/2*x2*x6^2 + (x3 + sqrt2*alpha*x4 + alpha^2*x5)*(x6 - 1/2*x7^2)"},
       {"w6", "1/2*x6^2*x7"}},
      {{"r6", "34567"},
       {"r7", "134567"},
       {"s7", "234567"},
       {"t6", "67"},
       {"t7", "67"},
       {"u6", "67"},
       {"v7", "67"},
       {"w6", "67"}},
      alpha_vals));
  cat.push_back(make(
      "5b.9", desc(APart::scalar_I, NPart::Z4), 4,
      {{"r6", "-1/2*(x6^2 - 2*x7)*(beta*x3 - x5)*exp(1/2*x6*x7^2)"},
       {"r7", "x1*x6*x7 - sqrt2*beta*x4*(x6^2 - 2*x7)"},
       {"s7", "x2*x6*x7 + 1/2*(s*x3 - beta*x5)*(x6^2 - 2*x7)"},
       {"w6", "1/2*x6*x7^2"}},
      {{"r6", "34567"},
       {"r7", "134567"},
       {"s7", "234567"},
       {"t6", "67"},
       {"t7", "67"},
       {"u6", "67"},
       {"u7", "67"},
       {"w6", "67"}},
      sbeta_vals));
  cat.push_back(make(
      "5b.10", desc(APart::scalar_I, NPart::Z5), 5,
      {{"r6", "1/2*x5^2 + x3*(kappa*x6 - x6*x7)*exp(1/2*x6*x7^2)"},
       {"r7", "x1*x6*x7 + 2*sqrt2*x4*(kappa*x6 - x6*x7)"},
       {"s7", "x2*x6*x7 + (kappa*x6 - x6*x7)*(kinv*x3 + x5)"},
       {"w6", "1/2*x6*x7^2"}},
      {{"r6", "34567"},
       {"r7", "134567"},
       {"s7", "234567"},
       {"t7", "67"},
       {"u6", "67"},
       {"u7", "67"},
       {"w6", "67"}},
      kappa_vals));

  return cat;
}

}  // namespace

const std::vector<CaseRecord>& builtin_catalog() {
  static const std::vector<CaseRecord> cat = build_catalog();
  return cat;
}

}  // namespace holv
