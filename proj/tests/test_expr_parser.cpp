#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <holv/expr.hpp>
#include <holv/parser.hpp>

#include <random>
#include <vector>

using holv::Expr;
using holv::KScalar;
using holv::Polynomial;
using holv::parse_expr;

namespace {
std::mt19937_64 rng(11);

KScalar rnd_scalar() {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  return KScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Polynomial rnd_poly(int max_terms = 3, int max_deg = 2, bool zero_const = false) {
  std::uniform_int_distribution<int> nterms(zero_const ? 1 : 0, max_terms);
  std::uniform_int_distribution<int> var(0, holv::kNumVars - 1);
  std::uniform_int_distribution<int> deg(zero_const ? 1 : 0, max_deg);
  Polynomial p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Polynomial term(rnd_scalar());
    int d = deg(rng);
    for (int i = 0; i < d; ++i) term = term * Polynomial::variable(var(rng));
    p += term;
  }
  if (zero_const) p -= Polynomial(p.constant_term());
  return p;
}

Expr rnd_expr() {
  Expr e = Expr::from_polynomial(rnd_poly());
  std::uniform_int_distribution<int> nexp(0, 2);
  int n = nexp(rng);
  for (int t = 0; t < n; ++t)
    e += Expr::exponential_term(rnd_poly(), rnd_poly(2, 2, true));
  return e;
}
}  // namespace

TEST_CASE("ring axioms and exponential atom merging") {
  for (int it = 0; it < 120; ++it) {
    Expr a = rnd_expr(), b = rnd_expr(), c = rnd_expr();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
  Polynomial p = Polynomial::variable(5) * Polynomial::variable(6);
  Expr ep = Expr::exponential_term(Polynomial(KScalar(1)), p);
  Expr em = Expr::exponential_term(Polynomial(KScalar(1)), -p);
  CHECK(ep * em == Expr(KScalar(1)));  // e^P e^-P = 1
  CHECK((ep * ep).parts().begin()->first == p + p);  // e^P e^P = e^2P
}

TEST_CASE("derivative: Leibniz, chain rule on atoms, commuting partials") {
  std::uniform_int_distribution<int> var(0, holv::kNumVars - 1);
  for (int it = 0; it < 120; ++it) {
    Expr a = rnd_expr(), b = rnd_expr();
    int i = var(rng), j = var(rng);
    CHECK((a * b).derivative(i) ==
          a.derivative(i) * b + a * b.derivative(i));
    CHECK((a + b).derivative(i) == a.derivative(i) + b.derivative(i));
    CHECK(a.derivative(i).derivative(j) == a.derivative(j).derivative(i));
  }
  // d/dx6 e^{x6 x7} = x7 e^{x6 x7}
  Polynomial p = Polynomial::variable(5) * Polynomial::variable(6);
  Expr ep = Expr::exponential_term(Polynomial(KScalar(1)), p);
  CHECK(ep.derivative(5) ==
        Expr::exponential_term(Polynomial::variable(6), p));
}

TEST_CASE("evaluation demands admissible points") {
  Polynomial p = Polynomial::variable(5) * Polynomial::variable(6);
  Expr e = Expr::exponential_term(Polynomial::variable(0), p) + Expr(KScalar(3));
  std::vector<KScalar> origin(holv::kNumVars, KScalar(0));
  CHECK(e.eval(origin) == KScalar(3));
  std::vector<KScalar> pt(holv::kNumVars, KScalar(0));
  pt[0] = KScalar(2);
  pt[5] = KScalar(1);  // x6=1, x7=0 still kills x6*x7
  CHECK(e.eval(pt) == KScalar(5));
  CHECK(e.admissible_at(pt));
  pt[6] = KScalar(1);  // now x6*x7 = 1: inadmissible
  CHECK(!e.admissible_at(pt));
  CHECK_THROWS_AS(e.eval(pt), std::domain_error);
}

TEST_CASE("unit inverse") {
  Polynomial w = Polynomial::variable(5) * Polynomial::variable(6);
  Expr u = Expr::exponential_term(Polynomial(KScalar(2)), w);
  CHECK(u * u.unit_inverse() == Expr(KScalar(1)));
  Expr notunit = u + Expr(KScalar(1));
  CHECK_THROWS_AS(notunit.unit_inverse(), std::domain_error);
  Expr polycoeff = Expr::exponential_term(Polynomial::variable(0), w);
  CHECK_THROWS_AS(polycoeff.unit_inverse(), std::domain_error);
}

TEST_CASE("exponent polynomials must have zero constant term") {
  CHECK_THROWS_AS(
      Expr::exponential_term(Polynomial(KScalar(1)), Polynomial(KScalar(1))),
      std::domain_error);
}

TEST_CASE("parser: literals, precedence, grouping") {
  CHECK(parse_expr("0").is_zero());
  CHECK(parse_expr("3/4") == Expr(KScalar(mpq_class(3, 4))));
  CHECK(parse_expr("sqrt2^2") == Expr(KScalar(2)));
  CHECK(parse_expr("1/2*sqrt2") ==
        Expr(KScalar(mpq_class(0), mpq_class(1, 2))));
  CHECK(parse_expr("2 + 3*4") == Expr(KScalar(14)));
  CHECK(parse_expr("(2 + 3)*4") == Expr(KScalar(20)));
  CHECK_THROWS_AS(parse_expr("2^3^1"), holv::ParseError);  // no chained ^
  CHECK(parse_expr("-2 + 5") == Expr(KScalar(3)));
  CHECK(parse_expr("2*(-3)") == Expr(KScalar(-6)));
  CHECK(parse_expr("x1 - x1").is_zero());
}

TEST_CASE("parser: variables, parameters, exponentials") {
  Expr x3 = Expr::variable(2);
  CHECK(parse_expr("x3") == x3);
  CHECK(parse_expr("x3^2") == x3 * x3);
  holv::Parser::Params P{{"mu", KScalar(mpq_class(1, 2))}};
  CHECK(parse_expr("mu*x3", P) == KScalar(mpq_class(1, 2)) * x3);
  Polynomial w = Polynomial::variable(5) * Polynomial::variable(6);
  CHECK(parse_expr("exp(x6*x7)") ==
        Expr::exponential_term(Polynomial(KScalar(1)), w));
  CHECK(parse_expr("exp(-x6*x7)") ==
        Expr::exponential_term(Polynomial(KScalar(1)), -w));
  CHECK(parse_expr("x1*exp(x6*x7)*exp(-x6*x7)") == Expr::variable(0));
}

TEST_CASE("parser: rejects malformed input") {
  CHECK_THROWS_AS(parse_expr("x8"), holv::ParseError);
  CHECK_THROWS_AS(parse_expr("q*x1"), holv::ParseError);   // unknown parameter
  CHECK_THROWS_AS(parse_expr("1/0"), holv::ParseError);
  CHECK_THROWS_AS(parse_expr("x1/x2"), holv::ParseError);  // no division
  CHECK_THROWS_AS(parse_expr("(x1"), holv::ParseError);
  CHECK_THROWS_AS(parse_expr("x1 +"), holv::ParseError);
  CHECK_THROWS_AS(parse_expr("exp(exp(x1))"), holv::ParseError);
  CHECK_THROWS_AS(parse_expr("exp(1 + x1)"), std::domain_error);
  CHECK_THROWS_AS(parse_expr("x1^-2"), holv::ParseError);
  CHECK_THROWS_AS(parse_expr("3..5"), holv::ParseError);
}

TEST_CASE("parser matches hand-built expressions on catalog-style input") {
  holv::Parser::Params P{{"kappa", KScalar(-1)}, {"kinv", KScalar(-1)}};
  Expr e = parse_expr("x2*x6*x7 + (kappa*x6 - x6*x7)*(kinv*x3 + x5)", P);
  Expr x2 = Expr::variable(1), x3 = Expr::variable(2), x5 = Expr::variable(4),
       x6 = Expr::variable(5), x7 = Expr::variable(6);
  Expr want = x2 * x6 * x7 +
              (KScalar(-1) * x6 - x6 * x7) * (KScalar(-1) * x3 + x5);
  CHECK(e == want);
}
