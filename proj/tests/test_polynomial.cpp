#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <holv/polynomial.hpp>

#include <random>
#include <vector>

using holv::KScalar;
using holv::Polynomial;

namespace {
std::mt19937_64 rng(7);

KScalar rnd_scalar() {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return KScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Polynomial rnd_poly(int max_terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> var(0, holv::kNumVars - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Polynomial p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Polynomial term(rnd_scalar());
    int d = deg(rng);
    for (int i = 0; i < d; ++i) term = term * Polynomial::variable(var(rng));
    p += term;
  }
  return p;
}

std::vector<KScalar> rnd_point() {
  std::vector<KScalar> pt;
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  for (int i = 0; i < holv::kNumVars; ++i)
    pt.emplace_back(mpq_class(num(rng), den(rng)), 0);
  return pt;
}
}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  for (int it = 0; it < 120; ++it) {
    Polynomial p = rnd_poly(), q = rnd_poly(), r = rnd_poly();
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p * Polynomial(KScalar(1)) == p);
    CHECK((p * Polynomial(KScalar(0))).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int it = 0; it < 120; ++it) {
    Polynomial p = rnd_poly(), q = rnd_poly();
    auto pt = rnd_point();
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
  }
}

TEST_CASE("derivative: linearity, Leibniz, commuting partials") {
  std::uniform_int_distribution<int> var(0, holv::kNumVars - 1);
  for (int it = 0; it < 120; ++it) {
    Polynomial p = rnd_poly(), q = rnd_poly();
    int i = var(rng), j = var(rng);
    CHECK((p + q).derivative(i) == p.derivative(i) + q.derivative(i));
    CHECK((p * q).derivative(i) ==
          p.derivative(i) * q + p * q.derivative(i));
    CHECK(p.derivative(i).derivative(j) == p.derivative(j).derivative(i));
  }
  Polynomial x1 = Polynomial::variable(0);
  CHECK((x1 * x1 * x1).derivative(0) == KScalar(3) * (x1 * x1));
  CHECK(x1.derivative(1).is_zero());
}

TEST_CASE("canonical form: zero coefficients never stored") {
  for (int it = 0; it < 100; ++it) {
    Polynomial p = rnd_poly();
    Polynomial z = p - p;
    CHECK(z.terms().empty());
    Polynomial dbl = p + p;
    for (const auto& [m, c] : dbl.terms()) CHECK(!c.is_zero());
  }
}

TEST_CASE("degree and constant term") {
  Polynomial x3 = Polynomial::variable(2);
  Polynomial p = x3 * x3 + Polynomial(KScalar(5));
  CHECK(p.degree() == 2);
  CHECK(p.constant_term() == KScalar(5));
  CHECK(Polynomial().degree() == -1);
  CHECK(p.is_constant() == false);
  CHECK(Polynomial(KScalar(3)).is_constant());
}

TEST_CASE("key order separates distinct polynomials") {
  for (int it = 0; it < 100; ++it) {
    Polynomial p = rnd_poly(), q = rnd_poly();
    int c = Polynomial::key_compare(p, q);
    CHECK(c == -Polynomial::key_compare(q, p));
    CHECK((c == 0) == (p == q));
  }
}
