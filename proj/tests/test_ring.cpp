#include "doctest.h"

#include "dunkl/domains.hpp"
#include "dunkl/mpoly.hpp"
#include "dunkl/rng.hpp"

using namespace dunkl;

namespace {

const VarList kZZb = make_vars({"z", "zb"});

MPoly<CPoly> zpow(int a, int b, CPoly c = CPoly::constant(Rat(1))) {
  return MPoly<CPoly>::monomial(kZZb, Exp{a, b}, std::move(c));
}

template <class C>
MPoly<C> random_poly(ProbeRng& rng, const VarList& vars, int maxdeg, int nterms,
                     C (*coeff)(ProbeRng&)) {
  MPoly<C> p(vars);
  for (int t = 0; t < nterms; ++t) {
    Exp e(vars->size());
    for (auto& x : e) x = static_cast<int>(rng.uint(static_cast<uint64_t>(maxdeg + 1)));
    p.add_term(e, coeff(rng));
  }
  return p;
}

Rat rat_coeff(ProbeRng& rng) { return rng.rational(); }
CPoly cpoly_coeff(ProbeRng& rng) {
  CPoly c = CPoly::constant(rng.rational());
  c += cpoly_c1() * rng.rational();
  if (rng.uint(2)) c += cpoly_c2() * rng.rational();
  return c;
}
RatFunc ratfunc_coeff(ProbeRng& rng) {
  CPoly num = cpoly_coeff(rng);
  CPoly den = cpoly_c1() + CPoly::constant(Rat(static_cast<long>(rng.uint(5)) + 1));
  return RatFunc(num, den);
}
Cyclo cyclo_coeff(ProbeRng& rng) {
  return Cyclo::zeta_power(5, static_cast<long>(rng.uint(5))) * Cyclo(rng.rational());
}

template <class C>
void check_ring_axioms(C (*coeff)(ProbeRng&), uint64_t seed) {
  ProbeRng rng(seed);
  const VarList vars = make_vars({"x", "y"});
  for (int round = 0; round < 8; ++round) {
    auto p = random_poly<C>(rng, vars, 3, 4, coeff);
    auto q = random_poly<C>(rng, vars, 3, 4, coeff);
    auto r = random_poly<C>(rng, vars, 3, 4, coeff);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
  }
}

}  // namespace

TEST_CASE("poly_arith basics") {
  auto zzb = zpow(1, 1);
  CHECK(zzb * zzb == zpow(2, 2));

  MPoly<CPoly> zero(kZZb);
  auto p = zpow(3, 0, cpoly_c1() - CPoly::constant(Rat(1)));
  CHECK(p + zero == p);

  // Term cancellation: ((c-1)z^3 - c zb^3) + c zb^3 = (c-1)z^3.
  auto rho3 = zpow(3, 0, cpoly_c1() - CPoly::constant(Rat(1))) + zpow(0, 3, -cpoly_c1());
  CHECK(rho3 + zpow(0, 3, cpoly_c1()) == p);
}

TEST_CASE("variable mismatch is an error") {
  auto p = MPoly<Rat>::variable(make_vars({"x"}), 0);
  auto q = MPoly<Rat>::variable(make_vars({"y"}), 0);
  CHECK_THROWS_AS(p + q, DomainMismatch);
}

TEST_CASE("exact_divide") {
  auto z = MPoly<Rat>::variable(kZZb, 0);
  auto zb = MPoly<Rat>::variable(kZZb, 1);
  CHECK(exact_divide(z * z - zb * zb, z - zb) == z + zb);
  CHECK(exact_divide(z * zb, z) == zb);

  // q - s0(q) divisible by the root of s0 (s0: z -> -zb), multiply-back oracle.
  auto q = z.pow(3);
  auto s0q = (-zb).pow(3);
  auto diff = q - s0q;
  auto alpha = z + zb;
  auto quot = exact_divide(diff, alpha);
  CHECK(quot * alpha == diff);

  CHECK_THROWS_AS(exact_divide(z * z + zb, z + zb), InexactDivision);
}

TEST_CASE("substitute and parameter evaluation") {
  // ev_{c=0} on (c-1)z^3 - c zb^3 -> -z^3.
  auto rho3 = zpow(3, 0, cpoly_c1() - CPoly::constant(Rat(1))) + zpow(0, 3, -cpoly_c1());
  auto at0 = eval_params(rho3, Rat(0));
  CHECK(at0 == MPoly<Rat>::monomial(kZZb, Exp{3, 0}, Rat(-1)));

  // ev_{c=1/2} on (2c-1) -> 0.
  CPoly two_c_minus_1 = cpoly_c1() * Rat(2) - CPoly::constant(Rat(1));
  CHECK(two_c_minus_1.eval(Rat(1, 2), Rat(0)).is_zero());

  // x_n -> -(x_1+...+x_{n-1}) kills x_1+...+x_n (translation normalization).
  const VarList xs = make_vars({"x1", "x2", "x3"});
  auto x1 = MPoly<Rat>::variable(xs, 0), x2 = MPoly<Rat>::variable(xs, 1),
       x3 = MPoly<Rat>::variable(xs, 2);
  auto total = x1 + x2 + x3;
  auto image = substitute_named(total, {{"x3", -(x1 + x2)}});
  CHECK(image.is_zero());
}

TEST_CASE("RatFunc singular evaluation is reported") {
  RatFunc f(CPoly::constant(Rat(1)), cpoly_c1() - CPoly::constant(Rat(1, 2)));
  CHECK_THROWS_AS(f.eval(Rat(1, 2)), SingularEvaluation);
  CHECK(f.eval(Rat(1, 3)) == Rat(-6));
}

TEST_CASE("RatFunc normalization: reduced, monic denominator") {
  // (2c^2 - 2c) / (4c - 4) reduces to the polynomial c/2.
  RatFunc f(cpoly_c1() * cpoly_c1() * Rat(2) - cpoly_c1() * Rat(2),
            cpoly_c1() * Rat(4) - CPoly::constant(Rat(4)));
  CHECK(f.is_polynomial());
  CHECK(f.num() == cpoly_c1() * Rat(1, 2));
  RatFunc g(CPoly::constant(Rat(3)), cpoly_c1() * Rat(2) + CPoly::constant(Rat(2)));
  CHECK(g.den().leading_coeff() == Rat(1));
  CHECK(g.den() == cpoly_c1() + CPoly::constant(Rat(1)));
  CHECK(g.num() == CPoly::constant(Rat(3, 2)));
}

TEST_CASE("cyclotomic polynomials") {
  auto phi = [](int m) { return cyclotomic_polynomial(m); };
  CHECK(phi(4) == UniPoly{Rat(1), Rat(0), Rat(1)});        // t^2 + 1
  CHECK(phi(3) == UniPoly{Rat(1), Rat(1), Rat(1)});        // t^2 + t + 1
  CHECK(phi(6) == UniPoly{Rat(1), Rat(-1), Rat(1)});       // t^2 - t + 1
  CHECK(phi(1) == UniPoly{Rat(-1), Rat(1)});
  CHECK(phi(5).size() == 5);
}

TEST_CASE("cyclotomic identities: zeta^m = 1, geometric sum vanishes") {
  for (int m : {3, 4, 5, 6, 8}) {
    Cyclo z = Cyclo::zeta_power(m, 1);
    Cyclo p = Cyclo(1);
    Cyclo sum = Cyclo(0);
    for (int k = 0; k < m; ++k) {
      sum += p;
      p *= z;
    }
    CHECK(p == Cyclo(1));    // zeta^m = 1
    CHECK(sum.is_zero());    // 1 + zeta + ... + zeta^{m-1} = 0
    CHECK((z * z.inv()) == Cyclo(1));
  }
}

TEST_CASE("ring axioms hold for every coefficient domain") {
  check_ring_axioms<Rat>(&rat_coeff, 11);
  check_ring_axioms<CPoly>(&cpoly_coeff, 22);
  check_ring_axioms<RatFunc>(&ratfunc_coeff, 33);
  check_ring_axioms<Cyclo>(&cyclo_coeff, 44);
}

TEST_CASE("ev_c is a ring homomorphism") {
  ProbeRng rng(7);
  const VarList vars = make_vars({"x", "y"});
  for (int round = 0; round < 10; ++round) {
    auto p = random_poly<CPoly>(rng, vars, 3, 4, &cpoly_coeff);
    auto q = random_poly<CPoly>(rng, vars, 3, 4, &cpoly_coeff);
    Rat c1 = rng.rational(), c2 = rng.rational();
    CHECK(eval_params(p * q, c1, c2) == eval_params(p, c1, c2) * eval_params(q, c1, c2));
    CHECK(eval_params(p + q, c1, c2) == eval_params(p, c1, c2) + eval_params(q, c1, c2));
  }
}

TEST_CASE("cpoly gcd and content") {
  CPoly a = (cpoly_c1() - CPoly::constant(Rat(1))) * (cpoly_c1() + CPoly::constant(Rat(2)));
  CPoly b = (cpoly_c1() - CPoly::constant(Rat(1))) * cpoly_c1();
  CHECK(cpoly_gcd(a, b) == cpoly_c1() - CPoly::constant(Rat(1)));

  // Two-parameter gcd, one parameter at a time.
  CPoly f = (cpoly_c1() + cpoly_c2()) * (cpoly_c1() - cpoly_c2());
  CPoly g = (cpoly_c1() + cpoly_c2()) * cpoly_c2();
  CHECK(cpoly_gcd(f, g) == cpoly_c1() + cpoly_c2());

  CPoly h = cpoly_c1() * Rat(4, 3) - CPoly::constant(Rat(2, 3));
  CHECK(content(h) == Rat(2, 3));
  CHECK(primitive_part(h) == cpoly_c1() * Rat(2) - CPoly::constant(Rat(1)));
}

TEST_CASE("rational roots of defect-style polynomials") {
  // (c - 1/2)(c - 1/4)(c^2 + 1) * 6
  CPoly p = (cpoly_c1() * Rat(2) - CPoly::constant(Rat(1))) *
            (cpoly_c1() * Rat(4) - CPoly::constant(Rat(1))) *
            (cpoly_c1() * cpoly_c1() + CPoly::constant(Rat(1))) * Rat(6);
  auto roots = rational_roots(p, 0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rat(1, 4));
  CHECK(roots[1] == Rat(1, 2));

  // Root at zero plus a repeated factor.
  CPoly q = cpoly_c1() * cpoly_c1() * (cpoly_c1() - CPoly::constant(Rat(3)));
  auto r2 = rational_roots(q, 0);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == Rat(0));
  CHECK(r2[1] == Rat(3));
}

TEST_CASE("lambda and binomial polynomials") {
  // lambda_1(c) = c(c-1); binom(c,2) = c(c-1)/2.
  CPoly l1 = lambda_poly(1, cpoly_c1());
  CHECK(l1 == cpoly_c1() * cpoly_c1() - cpoly_c1());
  CHECK(binom_poly(cpoly_c1(), 2) * Rat(2) == l1);
  CHECK(lambda_poly(-1, cpoly_c1()) == CPoly::constant(Rat(1)));
  CHECK(binom_poly(cpoly_c1(), 0) == CPoly::constant(Rat(1)));
}

TEST_CASE("homogeneity and degree sentinel") {
  auto z = MPoly<Rat>::variable(kZZb, 0);
  auto zb = MPoly<Rat>::variable(kZZb, 1);
  CHECK((z * z + z * zb).is_homogeneous());
  CHECK_FALSE((z * z + zb).is_homogeneous());
  MPoly<Rat> zero(kZZb);
  CHECK(!zero.degree().has_value());
  CHECK(zero.degree_or(-1000) == -1000);
  CHECK((z * zb).degree() == 2);
}
