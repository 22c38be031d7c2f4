#include <itres/ggl.hpp>
#include <itres/series.hpp>
#include <itres/thom.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace itres;
using namespace itres::testing;

namespace {

Polynomial delta_poly(std::initializer_list<Rational> c) {
  RingPtr dr = make_ring({{"delta", 0, std::nullopt}});
  Polynomial p(dr);
  int i = 0;
  for (const auto& x : c) p.add_term(make_exponents({i++}), x);
  return p;
}

}  // namespace

TEST(Rho, SmallValues) {
  EXPECT_EQ(default_delta(2), Rational(1, 24));
  EXPECT_EQ(rho_coefficient(make_exponents({0, 0}), 2, builtin_q(2)).value, 12);
  EXPECT_EQ(rho0_generating(2, builtin_q(2)), 12);
  RhoValue flagged = rho_coefficient(make_exponents({-3, -2}), 2, builtin_q(2));
  EXPECT_TRUE(flagged.degree_flagged);
  EXPECT_EQ(flagged.value, 0);
  EXPECT_FALSE(rho_coefficient(make_exponents({-1, -1}), 2, builtin_q(2)).degree_flagged);
}

TEST(Rho, UnitVectorSumEqualsRho0) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<Exponents> targets;
    for (int s = 0; s < n; ++s) {
      Exponents e(static_cast<std::size_t>(n), 0);
      e[s] = -1;
      targets.push_back(e);
    }
    targets.push_back(Exponents(static_cast<std::size_t>(n), 0));
    auto rho = rho_coefficients(targets, n, builtin_q(n));
    Integer sum = 0;
    for (int s = 0; s < n; ++s) sum += rho.at(targets[s]);
    EXPECT_EQ(sum, rho.at(targets.back())) << n;
    EXPECT_GT(rho.at(targets.back()), 0);
  }
}

TEST(Rho, TwoRoutes) {
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(rho0_generating(n, builtin_q(n)),
              rho_coefficient(Exponents(static_cast<std::size_t>(n), 0), n, builtin_q(n)).value)
        << n;
}

TEST(BCoefficient, Examples) {
  EXPECT_EQ(b_coefficient(make_exponents({0, 0}), 2), 1);
  EXPECT_EQ(b_coefficient(make_exponents({1, 0}), 2), -4);
  EXPECT_EQ(b_coefficient(make_exponents({1, 1}), 2), 16);
  EXPECT_TRUE(b_bound_holds(make_exponents({1, 1}), 2));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) EXPECT_TRUE(b_bound_holds(make_exponents({a, b, 1}), 3));
}

TEST(DegreePolynomial, NTwoAgainstBruteForce) {
  SymbolicDegreePolynomial sym = intersection_polynomial(2, builtin_q(2));
  auto oracle = brute_force_ggl_polynomial(2);
  ASSERT_TRUE(oracle);
  const SymbolicDegreePolynomial& brute = *oracle;
  ASSERT_EQ(sym.p.size(), brute.p.size());
  for (std::size_t l = 0; l < sym.p.size(); ++l) EXPECT_EQ(sym.p[l], brute.p[l]) << l;
  // independently expanded by hand-checked computer algebra
  EXPECT_EQ(sym.p[3], delta_poly({12, -144}));
  EXPECT_EQ(sym.p[2], delta_poly({-204, 288}));
  EXPECT_EQ(sym.p[1], delta_poly({-690, 1152}));
  EXPECT_TRUE(sym.p[0].is_zero());
  EXPECT_TRUE(sym.affine_in_delta());
  DegreePolynomial p = degree_polynomial(2, default_delta(2), builtin_q(2));
  EXPECT_EQ(p.to_string(), "6d^3 - 192d^2 - 642d");
  EXPECT_EQ(p.p[3], Rational(6));
}

TEST(DegreePolynomial, NThreeAgainstBruteForce) {
  SymbolicDegreePolynomial sym = intersection_polynomial(3, builtin_q(3));
  auto brute = brute_force_ggl_polynomial(3);
  ASSERT_TRUE(brute);
  for (std::size_t l = 0; l < sym.p.size(); ++l) EXPECT_EQ(sym.p[l], brute->p[l]) << l;
}

TEST(DegreePolynomial, LeadingIdentity) {
  for (int n = 2; n <= 3; ++n) {
    Polynomial q = builtin_q(n);
    Integer rho0 = rho_coefficient(Exponents(static_cast<std::size_t>(n), 0), n, q).value;
    DegreePolynomial p = degree_polynomial(n, default_delta(n), q);
    EXPECT_EQ(p.degree(), n + 1);
    EXPECT_EQ(p.p.back(), Rational(rho0) / 2);
    EXPECT_EQ(degree_polynomial(n, 0, q).p.back(), Rational(rho0));
    EXPECT_EQ(p(0), 0);
  }
}

TEST(IntersectionNumber, NumericRouteMatchesPolynomial) {
  DegreePolynomial p = degree_polynomial(2, default_delta(2), builtin_q(2));
  for (int d : {1, 5, 36, 100})
    EXPECT_EQ(intersection_number(2, default_delta(2), d, builtin_q(2)), p(d)) << d;
  Rational delta(1, 7);
  DegreePolynomial p3 = intersection_polynomial(3, builtin_q(3)).at(delta);
  EXPECT_EQ(intersection_number(3, delta, 11, builtin_q(3)), p3(11));
}

TEST(Fujiwara, Examples) {
  FujiwaraResult a = fujiwara_certify(DegreePolynomial{{-1, 1}});
  EXPECT_EQ(a.D, 1);
  EXPECT_EQ(a.d_star, 2);
  FujiwaraResult b = fujiwara_certify(DegreePolynomial{{0, -3, 1}});
  EXPECT_EQ(b.D, 3);
  EXPECT_EQ(b.d_star, 4);
  EXPECT_THROW(fujiwara_certify(DegreePolynomial{{1, -1}}), std::invalid_argument);
  // the certified threshold really is the last sign change
  DegreePolynomial p = degree_polynomial(2, default_delta(2), builtin_q(2));
  FujiwaraResult c = fujiwara_certify(p, 5);
  EXPECT_LE(p(Rational(c.d_star - 1)), 0);
  for (Integer d = c.d_star; d <= 2 * c.D + 5; ++d) EXPECT_GT(p(Rational(d)), 0);
}

TEST(Certificate, NTwo) {
  GGLCertificate c = ggl_certify(2, default_delta(2), builtin_q(2));
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.rho0, 12);
  EXPECT_EQ(c.fujiwara.d_star, 36);
  EXPECT_LE(c.fujiwara.d_star, 2 * 1024);
}

TEST(Tautological, HypersurfaceRouteMatches) {
  const int n = 2;
  Rational delta = default_delta(n);
  for (int d : {3, 7, 40}) {
    Polynomial cls = tautological_integrand(ggl_integrand_uh(n, delta, d), n, n, builtin_q(n));
    EXPECT_EQ(hypersurface_integral(cls, n, d), intersection_number(n, delta, d, builtin_q(n))) << d;
  }
}

TEST(Tautological, SegreChernRelation) {
  // c(X) = (1 + h)^{n+2} / (1 + d h): its Segre classes are what hypersurface_integral substitutes
  const int n = 3;
  RingPtr r = make_ring({{"h", 1, n + 1}});
  Polynomial h = Polynomial::symbol(r, "h");
  const Rational d = 5;
  std::vector<Polynomial> c;
  for (int i = 1; i <= n; ++i) {
    Rational ci = 0;
    for (int j = 0; j <= i; ++j) ci += Rational(binomial(n + 2, j)) * pow(-d, i - j);
    c.push_back(ci * h.pow(i));
  }
  auto s = series_inverse(c);
  RingPtr sr = segre_ring(n);
  for (int i = 1; i <= n; ++i) {
    Polynomial si = Polynomial::symbol(sr, "s_" + std::to_string(i)) * Polynomial::symbol(sr, "h", n - i);
    EXPECT_EQ(hypersurface_integral(si, n, d), s[i - 1].coefficient(make_exponents({i})) * d) << i;
  }
}

TEST(Tautological, SmallCases) {
  RingPtr uh = make_ring({{"u", 1, std::nullopt}, {"h", 1, 3}});
  EXPECT_TRUE(tautological_integrand(Polynomial(uh), 2, 2, builtin_q(2)).is_zero());
  Polynomial u4 = Polynomial::symbol(uh, "u", 4);
  Polynomial cls = tautological_integrand(u4, 2, 2, builtin_q(2));
  EXPECT_EQ(cls.homogeneous_degree(), 2);
  EXPECT_THROW(tautological_integrand(Polynomial::symbol(uh, "u", 3), 2, 2, builtin_q(2)), std::invalid_argument);
  // k = 1: P = u^{2n-1}; the z^{-1} coefficient is s_n and the sign is (-1)^{n+1}
  for (int n = 1; n <= 3; ++n) {
    RingPtr r = make_ring({{"u", 1, std::nullopt}, {"h", 1, n + 1}});
    Polynomial c1 = tautological_integrand(Polynomial::symbol(r, "u", 2 * n - 1), n, 1, builtin_q(1));
    Polynomial sn = Polynomial::symbol(segre_ring(n), "s_" + std::to_string(n));
    EXPECT_EQ(c1, n % 2 ? sn : -sn) << n;
  }
}

TEST(InequalitySuite, NTwo) {
  DegreePolynomial p = degree_polynomial(2, default_delta(2), builtin_q(2));
  InequalityReport rep = inequality_suite(2, builtin_q(2), p);
  EXPECT_TRUE(rep.closed_forms);
  EXPECT_TRUE(rep.bracket);
  EXPECT_TRUE(rep.rho_sums_pass);
  EXPECT_TRUE(rep.ineq_pass);
  for (const auto& chk : rep.rho_sums)
    if (chk.r == 1 && chk.m == 1) EXPECT_EQ(chk.sum, 12);
  InequalityReport at100 = inequality_suite(2, builtin_q(2), p, Integer(100));
  for (const auto& a : at100.a1)
    if (a.c) {
      EXPECT_GT(*a.c, Rational(1, 2));
      EXPECT_LT(*a.c, Rational(3, 2));
    }
}

TEST(InequalitySuite, ClosedFormsNThree) {
  DegreePolynomial p = degree_polynomial(3, default_delta(3), builtin_q(3));
  InequalityReport rep = inequality_suite(3, builtin_q(3), p);
  EXPECT_TRUE(rep.closed_forms);
  EXPECT_TRUE(rep.rho_sums_pass);
  EXPECT_TRUE(rep.ineq_pass);
  // every ratio is inside the bracket once d passes the reported threshold
  InequalityReport late = inequality_suite(3, builtin_q(3), p, rep.bracket_threshold);
  EXPECT_TRUE(late.bracket);
  InequalityReport early = inequality_suite(3, builtin_q(3), p, rep.bracket_threshold - 1);
  EXPECT_FALSE(early.bracket);
}
