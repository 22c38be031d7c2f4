#include <itres/equivariant.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace itres;

namespace {

struct Weights {
  RingPtr ring;
  std::vector<Polynomial> lambda;
  explicit Weights(std::size_t r) : ring(lambda_ring(r)) {
    for (std::size_t i = 1; i <= r; ++i) lambda.push_back(Polynomial::symbol(ring, "lambda_" + std::to_string(i)));
  }
  const Polynomial& operator[](std::size_t i) const { return lambda[i - 1]; }
};

Polynomial mdeg(std::size_t n, std::vector<std::vector<int>> gens, const std::vector<Polynomial>& eta) {
  return mdeg_monomial(MonomialIdeal(n, std::move(gens)), eta).value;
}

}  // namespace

TEST(MonomialIdeal, MinimalizesAndRejects) {
  MonomialIdeal m(2, {{1, 1}, {1, 0}, {2, 3}});
  EXPECT_EQ(m.generators().size(), 1u);
  EXPECT_TRUE(m.contains({3, 0}));
  EXPECT_FALSE(m.contains({0, 5}));
  EXPECT_THROW(MonomialIdeal(2, {}), std::invalid_argument);
  EXPECT_THROW(MonomialIdeal(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(MonomialIdeal(2, {{1}}), std::invalid_argument);
}

TEST(Mdeg, Examples) {
  Weights w(2);
  EXPECT_EQ(mdeg(1, {{1}}, {w[1]}), w[1]);
  EXPECT_EQ(mdeg(2, {{2, 0}}, {w[1], w[2]}), Rational(2) * w[1]);
  EXPECT_EQ(mdeg(2, {{1, 1}}, {w[1], w[2]}), w[1] + w[2]);
  Mdeg md = mdeg_monomial(MonomialIdeal(2, {{1, 1}}), {w[1], w[2]});
  EXPECT_EQ(md.codim, 1u);
  EXPECT_EQ(md.components.size(), 2u);
}

TEST(Mdeg, CoordinateSubspaces) {
  Weights w(4);
  std::vector<Polynomial> eta{w[1], w[2], w[3], w[4]};
  EXPECT_EQ(mdeg(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}, eta), w[1] * w[3]);
  EXPECT_EQ(mdeg(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}, eta), w[1] * w[2] * w[4]);
}

TEST(Mdeg, CompleteIntersections) {
  Weights w(2);
  EXPECT_EQ(mdeg_complete_intersection({w[1]}, w.ring), w[1]);
  EXPECT_EQ(mdeg_complete_intersection({Rational(2) * w[1], w[1] + w[2]}, w.ring).to_string(),
            "2lambda_1^2 + 2lambda_1lambda_2");
  EXPECT_EQ(mdeg_complete_intersection({}, w.ring), Polynomial(w.ring, 1));
  // monomial complete intersection <y_1^2, y_2^3>: degrees 2 eta_1, 3 eta_2
  std::vector<Polynomial> eta{w[1], w[1] + w[2]};
  EXPECT_EQ(mdeg(2, {{2, 0}, {0, 3}}, eta), mdeg_complete_intersection({Rational(2) * eta[0], Rational(3) * eta[1]}, w.ring));
}

TEST(Mdeg, AdditivityOnUnions) {
  Weights w(3);
  std::vector<Polynomial> eta{w[1], w[2], w[3]};
  // <y_1 y_2> = <y_1> cap <y_2>; <y_1^2 y_2> has components y_1 (mult 2) and y_2 (mult 1)
  EXPECT_EQ(mdeg(3, {{1, 1, 0}}, eta), mdeg(3, {{1, 0, 0}}, eta) + mdeg(3, {{0, 1, 0}}, eta));
  EXPECT_EQ(mdeg(3, {{2, 1, 0}}, eta), Rational(2) * mdeg(3, {{1, 0, 0}}, eta) + mdeg(3, {{0, 1, 0}}, eta));
  // <y_1, y_2> cap <y_2, y_3> = <y_2, y_1 y_3>
  EXPECT_EQ(mdeg(3, {{0, 1, 0}, {1, 0, 1}}, eta),
            mdeg(3, {{1, 0, 0}, {0, 1, 0}}, eta) + mdeg(3, {{0, 1, 0}, {0, 0, 1}}, eta));
  // embedded lower-dimensional components do not contribute: <y_1^2, y_1 y_2>
  EXPECT_EQ(mdeg(3, {{2, 0, 0}, {1, 1, 0}}, eta), mdeg(3, {{1, 0, 0}}, eta));
}

TEST(Mdeg, Elimination) {
  Weights w(3);
  std::vector<std::vector<std::vector<int>>> ideals{{{2, 1}}, {{1, 2}, {3, 0}}, {{1, 1}}, {{0, 2}}};
  for (const auto& gens : ideals) {
    Polynomial base = mdeg(2, gens, {w[1], w[2]});
    std::vector<std::vector<int>> ext{{1, 0, 0}};
    for (const auto& g : gens) ext.push_back({0, g[0], g[1]});
    EXPECT_EQ(mdeg(3, ext, {w[3], w[1], w[2]}), w[3] * base);
  }
}

TEST(Mdeg, PositivityInEta) {
  // with free weights eta_i = lambda_i the coefficients are the multiplicities themselves
  Weights w(3);
  std::vector<Polynomial> eta{w[1], w[2], w[3]};
  std::vector<std::vector<std::vector<int>>> ideals{
      {{2, 1, 0}}, {{3, 0, 0}, {0, 2, 0}, {1, 1, 1}}, {{1, 1, 1}}, {{2, 2, 0}, {0, 1, 3}}, {{0, 0, 4}, {1, 2, 0}}};
  for (const auto& gens : ideals) {
    Polynomial p = mdeg(3, gens, eta);
    ASSERT_FALSE(p.is_zero());
    for (const auto& [e, c] : p.terms()) {
      EXPECT_GT(c, 0);
      EXPECT_TRUE(is_integer(c));
    }
  }
}

TEST(Mdeg, SymmetricIdealSwap) {
  Weights w(2);
  Polynomial a = mdeg(2, {{2, 1}, {1, 2}}, {w[1], w[2]});
  Polynomial b = mdeg(2, {{2, 1}, {1, 2}}, {w[2], w[1]});
  EXPECT_EQ(a, b);
}

TEST(WeightDegreeReport, ReportsOnly) {
  Weights w(2);
  auto r1 = prop48_degree_report(MonomialIdeal(2, {{1, 1}}), {w[1], w[1]}, 0);
  EXPECT_TRUE(r1.holds);
  EXPECT_EQ(r1.mdeg_degree, 1);
  auto r2 = prop48_degree_report(MonomialIdeal(1, {{1}}), {w[1]}, 0);
  EXPECT_FALSE(r2.holds);
  EXPECT_NE(r2.summary().find("not satisfied"), std::string::npos);
  auto r3 = prop48_degree_report(MonomialIdeal(2, {{0, 2}}), {w[1], w[2]}, 0);
  EXPECT_TRUE(r3.holds);
  EXPECT_EQ(r3.mdeg_degree, 0);
}

TEST(FixedPointSum, Examples) {
  EXPECT_EQ(fixed_point_sum(Polynomial(z_ring(1), 1), {Rational(3)}, 1), Rational(1));
  Polynomial z1 = Polynomial::symbol(z_ring(1), "z_1");
  EXPECT_EQ(fixed_point_sum(z1, {Rational(2), Rational(7, 3)}, 1), Rational(-1));
  EXPECT_EQ(fixed_point_sum(z1, {Rational(-5), Rational(1, 2)}, 1), Rational(-1));
  EXPECT_EQ(fixed_point_sum(Polynomial(z_ring(2), 1), {Rational(1), Rational(4)}, 2), Rational(0));
  EXPECT_THROW(fixed_point_sum(z1, {Rational(2), Rational(2)}, 1), std::domain_error);
}

TEST(FixedPointSum, CompletionOrderIsIrrelevant) {
  std::vector<Rational> lambda = random_weights(5, 3);
  Polynomial q = random_homogeneous(2, 3, 9);
  std::vector<std::size_t> perm{3, 1, 0, 2, 4};
  Rational base = fixed_point_term(q, lambda, perm, 2);
  std::sort(perm.begin() + 2, perm.end());
  do {
    EXPECT_EQ(fixed_point_term(q, lambda, perm, 2), base);
  } while (std::next_permutation(perm.begin() + 2, perm.end()));
}

TEST(Localisation, ResidueByHand) {
  Polynomial z1 = Polynomial::symbol(z_ring(1), "z_1");
  EXPECT_EQ(localisation_residue(z1, 2, 1), Polynomial(lambda_ring(2), -1));
  EXPECT_TRUE(localisation_residue(Polynomial(z_ring(2), 1), 2, 2).is_zero());
}

TEST(Localisation, OracleSmallCases) {
  Polynomial q = Polynomial::parse(z_ring(2), "z_1z_2");
  for (std::uint64_t seed = 1; seed <= 10; ++seed) EXPECT_TRUE(localisation_oracle(q, 3, 2, seed).equal) << seed;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (int deg = 0; deg <= 3; ++deg) {
        Polynomial r = random_homogeneous(k, deg, 100 * n + 10 * k + deg);
        EXPECT_TRUE(localisation_oracle(r, n, k, 77).equal) << n << " " << k << " " << deg;
      }
}

TEST(RandomInputs, Reproducible) {
  EXPECT_EQ(random_weights(4, 12), random_weights(4, 12));
  auto w = random_weights(6, 5);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) EXPECT_NE(w[i], w[j]);
  EXPECT_EQ(random_homogeneous(3, 2, 8), random_homogeneous(3, 2, 8));
  EXPECT_EQ(random_homogeneous(3, 2, 8).homogeneous_degree(), 2);
}
