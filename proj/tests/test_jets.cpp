#include <itres/jets.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace itres;
using namespace itres::testing;

namespace {

using Vec = std::vector<Rational>;

Vec coeffs_at(const Jet& j, int m) {
  Vec out;
  for (const auto& c : j.components) out.push_back(c.coefficient(make_exponents({m})));
  return out;
}

Vec add(Vec a, const Vec& b, const Rational& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

}  // namespace

TEST(ComposeJets, OrderOneIsMatrixProduct) {
  Rng rng(1);
  Jet a = random_jet(3, 2, 1, rng), b = random_jet(2, 3, 1, rng);
  Jet c = compose_jets(a, b);
  // linear parts as matrices
  auto mat = [](const Jet& j) {
    Matrix m(j.target, Vec(j.source));
    for (std::size_t r = 0; r < j.target; ++r)
      for (std::size_t s = 0; s < j.source; ++s) {
        Exponents e(j.source, 0);
        e[s] = 1;
        m[r][s] = j.components[r].coefficient(e);
      }
    return m;
  };
  EXPECT_EQ(mat(c), matmul(mat(a), mat(b)));
}

TEST(ComposeJets, IdentityAndHandExample) {
  Rng rng(2);
  Jet a = random_jet(2, 3, 3, rng);
  EXPECT_EQ(compose_jets(a, Jet::identity(2, 3)), a);
  RingPtr r = x_ring(1);
  Jet f = Jet::make(1, 2, {Polynomial::parse(r, "x_1 + x_1^2")});
  EXPECT_EQ(compose_jets(f, f).components[0].to_string(), "2x_1^2 + x_1");
  EXPECT_THROW(compose_jets(a, Jet::identity(3, 3)), std::invalid_argument);
}

TEST(ReparamMatrix, Examples) {
  Rational a1(3), a2(-2);
  Matrix m = reparam_matrix({a1, a2});
  EXPECT_EQ(m, (Matrix{{a1, a2}, {0, a1 * a1}}));
  Rational l(5, 2);
  Matrix d = reparam_matrix({l, 0, 0, 0});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(d[i][j], i == j ? pow(l, i + 1) : Rational(0));
}

TEST(ReparamMatrix, GeneralEntryFormula) {
  // (i, j) entry = sum over compositions of j into i positive parts of the alpha products
  Rng rng(3);
  const int k = 5;
  Vec a = random_alpha(k, rng);
  Matrix m = reparam_matrix(a);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      Rational sum = 0;
      std::function<void(int, int, Rational)> rec = [&](int parts, int left, Rational prod) {
        if (parts == 0) {
          if (left == 0) sum += prod;
          return;
        }
        for (int s = 1; s <= left; ++s) rec(parts - 1, left - s, prod * a[s - 1]);
      };
      rec(i, j, 1);
      EXPECT_EQ(m[i - 1][j - 1], sum) << i << "," << j;
    }
}

TEST(ReparamMatrix, CompositionLawMatchesComposeJets) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Vec phi = random_alpha(3, rng), psi = random_alpha(3, rng);
    Jet comp = compose_jets(reparam_jet(phi), reparam_jet(psi));  // phi(psi(t))
    Vec composed{comp.components[0].coefficient(make_exponents({1})), comp.components[0].coefficient(make_exponents({2})),
                 comp.components[0].coefficient(make_exponents({3}))};
    EXPECT_EQ(reparam_matrix(composed), matmul(reparam_matrix(phi), reparam_matrix(psi)));
  }
}

TEST(Reparametrise, AgreesWithJetComposition) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 3;
    CurveJet g = random_curve(3, k, rng);
    Vec a = random_alpha(k, rng);
    CurveJet direct = CurveJet::from_jet(compose_jets(g.as_jet(), reparam_jet(a)));
    EXPECT_EQ(reparametrise(g, a).v, direct.v);
  }
}

TEST(Polarization, DiagonalAndSymmetry) {
  Rng rng(6);
  Jet psi = random_jet(3, 2, 4, rng);
  Vec v{1, -2, 3}, w{0, 4, -1}, x{2, 2, 5};
  for (int s = 1; s <= 4; ++s) {
    std::vector<Vec> args(static_cast<std::size_t>(s), v);
    EXPECT_EQ(polarization(psi, s, args), psi.part(s, v));
  }
  EXPECT_EQ(polarization(psi, 3, {v, w, x}), polarization(psi, 3, {x, v, w}));
  // linear in each slot
  Vec vw = add(v, w, 2);
  EXPECT_EQ(polarization(psi, 2, {vw, x}), add(polarization(psi, 2, {v, x}), polarization(psi, 2, {w, x}), 2));
}

TEST(TestCurveResidual, MatchesExplicitOrderFourSystem) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 2;
    Jet psi = random_jet(n, 2, 4, rng);
    CurveJet g = random_curve(n, 4, rng);
    auto res = test_curve_residual(psi, g);
    Vec v1 = g.column(1), v2 = g.column(2), v3 = g.column(3), v4 = g.column(4);
    auto P = [&](std::vector<Vec> a) { return polarization(psi, static_cast<int>(a.size()), a); };
    Vec e1 = P({v1});
    Vec e2 = add(P({v2}), P({v1, v1}));
    Vec e3 = add(add(P({v3}), P({v1, v2}), 2), P({v1, v1, v1}));
    Vec e4 = add(add(add(add(P({v4}), P({v1, v3}), 2), P({v2, v2})), P({v1, v1, v2}), 3), P({v1, v1, v1, v1}));
    ASSERT_EQ(res.size(), 4u);
    EXPECT_EQ(res[0], e1);
    EXPECT_EQ(res[1], e2);
    EXPECT_EQ(res[2], e3);
    EXPECT_EQ(res[3], e4);
  }
}

TEST(TestCurveResidual, EqualsCompositionCoefficients) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Jet psi = random_jet(3, 2, 3, rng);
    CurveJet g = random_curve(3, 3, rng);
    Jet comp = compose_jets(psi, g.as_jet());
    auto res = test_curve_residual(psi, g);
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(res[m - 1], coeffs_at(comp, m));
  }
  Jet zero = Jet::zero(3, 2, 3);
  for (const auto& e : test_curve_residual(zero, random_curve(3, 3, rng)))
    for (const auto& x : e) EXPECT_EQ(x, 0);
}

TEST(TestCurveResidual, LinearInPsi) {
  Rng rng(9);
  Jet a = random_jet(2, 2, 3, rng), b = random_jet(2, 2, 3, rng);
  CurveJet g = random_curve(2, 3, rng);
  std::vector<Polynomial> sum;
  for (std::size_t i = 0; i < 2; ++i) sum.push_back(a.components[i] + Rational(3) * b.components[i]);
  Jet ab = Jet::make(2, 3, sum);
  auto ra = test_curve_residual(a, g), rb = test_curve_residual(b, g), rab = test_curve_residual(ab, g);
  for (int m = 0; m < 3; ++m) EXPECT_EQ(rab[m], add(ra[m], rb[m], 3));
}

TEST(TestCurveResidual, TestCurvesStayTestCurves) {
  // Psi(x, y) = y - x^2 kills gamma(t) = (t, t^2)
  RingPtr r = x_ring(2);
  Jet psi = Jet::make(2, 4, {Polynomial::parse(r, "x_2 - x_1^2")});
  CurveJet g{Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}}};
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    CurveJet h = reparametrise(g, random_alpha(4, rng));
    for (const auto& e : test_curve_residual(psi, h)) EXPECT_EQ(e[0], 0);
  }
}

TEST(FlagData, CoordinateCurve) {
  for (int k = 1; k <= 3; ++k) {
    CurveJet g{Matrix(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 0))};
    for (int i = 0; i < k; ++i) g.v[i][i] = 1;
    FlagData f = curve_flag_data(g);
    EXPECT_EQ(f.rows.size(), static_cast<std::size_t>(k));
    // row 1 is the unit vector e_1
    int ones = 0;
    for (const auto& x : f.rows[0]) ones += x == 1;
    EXPECT_EQ(ones, 1);
    bool distinguished = false;
    for (const auto& p : f.plucker) distinguished = distinguished || p == 1;
    EXPECT_TRUE(distinguished);
  }
  EXPECT_THROW(curve_flag_data(CurveJet{Matrix{{0, 1}, {0, 0}}}), std::invalid_argument);
}

TEST(FlagData, PluckerScalingLaw) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 4;
    const std::size_t n = k == 4 ? 2 : 3;
    CurveJet g = random_curve(n, k, rng);
    Vec a = random_alpha(k, rng);
    FlagData base = curve_flag_data(g), moved = curve_flag_data(reparametrise(g, a));
    Rational scale = pow(a[0], static_cast<unsigned long>(k * (k + 1) / 2));
    ASSERT_EQ(base.plucker.size(), moved.plucker.size());
    for (std::size_t i = 0; i < base.plucker.size(); ++i) EXPECT_EQ(moved.plucker[i], scale * base.plucker[i]);
    Vec u = random_alpha(k, rng, true);
    EXPECT_EQ(curve_flag_data(reparametrise(g, u)).plucker, base.plucker);
  }
}
