#pragma once

// Independent oracles and random inputs shared by the unit tests and the acceptance binary.

#include <itres/ggl.hpp>
#include <itres/jets.hpp>
#include <itres/series.hpp>
#include <itres/thom.hpp>

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace itres::testing {

// GGL residue with everything multiplied out in the box [-box, box]^n, bypassing the
// level-by-level extraction. Returns the z^{-1..-1} coefficient over ggl_ring(n).
inline Polynomial brute_force_ggl_residue(int n, int box) {
  const std::size_t k = static_cast<std::size_t>(n);
  RingPtr g = ggl_ring(n);
  Window w = Window::box(k, -box, box);
  RingPtr zr = z_ring(k, g->symbols());
  Polynomial num = vandermonde(n, zr) * builtin_q(n).in_ring(zr) * ggl_integrand(n);
  LaurentSeries acc = LaurentSeries::from_polynomial(k, num, g).shifted(Exponents(k, -n)).truncated(w);
  for (const auto& f : thom_factors(n, g)) acc = multiply(acc, expand_inverse_linear(f, w), w);
  Polynomial h = Polynomial::symbol(g, "h"), d = Polynomial::symbol(g, "d");
  const Polynomial dh = d * h;
  for (std::size_t l = 0; l < k; ++l) {
    // (1 + h/z_l)^{-1} = z_l / (z_l + h), raised to n + 2, times 1 + d h / z_l
    std::vector<Rational> zc(k, 0);
    zc[l] = 1;
    Exponents up(k, 0), down(k, 0);
    up[l] = 1;
    down[l] = -1;
    LaurentSeries inv = expand_inverse_linear(LinearForm(h, zc), w).shifted(up);
    LaurentSeries a2(k, g, w);
    a2.add(Exponents(k + g->size(), 0), 1);
    for (int p = 0; p < n + 2; ++p) a2 = multiply(a2, inv, w);
    LaurentSeries lin(k, g, w);
    lin.add(Exponents(k + g->size(), 0), 1);
    for (const auto& [e, c] : dh.terms()) lin.add(down, e, c);
    acc = multiply(acc, multiply(a2, lin, w), w);
  }
  return acc.coefficient(Exponents(k, -1));
}

// The degree polynomial read off the brute-force residue, or nullopt when growing the box by 2
// changes the answer or the h-degree is not n.
inline std::optional<SymbolicDegreePolynomial> brute_force_ggl_polynomial(int n) {
  const int box = 3 * n * n;
  Polynomial r = brute_force_ggl_residue(n, box);
  if (r != brute_force_ggl_residue(n, box + 2)) return std::nullopt;
  RingPtr dr = make_ring({{"delta", 0, std::nullopt}});
  SymbolicDegreePolynomial out;
  out.p.assign(static_cast<std::size_t>(n) + 2, Polynomial(dr));
  for (const auto& [e, c] : r.terms()) {
    if (e[0] != n) return std::nullopt;
    out.p[static_cast<std::size_t>(e[1]) + 1].add_term(make_exponents({e[2]}), c);
  }
  return out;
}

// Coefficient of t^s in (1 - t) / (1 - 2t), by long division; k = 2 Thom series along (s, -s).
inline std::vector<Rational> k2_series_oracle(int smax) {
  std::vector<Rational> num(static_cast<std::size_t>(smax) + 1, 0), out(num.size(), 0);
  num[0] = 1;
  if (smax >= 1) num[1] = -1;
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = num[s] + (s ? 2 * out[s - 1] : Rational(0));
  return out;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int small() { return std::uniform_int_distribution<int>(-5, 5)(gen); }
  int nonzero() {
    int v = 0;
    while (v == 0) v = small();
    return v;
  }
};

// Random jet C^u -> C^v of order k, small integer coefficients on every monomial.
inline Jet random_jet(std::size_t u, std::size_t v, int k, Rng& rng) {
  RingPtr r = x_ring(u);
  std::vector<Polynomial> comps;
  for (std::size_t c = 0; c < v; ++c) {
    Polynomial p(r);
    std::function<void(std::size_t, int, Exponents&)> rec = [&](std::size_t pos, int left, Exponents& e) {
      if (pos == u) {
        if (exponent_sum(e) >= 1) p.add_term(e, rng.small());
        return;
      }
      for (int x = 0; x <= left; ++x) {
        e[pos] = x;
        rec(pos + 1, left - x, e);
      }
      e[pos] = 0;
    };
    Exponents e(u, 0);
    rec(0, k, e);
    comps.push_back(p);
  }
  return Jet::make(u, k, std::move(comps));
}

inline CurveJet random_curve(std::size_t n, int k, Rng& rng) {
  CurveJet g{Matrix(n, std::vector<Rational>(static_cast<std::size_t>(k)))};
  for (auto& row : g.v)
    for (auto& x : row) x = rng.small();
  if (!g.regular()) g.v[0][0] = 1;
  return g;
}

inline std::vector<Rational> random_alpha(int k, Rng& rng, bool unipotent = false) {
  std::vector<Rational> a(static_cast<std::size_t>(k));
  a[0] = unipotent ? 1 : rng.nonzero();
  for (int i = 1; i < k; ++i) a[i] = rng.small();
  return a;
}

}  // namespace itres::testing
