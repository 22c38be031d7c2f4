#include <itres/ggl.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace itres {

namespace {

constexpr std::size_t kH = 0, kD = 1, kDelta = 2;  // positions inside ggl_ring

Polynomial sum_z(int n, const RingPtr& zr) {
  Polynomial s(zr);
  for (int i = 1; i <= n; ++i) s += Polynomial::symbol(zr, "z_" + std::to_string(i));
  return s;
}

Integer ipow(long base, unsigned long e) {
  Integer r;
  Integer b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer as_integer(const Rational& r, const char* what) {
  if (!is_integer(r)) throw std::logic_error(std::string(what) + " is not an integer: " + to_string(r));
  return r.get_num();
}

// Q V over z_ring(n, extra), shifted by z^{-n}, times `factor` (already over that ring).
LaurentSeries a1_numerator(int n, const Polynomial& q, const Polynomial& factor, const RingPtr& coeffs) {
  validate_q(n, q);
  RingPtr zr = factor.ring();
  Polynomial num = vandermonde(n, zr) * q.in_ring(zr) * factor;
  LaurentSeries s = LaurentSeries::from_polynomial(static_cast<std::size_t>(n), num, coeffs);
  return s.shifted(Exponents(static_cast<std::size_t>(n), -n));
}

// (1 + d h / z_l)(1 + h / z_l)^{-(n+2)}, exact because h^{n+1} = 0. `d` is a polynomial over coeffs.
LaurentSeries a2_factor(int n, int l, const RingPtr& coeffs, const Polynomial& d) {
  const std::size_t k = static_cast<std::size_t>(n);
  Polynomial hp = Polynomial::symbol(coeffs, "h");
  LaurentSeries out(k, coeffs);
  for (int j = 0; j <= n; ++j) {
    Polynomial c = Polynomial(coeffs, Rational(binomial(-(n + 2), static_cast<unsigned long>(j)))) * hp.pow(j);
    Exponents z(k, 0);
    z[l] = -j;
    for (const auto& [e, v] : c.terms()) out.add(z, e, v);
    z[l] = -j - 1;
    const Polynomial cd = c * d * hp;
    for (const auto& [e, v] : cd.terms()) out.add(z, e, v);
  }
  return out;
}

std::vector<LinearForm> factors_over(int n, const RingPtr& coeffs) { return thom_factors(n, coeffs); }

}  // namespace

Rational default_delta(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return Rational(1, static_cast<unsigned long>(n) * n * n * (n + 1));
}

RingPtr ggl_ring(int n) {
  return make_ring({{"h", 1, n + 1}, {"d", 0, std::nullopt}, {"delta", 0, std::nullopt}});
}

Polynomial ggl_integrand(int n) {
  RingPtr g = ggl_ring(n);
  RingPtr zr = z_ring(static_cast<std::size_t>(n), g->symbols());
  const long n2 = static_cast<long>(n) * n;
  Polynomial h = Polynomial::symbol(zr, "h"), d = Polynomial::symbol(zr, "d"), delta = Polynomial::symbol(zr, "delta");
  Polynomial base = sum_z(n, zr) + Rational(2 * n2) * h;
  Polynomial tail = Rational(2 * n2) * h + Rational(binomial(n + 1, 2)) * delta * (d - Polynomial(zr, n + 2)) * h;
  Polynomial low = base.pow(static_cast<unsigned>(n2 - 1));
  return low * base - Rational(n2) * low * tail;
}

RhoValue rho_coefficient(const Exponents& i, int n, const Polynomial& q, const ResidueOptions& options) {
  RhoValue r{i, 0, false};
  if (static_cast<long>(n) * n + exponent_sum(i) < 0) {
    r.degree_flagged = true;
    return r;
  }
  r.value = rho_coefficients({i}, n, q, options).at(i);
  return r;
}

std::map<Exponents, Integer> rho_coefficients(const std::vector<Exponents>& targets, int n, const Polynomial& q,
                                              const ResidueOptions& options) {
  std::map<int, std::vector<Exponents>> by_sum;
  for (const auto& t : targets) {
    if (t.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("rho: exponent length differs from n");
    by_sum[exponent_sum(t)].push_back(t);
  }
  RingPtr zr = z_ring(static_cast<std::size_t>(n));
  std::map<Exponents, Integer> out;
  for (const auto& [sum, group] : by_sum) {
    const long power = static_cast<long>(n) * n + sum;
    if (power < 0) {
      for (const auto& t : group) out.emplace(t, 0);
      continue;
    }
    LaurentSeries num = a1_numerator(n, q, sum_z(n, zr).pow(static_cast<unsigned>(power)), empty_ring());
    auto coeffs = extract_coefficients(num, factors_over(n, empty_ring()), {}, group, options);
    for (const auto& [t, p] : coeffs) out.emplace(t, as_integer(p.constant_term(), "rho coefficient"));
  }
  return out;
}

Integer rho0_generating(int n, const Polynomial& q, const ResidueOptions& options) {
  const int n2 = n * n;
  std::vector<Exponents> parts;
  Exponents cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      parts.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n2);
  std::vector<Exponents> targets;
  for (const auto& i : parts) {
    Exponents t(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) t[s] = n - i[s];
    targets.push_back(t);
  }
  auto tp = tp_coefficients(n, q, targets, options);
  Integer total = 0;
  const Integer top = factorial(static_cast<unsigned long>(n2));
  for (std::size_t j = 0; j < parts.size(); ++j) {
    Integer multinomial = top;
    for (int v : parts[j]) multinomial /= factorial(static_cast<unsigned long>(v));
    total += tp.at(targets[j]) * multinomial;
  }
  return total;
}

Integer b_coefficient(const Exponents& i, int n) {
  Integer r = 1;
  for (int v : i) {
    if (v < 0) throw std::invalid_argument("b_coefficient: negative exponent");
    r *= binomial(n + v + 1, static_cast<unsigned long>(v));
  }
  return exponent_sum(i) % 2 ? Integer(-r) : r;
}

bool b_bound_holds(const Exponents& i, int n) {
  Integer b = b_coefficient(i, n);
  return abs(b) <= ipow(n + 2, static_cast<unsigned long>(exponent_sum(i)));
}

int DegreePolynomial::degree() const {
  for (int l = static_cast<int>(p.size()) - 1; l >= 0; --l)
    if (sgn(p[l]) != 0) return l;
  return -1;
}

Rational DegreePolynomial::operator()(const Rational& d) const {
  Rational acc = 0;
  for (std::size_t l = p.size(); l-- > 0;) acc = acc * d + p[l];
  return acc;
}

std::string DegreePolynomial::to_string() const {
  RingPtr r = make_ring({{"d", 1, std::nullopt}});
  Polynomial poly(r);
  for (std::size_t l = 0; l < p.size(); ++l) poly.add_term(make_exponents({static_cast<int>(l)}), p[l]);
  return poly.to_string();
}

DegreePolynomial SymbolicDegreePolynomial::at(const Rational& delta) const {
  DegreePolynomial out;
  for (const auto& c : p) out.p.push_back(c.evaluate({delta}));
  return out;
}

bool SymbolicDegreePolynomial::affine_in_delta() const {
  return std::all_of(p.begin(), p.end(), [](const Polynomial& c) { return c.degree_in(0) <= 1; });
}

SymbolicDegreePolynomial intersection_polynomial(int n, const Polynomial& q, const ResidueOptions& options) {
  RingPtr g = ggl_ring(n);
  LaurentSeries num = a1_numerator(n, q, ggl_integrand(n), g);
  std::vector<LaurentSeries> extras;
  for (int l = 0; l < n; ++l) extras.push_back(a2_factor(n, l, g, Polynomial::symbol(g, "d")));
  Exponents target(static_cast<std::size_t>(n), -1);
  Polynomial res = extract_coefficients(num, factors_over(n, g), extras, {target}, options).at(target);

  RingPtr dr = make_ring({{"delta", 0, std::nullopt}});
  SymbolicDegreePolynomial out;
  out.p.assign(static_cast<std::size_t>(n) + 2, Polynomial(dr));
  for (const auto& [e, c] : res.terms()) {
    if (e[kH] != n) throw std::logic_error("GGL residue is not a multiple of h^n");
    const std::size_t l = static_cast<std::size_t>(e[kD]) + 1;  // the integral contributes one more d
    if (l >= out.p.size()) throw std::logic_error("GGL degree polynomial exceeds degree n + 1");
    out.p[l].add_term(make_exponents({e[kDelta]}), c);
  }
  return out;
}

DegreePolynomial degree_polynomial(int n, const Rational& delta, const Polynomial& q, const ResidueOptions& options) {
  SymbolicDegreePolynomial sym = intersection_polynomial(n, q, options);
  if (!sym.affine_in_delta()) throw std::logic_error("degree polynomial coefficients are not affine in delta");
  Integer rho0 = rho_coefficient(Exponents(static_cast<std::size_t>(n), 0), n, q, options).value;
  GGLCertificate c = ggl_certify(n, sym, delta, rho0);
  if (!c.leading_identity) throw std::logic_error("leading coefficient identity fails");
  return c.poly;
}

Rational intersection_number(int n, const Rational& delta, const Rational& d, const Polynomial& q,
                             const ResidueOptions& options) {
  RingPtr g = ggl_ring(n);
  Polynomial integrand = ggl_integrand(n);
  const std::size_t base = static_cast<std::size_t>(n);
  integrand = integrand.substitute(base + kD, Polynomial(integrand.ring(), d))
                  .substitute(base + kDelta, Polynomial(integrand.ring(), delta));
  LaurentSeries num = a1_numerator(n, q, integrand, g);
  std::vector<LaurentSeries> extras;
  for (int l = 0; l < n; ++l) extras.push_back(a2_factor(n, l, g, Polynomial(g, d)));
  Exponents target(static_cast<std::size_t>(n), -1);
  Polynomial res = extract_coefficients(num, factors_over(n, g), extras, {target}, options).at(target);
  Rational total = 0;
  for (const auto& [e, c] : res.terms()) {
    if (e[kH] != n || e[kD] || e[kDelta]) throw std::logic_error("numeric GGL residue has unexpected symbols");
    total += c;
  }
  return total * d;
}

FujiwaraResult fujiwara_certify(const DegreePolynomial& p, const Integer& floor) {
  const int deg = p.degree();
  if (deg < 0 || sgn(p.p[deg]) <= 0) throw std::invalid_argument("fujiwara: leading coefficient must be positive");
  const Rational lead = p.p[deg];
  Integer D = 0;
  for (int l = 1; l <= deg; ++l) {
    Rational ratio = abs(p.p[deg - l]) / lead;
    if (sgn(ratio) == 0) continue;
    Integer ceil_ratio = ratio.get_num() / ratio.get_den();
    if (ceil_ratio * ratio.get_den() != ratio.get_num()) ++ceil_ratio;
    Integer cand;
    mpz_root(cand.get_mpz_t(), ceil_ratio.get_mpz_t(), static_cast<unsigned long>(l));
    if (cand > 0) --cand;
    for (;;) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), cand.get_mpz_t(), static_cast<unsigned long>(l));
      if (Rational(power) >= ratio) break;
      ++cand;
    }
    D = std::max(D, cand);
  }
  FujiwaraResult r{D, 2 * D + 1};
  for (Integer d = 2 * D; d >= floor; --d) {
    if (sgn(p(Rational(d))) > 0)
      r.d_star = d;
    else
      break;
  }
  return r;
}

bool GGLCertificate::pass() const {
  const int deg = poly.degree();
  if (deg != n + 1 || sgn(poly.p[deg]) <= 0) return false;
  return leading_identity && ineq_10l && fujiwara.d_star <= 2 * ipow(n, 10);
}

GGLCertificate ggl_certify(int n, const SymbolicDegreePolynomial& sym, const Rational& delta, const Integer& rho0) {
  GGLCertificate c;
  c.n = n;
  c.delta = delta;
  c.poly = sym.at(delta);
  c.rho0 = rho0;
  if (sgn(c.poly.p[0]) != 0) throw std::logic_error("degree polynomial has a constant term");
  const Rational factor = Rational(static_cast<long>(n) * n) * Rational(binomial(n + 1, 2));
  // p_{n+1}(delta) = rho0 - n^2 binom(n+1, 2) rho0 delta, checked symbolically and at delta
  RingPtr dr = sym.p.back().ring();
  Polynomial expected(dr, Rational(rho0));
  expected.add_term(make_exponents({1}), -factor * Rational(rho0));
  c.leading_identity = sym.p.size() == static_cast<std::size_t>(n) + 2 && sym.p.back() == expected &&
                       c.poly.p.back() == (1 - factor * delta) * Rational(rho0);
  c.ineq_10l = true;
  const Rational lead = c.poly.p.back();
  for (int l = 1; l <= n + 1; ++l)
    c.ineq_10l = c.ineq_10l && abs(c.poly.p[n + 1 - l]) < Rational(ipow(n, 10ul * l)) * lead;
  if (c.poly.degree() == n + 1 && sgn(lead) > 0) c.fujiwara = fujiwara_certify(c.poly, n + 3);
  return c;
}

GGLCertificate ggl_certify(int n, const Rational& delta, const Polynomial& q, const ResidueOptions& options) {
  SymbolicDegreePolynomial sym = intersection_polynomial(n, q, options);
  Integer rho0 = rho_coefficient(Exponents(static_cast<std::size_t>(n), 0), n, q, options).value;
  return ggl_certify(n, sym, delta, rho0);
}

RingPtr segre_ring(int n) {
  std::vector<Symbol> s;
  for (int i = 1; i <= n; ++i) s.push_back({"s_" + std::to_string(i), i, std::nullopt});
  s.push_back({"h", 1, n + 1});
  return make_ring(std::move(s));
}

Polynomial tautological_integrand(const Polynomial& p, int n, int k, const Polynomial& q, const ResidueOptions& options) {
  if (k < 1 || k > n) throw std::invalid_argument("tautological_integrand: need 1 <= k <= n");
  RingPtr sr = segre_ring(n);
  if (p.is_zero()) return Polynomial(sr);
  auto u = p.ring()->find("u");
  auto h = p.ring()->find("h");
  if (!u || !h || p.ring()->size() != 2) throw std::invalid_argument("P must be a polynomial in u and h");
  auto deg = p.homogeneous_degree();
  const int expected = n + k * (n - 1);
  if (!deg || *deg != expected)
    throw std::invalid_argument("P must be homogeneous of degree " + std::to_string(expected));

  RingPtr zr = z_ring(static_cast<std::size_t>(k), sr->symbols());
  Polynomial s = sum_z(k, zr), hz = Polynomial::symbol(zr, "h");
  Polynomial pz(zr);
  for (const auto& [e, c] : p.terms()) pz += c * s.pow(static_cast<unsigned>(e[*u])) * hz.pow(static_cast<unsigned>(e[*h]));

  validate_q(k, q);
  Polynomial num = vandermonde(k, zr) * q.in_ring(zr) * pz;
  LaurentSeries series = LaurentSeries::from_polynomial(static_cast<std::size_t>(k), num, sr)
                             .shifted(Exponents(static_cast<std::size_t>(k), -n));
  std::vector<LaurentSeries> extras;
  for (int j = 0; j < k; ++j) {
    LaurentSeries e(static_cast<std::size_t>(k), sr);
    Exponents z(static_cast<std::size_t>(k), 0), sym(sr->size(), 0);
    e.add(z, sym, 1);
    for (int i = 1; i <= n; ++i) {
      z[j] = -i;
      Exponents si = sym;
      si[i - 1] = 1;
      e.add(z, si, 1);
    }
    extras.push_back(std::move(e));
  }
  Exponents target(static_cast<std::size_t>(k), -1);
  Polynomial res =
      extract_coefficients(series, thom_factors(k, sr), extras, {target}, options).at(target);
  if ((k * (n + 1)) % 2) res = -res;
  return res;
}

Rational hypersurface_integral(const Polynomial& cls, int n, const Rational& d) {
  RingPtr sr = segre_ring(n);
  Polynomial c = cls.in_ring(sr);
  Polynomial h = Polynomial::symbol(sr, "h");
  for (int i = 1; i <= n; ++i) {
    Rational coeff = Rational(binomial(-(n + 2), static_cast<unsigned long>(i))) +
                     d * Rational(binomial(-(n + 2), static_cast<unsigned long>(i - 1)));
    c = c.substitute(static_cast<std::size_t>(i - 1), coeff * h.pow(static_cast<unsigned>(i)));
  }
  return c.coefficient_of(static_cast<std::size_t>(n), n).constant_term() * d;
}

Polynomial ggl_integrand_uh(int n, const Rational& delta, const Rational& d) {
  RingPtr r = make_ring({{"u", 1, std::nullopt}, {"h", 1, n + 1}});
  const long n2 = static_cast<long>(n) * n;
  Polynomial u = Polynomial::symbol(r, "u"), h = Polynomial::symbol(r, "h");
  Polynomial base = u + Rational(2 * n2) * h;
  Polynomial tail = (Rational(2 * n2) + delta * Rational(binomial(n + 1, 2)) * (d - (n + 2))) * h;
  Polynomial low = base.pow(static_cast<unsigned>(n2 - 1));
  return low * base - Rational(n2) * low * tail;
}

InequalityReport inequality_suite(int n, const Polynomial& q, const DegreePolynomial& poly,
                                  std::optional<Integer> sample_d, const ResidueOptions& options) {
  InequalityReport rep;
  rep.n = n;
  rep.delta = default_delta(n);
  rep.sample_d = sample_d ? *sample_d : 2 * ipow(n, 5) + 1;
  const std::size_t k = static_cast<std::size_t>(n);
  const long n2 = static_cast<long>(n) * n;

  // pairs (a, b): b square-free, a >= 0 off the support of b, sum a <= sum b
  std::vector<std::pair<Exponents, Exponents>> pairs;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Exponents b(k, 0);
    std::vector<std::size_t> free;
    for (std::size_t s = 0; s < k; ++s) {
      if (mask & (1u << s))
        b[s] = 1;
      else
        free.push_back(s);
    }
    const int sb = exponent_sum(b);
    Exponents a(k, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
      if (pos == free.size()) {
        pairs.emplace_back(a, b);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        a[free[pos]] = v;
        rec(pos + 1, left - v);
      }
      a[free[pos]] = 0;
    };
    rec(0, sb);
  }
  std::vector<Exponents> targets;
  for (const auto& [a, b] : pairs) {
    Exponents i(k, 0);
    for (std::size_t s = 0; s < k; ++s) i[s] = a[s] - b[s];
    targets.push_back(i);
  }
  auto rho = rho_coefficients(targets, n, q, options);
  const Integer rho0 = rho.at(Exponents(k, 0));

  // direct A^1 coefficients at the numeric delta
  RingPtr g = ggl_ring(n);
  Polynomial integrand = ggl_integrand(n);
  integrand = integrand.substitute(k + kDelta, Polynomial(integrand.ring(), rep.delta));
  auto direct = extract_coefficients(a1_numerator(n, q, integrand, g), factors_over(n, g), {}, targets, options);

  const Rational beta = Rational(2 * n2 * n2 - 2 * n2) - Rational(n + 2) / 2;
  auto weight = [&](long m) -> Rational {  // binom(n^2 - 1, m) (2 n^2)^m, zero for m < 0
    if (m < 0) return 0;
    return Rational(binomial(n2 - 1, static_cast<unsigned long>(m)) * ipow(2 * n2, static_cast<unsigned long>(m)));
  };

  rep.closed_forms = true;
  rep.bracket = true;
  bool any_c = false;
  Rational worst = 0;  // max |K| with C = 1 + K/d
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    A1Check chk;
    chk.a = pairs[j].first;
    chk.b = pairs[j].second;
    const Exponents& i = targets[j];
    const long M = -exponent_sum(i);
    chk.rho = rho.at(i);
    const Polynomial& coeff = direct.at(i);
    Exponents dh(g->size(), 0), plain(g->size(), 0);
    dh[kH] = static_cast<int>(M);
    dh[kD] = 1;
    plain[kH] = static_cast<int>(M);
    chk.dh_direct = coeff.coefficient(dh);
    chk.plain_direct = coeff.coefficient(plain);
    chk.dh_closed = -Rational(chk.rho) / 2 * weight(M - 1);
    chk.plain_closed = Rational(chk.rho) * (weight(M) - beta * weight(M - 1));
    rep.closed_forms = rep.closed_forms && chk.closed_ok();
    if (M >= 1 && sgn(chk.dh_direct) != 0) {
      Rational K = chk.plain_direct / chk.dh_direct;
      Rational c = 1 + K / Rational(rep.sample_d);
      chk.c = c;
      Rational bound = Rational(1, static_cast<unsigned long>(n));
      bool inside = abs(c) > 1 - bound && abs(c) < 1 + bound;
      rep.bracket = rep.bracket && inside;
      if (!any_c) rep.c_min = rep.c_max = c;
      rep.c_min = std::min(rep.c_min, c);
      rep.c_max = std::max(rep.c_max, c);
      worst = std::max(worst, Rational(abs(K)));
      any_c = true;
    }
    rep.a1.push_back(std::move(chk));
  }
  {
    Rational t = worst * n;  // C stays inside the bracket exactly when d > n |K|
    Integer fl = t.get_num() / t.get_den();
    rep.bracket_threshold = fl + 1;
  }

  rep.rho_sums_pass = true;
  for (int r = 0; r <= n; ++r)
    for (int m = 0; m <= r; ++m) {
      RhoSumCheck chk;
      chk.r = r;
      chk.m = m;
      chk.sum = 0;
      for (std::size_t j = 0; j < pairs.size(); ++j)
        if (exponent_sum(pairs[j].second) == r && exponent_sum(pairs[j].first) == r - m) chk.sum += rho.at(targets[j]);
      chk.bound = ipow(n, static_cast<unsigned long>(8 * r - 7 * m)) * rho0;
      // at r = m = 0 the sum is rho_0 itself
      chk.pass = abs(chk.sum) < chk.bound || (r == 0 && chk.sum == rho0);
      rep.rho_sums_pass = rep.rho_sums_pass && chk.pass;
      rep.rho_sums.push_back(chk);
    }

  rep.ineq_pass = true;
  const Rational lead = poly.p.at(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= n + 1; ++l) {
    bool ok = abs(poly.p[n + 1 - l]) < Rational(ipow(n, 10ul * l)) * lead;
    rep.ineq.push_back(ok);
    rep.ineq_pass = rep.ineq_pass && ok;
  }
  return rep;
}

}  // namespace itres
