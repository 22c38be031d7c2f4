#include <itres/jets.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace itres {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), m = b.size(), p = b.front().size();
  for (const auto& row : a)
    if (row.size() != m) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out(n, std::vector<Rational>(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < m; ++t) {
      if (sgn(a[i][t]) == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  Rational sign = 1, prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (sgn(m[c][c]) == 0) {
      std::size_t r = c + 1;
      while (r < n && sgn(m[r][c]) == 0) ++r;
      if (r == n) return 0;
      std::swap(m[c], m[r]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

RingPtr x_ring(std::size_t n) {
  std::vector<Symbol> s;
  for (std::size_t i = 1; i <= n; ++i) s.push_back({"x_" + std::to_string(i), 1, std::nullopt});
  return make_ring(std::move(s));
}

namespace {

Polynomial truncate(const Polynomial& p, int k) {
  Polynomial out(p.ring());
  for (const auto& [e, c] : p.terms())
    if (exponent_sum(e) <= k) out.add_term(e, c);
  return out;
}

}  // namespace

Jet Jet::zero(std::size_t u, std::size_t v, int k) {
  RingPtr r = x_ring(u);
  return {u, v, k, std::vector<Polynomial>(v, Polynomial(r))};
}

Jet Jet::identity(std::size_t u, int k) {
  RingPtr r = x_ring(u);
  Jet j{u, u, k, {}};
  for (std::size_t i = 1; i <= u; ++i) j.components.push_back(Polynomial::symbol(r, "x_" + std::to_string(i)));
  return j;
}

Jet Jet::make(std::size_t u, int k, std::vector<Polynomial> components) {
  if (k < 1) throw std::invalid_argument("jet order must be positive");
  RingPtr r = x_ring(u);
  Jet j{u, components.size(), k, {}};
  for (auto& p : components) {
    if (!(*p.ring() == *r)) throw std::invalid_argument("jet component must live over x_1..x_u");
    if (sgn(p.constant_term()) != 0) throw std::invalid_argument("jet component has a constant term");
    j.components.push_back(truncate(p, k));
  }
  return j;
}

std::vector<Rational> Jet::part(int j, const std::vector<Rational>& w) const {
  if (w.size() != source) throw std::invalid_argument("jet part: vector length mismatch");
  std::vector<Rational> out;
  for (const auto& p : components) {
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
      if (exponent_sum(e) != j) continue;
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t *= pow(w[i], static_cast<unsigned long>(e[i]));
      acc += t;
    }
    out.push_back(acc);
  }
  return out;
}

bool Jet::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool Jet::operator==(const Jet& other) const {
  return source == other.source && target == other.target && order == other.order && components == other.components;
}

Jet compose_jets(const Jet& outer, const Jet& inner) {
  if (outer.order != inner.order) throw std::invalid_argument("compose_jets: orders differ");
  if (outer.source != inner.target) throw std::invalid_argument("compose_jets: dimension mismatch");
  const int k = outer.order;
  RingPtr r = x_ring(inner.source);
  // powers[i][p] = inner_i^p truncated at degree k
  std::vector<std::vector<Polynomial>> powers(inner.target);
  for (std::size_t i = 0; i < inner.target; ++i) {
    powers[i].push_back(Polynomial(r, 1));
    for (int p = 1; p <= k; ++p) powers[i].push_back(truncate(powers[i].back() * inner.components[i], k));
  }
  Jet out{inner.source, outer.target, k, {}};
  for (const auto& comp : outer.components) {
    Polynomial acc(r);
    for (const auto& [e, c] : comp.terms()) {
      Polynomial term(r, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) term = truncate(term * powers[i][e[i]], k);
      acc += term;
    }
    out.components.push_back(std::move(acc));
  }
  return out;
}

std::vector<Rational> CurveJet::column(int i) const {
  std::vector<Rational> out;
  for (const auto& row : v) out.push_back(row.at(static_cast<std::size_t>(i - 1)));
  return out;
}

bool CurveJet::regular() const {
  if (order() < 1) return false;
  return std::any_of(v.begin(), v.end(), [](const std::vector<Rational>& row) { return sgn(row[0]) != 0; });
}

Jet CurveJet::as_jet() const {
  RingPtr r = x_ring(1);
  std::vector<Polynomial> comps;
  for (const auto& row : v) {
    Polynomial p(r);
    for (std::size_t i = 0; i < row.size(); ++i) p.add_term(make_exponents({static_cast<int>(i) + 1}), row[i]);
    comps.push_back(std::move(p));
  }
  return Jet{1, v.size(), order(), std::move(comps)};
}

CurveJet CurveJet::from_jet(const Jet& jet) {
  if (jet.source != 1) throw std::invalid_argument("curve jet needs a one-dimensional source");
  CurveJet g;
  for (const auto& p : jet.components) {
    std::vector<Rational> row(static_cast<std::size_t>(jet.order), 0);
    for (int i = 1; i <= jet.order; ++i) row[i - 1] = p.coefficient(make_exponents({i}));
    g.v.push_back(std::move(row));
  }
  return g;
}

Matrix reparam_matrix(const std::vector<Rational>& alpha) {
  const std::size_t k = alpha.size();
  Matrix m(k, std::vector<Rational>(k, 0));
  // row i holds phi^{i+1}; phi^1 = alpha
  std::vector<Rational> power(k + 1, 0);
  power[0] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> next(k + 1, 0);
    for (std::size_t a = 0; a <= k; ++a) {
      if (sgn(power[a]) == 0) continue;
      for (std::size_t s = 1; a + s <= k; ++s) next[a + s] += power[a] * alpha[s - 1];
    }
    power = std::move(next);
    for (std::size_t j = 0; j < k; ++j) m[i][j] = power[j + 1];
  }
  return m;
}

Jet reparam_jet(const std::vector<Rational>& alpha) {
  CurveJet g{{alpha}};
  return g.as_jet();
}

CurveJet reparametrise(const CurveJet& gamma, const std::vector<Rational>& alpha) {
  if (static_cast<int>(alpha.size()) != gamma.order()) throw std::invalid_argument("reparametrise: order mismatch");
  return {matmul(gamma.v, reparam_matrix(alpha))};
}

std::vector<Rational> polarization(const Jet& psi, int s, const std::vector<std::vector<Rational>>& args) {
  if (static_cast<int>(args.size()) != s || s < 1) throw std::invalid_argument("polarization: need s vectors");
  std::vector<Rational> out(psi.target, 0);
  const std::size_t n = psi.source;
  // (1/s!) sum over subsets S of (-1)^{s-|S|} P_s(sum_{i in S} w_i)
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    std::vector<Rational> w(n, 0);
    int size = 0;
    for (int i = 0; i < s; ++i)
      if (mask & (1u << i)) {
        ++size;
        for (std::size_t t = 0; t < n; ++t) w[t] += args[i][t];
      }
    auto val = psi.part(s, w);
    const bool negative = (s - size) % 2;
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += negative ? -val[r] : val[r];
  }
  Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned long>(s)));
  for (auto& x : out) x *= inv;
  return out;
}

std::vector<std::vector<Rational>> test_curve_residual(const Jet& psi, const CurveJet& gamma) {
  if (psi.source != gamma.dim()) throw std::invalid_argument("test_curve_residual: dimension mismatch");
  if (psi.order != gamma.order()) throw std::invalid_argument("test_curve_residual: order mismatch");
  const int k = psi.order;
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(k), std::vector<Rational>(psi.target, 0));
  std::vector<int> tau;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      std::vector<std::vector<Rational>> args;
      int m = 0;
      for (int t : tau) {
        args.push_back(gamma.column(t));
        m += t;
      }
      auto val = polarization(psi, static_cast<int>(tau.size()), args);
      for (std::size_t r = 0; r < val.size(); ++r) out[m - 1][r] += val[r];
      return;
    }
    for (int t = 1; t <= left; ++t) {
      tau.push_back(t);
      rec(left - t);
      tau.pop_back();
    }
  };
  for (int m = 1; m <= k; ++m) rec(m);
  return out;
}

FlagData curve_flag_data(const CurveJet& gamma) {
  if (!gamma.regular()) throw std::invalid_argument("curve_flag_data: v_1 = 0");
  const std::size_t n = gamma.dim();
  const int k = gamma.order();
  RingPtr r = x_ring(n);
  RingPtr tr = make_ring([&] {
    auto s = r->symbols();
    s.push_back({"t", 1, k + 1});
    return s;
  }());
  // gamma(t) as a linear form in x with t-coefficients
  Polynomial g(tr);
  for (int i = 1; i <= k; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      Exponents e(n + 1, 0);
      e[a] = 1;
      e[n] = i;
      g.add_term(e, gamma.v[a][static_cast<std::size_t>(i - 1)]);
    }
  Polynomial total(tr), power(tr, 1);
  for (int s = 1; s <= k; ++s) {
    power = power * g;
    total += power;
  }

  FlagData out;
  std::function<void(std::size_t, int, Exponents&)> rec = [&](std::size_t pos, int left, Exponents& e) {
    if (pos == n) {
      if (left == 0) out.basis.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      rec(pos + 1, left - v, e);
    }
    e[pos] = 0;
  };
  for (int d = 1; d <= k; ++d) {
    Exponents e(n, 0);
    rec(0, d, e);
  }
  std::sort(out.basis.begin(), out.basis.end(), [](const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  std::map<Exponents, std::size_t> column;
  for (std::size_t c = 0; c < out.basis.size(); ++c) column.emplace(out.basis[c], c);

  out.rows.assign(static_cast<std::size_t>(k), std::vector<Rational>(out.basis.size(), 0));
  for (const auto& [e, c] : total.terms()) {
    int i = e[n];
    if (i < 1 || i > k) continue;
    Exponents x(e.begin(), e.begin() + static_cast<long>(n));
    out.rows[i - 1][column.at(x)] += c;
  }

  const std::size_t d = out.basis.size();
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  std::function<void(std::size_t, std::size_t)> minors = [&](std::size_t pos, std::size_t from) {
    if (pos == pick.size()) {
      Matrix m(pick.size(), std::vector<Rational>(pick.size()));
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = 0; j < pick.size(); ++j) m[i][j] = out.rows[i][pick[j]];
      out.plucker.push_back(determinant(std::move(m)));
      return;
    }
    for (std::size_t c = from; c + (pick.size() - pos) <= d; ++c) {
      pick[pos] = c;
      minors(pos + 1, c + 1);
    }
  };
  minors(0, 0);
  return out;
}

}  // namespace itres
