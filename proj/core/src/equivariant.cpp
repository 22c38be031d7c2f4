#include <itres/equivariant.hpp>
#include <itres/residue.hpp>
#include <itres/thom.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace itres {

RingPtr lambda_ring(std::size_t r) {
  std::vector<Symbol> s;
  for (std::size_t i = 1; i <= r; ++i) s.push_back({"lambda_" + std::to_string(i), 1, std::nullopt});
  return make_ring(std::move(s));
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<std::vector<int>> generators) : n_(n) {
  if (generators.empty()) throw std::invalid_argument("monomial ideal: zero ideal");
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("monomial ideal: generator length differs from N");
    if (std::any_of(g.begin(), g.end(), [](int v) { return v < 0; }))
      throw std::invalid_argument("monomial ideal: negative exponent");
    if (std::all_of(g.begin(), g.end(), [](int v) { return v == 0; }))
      throw std::invalid_argument("monomial ideal: unit ideal");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  auto divides = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = i != j && divides(generators[j], generators[i]);
    if (!redundant) generators_.push_back(generators[i]);
  }
}

bool MonomialIdeal::contains(const std::vector<int>& exponent) const {
  for (const auto& g : generators_) {
    bool div = true;
    for (std::size_t i = 0; i < n_ && div; ++i) div = g[i] <= exponent[i];
    if (div) return true;
  }
  return false;
}

namespace {

void check_weights(std::size_t n, const std::vector<Polynomial>& eta) {
  if (eta.size() != n) throw std::invalid_argument("weight assignment length differs from N");
  for (std::size_t i = 1; i < eta.size(); ++i)
    if (!(*eta[i].ring() == *eta[0].ring())) throw std::invalid_argument("weights over different rings");
}

// Number of a on the coordinates `s` with no generator restricted to s dividing y^a.
Integer multiplicity(const MonomialIdeal& ideal, const std::vector<std::size_t>& s) {
  const auto& gens = ideal.generators();
  std::vector<int> bound(s.size(), 0);
  for (const auto& g : gens) {
    bool hits = false;
    for (std::size_t t = 0; t < s.size(); ++t) {
      bound[t] = std::max(bound[t], g[s[t]]);
      hits = hits || g[s[t]] > 0;
    }
    if (!hits) return 0;  // s misses a generator: not a component
  }
  auto excluded = [&](const std::vector<int>& a) {
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t t = 0; t < s.size() && div; ++t) div = g[s[t]] <= a[t];
      if (div) return true;
    }
    return false;
  };
  Integer count = 0;
  std::vector<int> a(s.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == s.size()) {
      if (!excluded(a)) ++count;
      return;
    }
    for (int v = 0; v <= bound[pos]; ++v) {
      a[pos] = v;
      bool on_boundary = v == bound[pos];
      if (on_boundary) {
        // every point with a coordinate at the bound must be excluded, else the count is infinite
        std::vector<int> probe = a;
        for (std::size_t t = pos + 1; t < s.size(); ++t) probe[t] = 0;
        if (!excluded(probe)) throw std::logic_error("mdeg: multiplicity box is not closed");
        continue;
      }
      rec(pos + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

Mdeg mdeg_monomial(const MonomialIdeal& ideal, const std::vector<Polynomial>& eta) {
  const std::size_t n = ideal.variables();
  check_weights(n, eta);
  Mdeg out;
  out.value = Polynomial(eta[0].ring());
  for (std::size_t size = 1; size <= n && out.components.empty(); ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i);
      Integer mult = multiplicity(ideal, s);
      if (mult == 0) continue;
      Polynomial term(eta[0].ring(), Rational(mult));
      for (std::size_t i : s) term = term * eta[i];
      out.value += term;
      out.components.push_back({s, mult});
      out.codim = size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

Polynomial mdeg_complete_intersection(const std::vector<Polynomial>& degrees, const RingPtr& ring) {
  Polynomial out(ring, 1);
  for (const auto& d : degrees) out = out * d;
  return out;
}

std::string Prop48Report::summary() const {
  std::string s = "deg_lambda_" + std::to_string(m + 1) + " mdeg = " + std::to_string(mdeg_degree) + ", bound " +
                  std::to_string(weight_count - 1);
  return s + (holds ? " -> holds" : " -> inequality not satisfied on this instance");
}

Prop48Report prop48_degree_report(const MonomialIdeal& ideal, const std::vector<Polynomial>& eta, std::size_t m) {
  Mdeg md = mdeg_monomial(ideal, eta);
  if (m >= md.value.ring()->size()) throw std::invalid_argument("weight index out of range");
  Prop48Report r;
  r.m = m;
  r.mdeg_degree = md.value.degree_in(m);
  for (const auto& e : eta)
    if (e.degree_in(m) > 0) ++r.weight_count;
  r.holds = r.mdeg_degree <= r.weight_count - 1;
  return r;
}

Rational fixed_point_term(const Polynomial& q, const std::vector<Rational>& lambda, const std::vector<std::size_t>& perm,
                          std::size_t k) {
  const std::size_t n = lambda.size();
  if (perm.size() != n || k > n) throw std::invalid_argument("fixed_point_term: bad permutation");
  std::vector<Rational> values(q.ring()->size(), 0);
  if (values.size() < k) throw std::invalid_argument("fixed_point_term: Q has too few variables");
  for (std::size_t m = 0; m < k; ++m) values[m] = lambda[perm[m]];
  Rational denom = 1;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = m + 1; i < n; ++i) denom *= lambda[perm[i]] - lambda[perm[m]];
  if (sgn(denom) == 0) throw std::domain_error("fixed_point_sum: weights must be pairwise distinct");
  return q.evaluate(values) / denom;
}

Rational fixed_point_sum(const Polynomial& q, const std::vector<Rational>& lambda, std::size_t k) {
  const std::size_t n = lambda.size();
  if (k > n) throw std::invalid_argument("fixed_point_sum: k exceeds n");
  Rational total = 0;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      std::size_t fill = k;
      for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) perm[fill++] = i;
      total += fixed_point_term(q, lambda, perm, k);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      perm[pos] = i;
      rec(pos + 1);
      used[i] = false;
    }
  };
  rec(0);
  return total;
}

Polynomial localisation_residue(const Polynomial& q, std::size_t n, std::size_t k, const ResidueOptions& options) {
  if (k == 0 || k > n) throw std::invalid_argument("localisation: need 1 <= k <= n");
  RingPtr lr = lambda_ring(n);
  RingPtr zr = z_ring(k, lr->symbols());
  Polynomial numerator = vandermonde(static_cast<int>(k), zr) * q.in_ring(zr);
  std::vector<LinearForm> factors;
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> a(k, 0);
      a[l] = -1;
      factors.emplace_back(Polynomial::symbol(lr, "lambda_" + std::to_string(i + 1)), std::move(a));
    }
  return iterated_residue(LaurentSeries::from_polynomial(k, numerator, lr), factors, {}, options);
}

OracleReport localisation_oracle(const Polynomial& q, std::size_t n, std::size_t k, const std::vector<Rational>& lambda,
                                 const ResidueOptions& options) {
  if (lambda.size() != n) throw std::invalid_argument("localisation_oracle: need n weights");
  OracleReport r;
  r.lambda = lambda;
  r.residue = localisation_residue(q, n, k, options);
  r.residue_value = r.residue.evaluate(lambda);
  r.sum = fixed_point_sum(q, lambda, k);
  r.equal = r.residue_value == r.sum;
  return r;
}

OracleReport localisation_oracle(const Polynomial& q, std::size_t n, std::size_t k, std::uint64_t seed,
                                 const ResidueOptions& options) {
  return localisation_oracle(q, n, k, random_weights(n, seed), options);
}

std::vector<Rational> random_weights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < n) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

Polynomial random_homogeneous(std::size_t k, int degree, std::uint64_t seed) {
  if (degree < 0) throw std::invalid_argument("random_homogeneous: negative degree");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5), var(0, static_cast<int>(k) - 1);
  RingPtr zr = z_ring(k);
  Polynomial out(zr);
  while (out.is_zero()) {
    for (int t = 0; t < 4; ++t) {
      Exponents e(k, 0);
      for (int d = 0; d < degree; ++d) ++e[var(rng)];
      out.add_term(e, coeff(rng));
    }
  }
  return out;
}

}  // namespace itres
