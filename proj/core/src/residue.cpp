#include <itres/residue.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace itres {

namespace {

using Terms = LaurentSeries::Terms;

void accumulate(Terms& terms, const Exponents& key, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) it->second += c;
}

void drop_zeros(Terms& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (sgn(it->second) == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

struct Layout {
  std::size_t k;
  std::size_t width;
  std::vector<int> nilpotency;  // per symbol, INT_MAX when none

  bool nilpotent_zero(const Exponents& key) const {
    for (std::size_t i = 0; i < nilpotency.size(); ++i)
      if (key[k + i] >= nilpotency[i]) return true;
    return false;
  }
};

Terms multiply_terms(const Terms& a, const Terms& b, const Layout& layout) {
  Terms out;
  out.reserve(a.size() * std::max<std::size_t>(1, b.size() / 2));
  Exponents key(layout.width, 0);
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      for (std::size_t i = 0; i < layout.width; ++i) key[i] = ka[i] + kb[i];
      if (layout.nilpotent_zero(key)) continue;
      accumulate(out, key, ca * cb);
    }
  }
  drop_zeros(out);
  return out;
}

std::vector<int> suffix_of(const Exponents& key, std::size_t q, std::size_t k) {
  return std::vector<int>(key.begin() + static_cast<long>(q) + 1, key.begin() + static_cast<long>(k));
}

bool exact_outside(const Window& w, std::size_t q) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.hi[i] != kNoUpperBound) return false;
    if (i != q && w.lo[i] != kNoLowerBound) return false;
  }
  return true;
}

std::map<Exponents, Polynomial> extract_once(const LaurentSeries& numerator, const std::vector<LinearForm>& factors,
                                             const std::vector<LaurentSeries>& extras,
                                             const std::vector<Exponents>& targets, int margin) {
  const std::size_t k = numerator.k();
  const RingPtr& ring = numerator.ring();
  Layout layout{k, k + ring->size(), {}};
  for (const auto& s : ring->symbols()) layout.nilpotency.push_back(s.nilpotency ? *s.nilpotency : INT_MAX);

  std::vector<std::vector<const LinearForm*>> led(k);
  for (const auto& f : factors) {
    if (f.k() != k) throw std::invalid_argument("iterated residue: factor variable count mismatch");
    if (!(*f.constant.ring() == *ring)) throw std::invalid_argument("iterated residue: factor constant ring mismatch");
    int q = f.leading();
    if (q < 0) throw std::invalid_argument("iterated residue: factor without z-coefficient");
    led[q].push_back(&f);
  }
  std::vector<std::vector<const LaurentSeries*>> staged(k);
  std::vector<const LaurentSeries*> scalar_extras;
  for (const auto& e : extras) {
    if (e.k() != k || !(*e.ring() == *ring)) throw std::invalid_argument("iterated residue: extra series layout mismatch");
    int top = e.top_variable();
    if (top < 0) {
      scalar_extras.push_back(&e);
      continue;
    }
    if (!exact_outside(e.window(), static_cast<std::size_t>(top)))
      throw std::invalid_argument("iterated residue: extra series may only be truncated below in its top variable");
    staged[top].push_back(&e);
  }

  std::set<Exponents> target_set;
  for (const auto& t : targets) {
    if (t.size() != k) throw std::invalid_argument("iterated residue: target length mismatch");
    target_set.insert(t);
  }
  // allowed[q][suffix after q] = admissible values of the z_q exponent
  std::vector<std::map<std::vector<int>, std::vector<int>>> allowed(k);
  for (const auto& t : target_set)
    for (std::size_t q = 0; q < k; ++q) allowed[q][suffix_of(t, q, k)].push_back(t[q]);
  for (auto& level : allowed)
    for (auto& [suffix, values] : level) {
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
    }

  Terms cur = numerator.terms();
  for (std::size_t qq = k; qq-- > 0;) {
    const std::size_t q = qq;
    const int n_q = static_cast<int>(led[q].size());

    if (!staged[q].empty() && !cur.empty()) {
      int emax = INT_MIN;
      for (const auto& [key, c] : cur) emax = std::max(emax, key[q]);
      int tmin = INT_MAX;
      for (const auto& [suffix, values] : allowed[q]) tmin = std::min(tmin, values.front());
      long top_sum = 0;
      for (const auto* e : staged[q]) top_sum += e->max_exponent(q);
      for (const auto* e : staged[q]) {
        long needed = static_cast<long>(tmin) + n_q - emax - (top_sum - e->max_exponent(q));
        if (e->window().lo[q] != kNoLowerBound && e->window().lo[q] > needed)
          throw TruncationOverflow("iterated residue: extra series truncated too early in z_" + std::to_string(q + 1), q,
                                   static_cast<int>(std::max<long>(needed, INT_MIN + 1)));
      }
      for (const auto* e : staged[q]) cur = multiply_terms(cur, e->terms(), layout);
    }

    if (n_q == 0) {
      for (auto it = cur.begin(); it != cur.end();) {
        auto found = allowed[q].find(suffix_of(it->first, q, k));
        bool keep = found != allowed[q].end() &&
                    std::binary_search(found->second.begin(), found->second.end(), it->first[q]);
        it = keep ? std::next(it) : cur.erase(it);
      }
      continue;
    }

    // Depth of the geometric expansion: only s = e_q - t_q with s >= n_q can contribute.
    int s_max = INT_MIN;
    for (const auto& [key, c] : cur) {
      auto found = allowed[q].find(suffix_of(key, q, k));
      if (found == allowed[q].end()) continue;
      s_max = std::max(s_max, key[q] - found->second.front());
    }
    if (s_max == INT_MIN || s_max + margin < n_q) {
      cur.clear();
      break;
    }
    s_max += margin;

    Window wide = Window::unbounded(k);
    wide.lo[q] = -(s_max - n_q + 1);
    wide.hi[q] = -1;
    Window product_window = Window::unbounded(k);
    product_window.lo[q] = -s_max;
    LaurentSeries prod = expand_inverse_linear(*led[q][0], wide);
    for (int i = 1; i < n_q; ++i) prod = multiply(prod, expand_inverse_linear(*led[q][i], wide), product_window);

    std::vector<std::vector<std::pair<Exponents, Rational>>> r(static_cast<std::size_t>(s_max - n_q + 1));
    for (const auto& [key, c] : prod.terms()) {
      int s = -key[q];
      if (s < n_q || s > s_max) continue;
      Exponents lower = key;
      lower[q] = 0;
      r[static_cast<std::size_t>(s - n_q)].emplace_back(std::move(lower), c);
    }

    Terms next;
    next.reserve(cur.size() * 4);
    Exponents nk(layout.width, 0);
    for (const auto& [key, c] : cur) {
      auto found = allowed[q].find(suffix_of(key, q, k));
      if (found == allowed[q].end()) continue;
      for (int t : found->second) {
        int s = key[q] - t;
        if (s < n_q || s > s_max) continue;
        for (const auto& [rk, rc] : r[static_cast<std::size_t>(s - n_q)]) {
          for (std::size_t i = 0; i < layout.width; ++i) nk[i] = key[i] + rk[i];
          nk[q] = t;
          if (layout.nilpotent_zero(nk)) continue;
          accumulate(next, nk, c * rc);
        }
      }
    }
    drop_zeros(next);
    cur = std::move(next);
  }

  for (const auto* e : scalar_extras) cur = multiply_terms(cur, e->terms(), layout);

  std::map<Exponents, Polynomial> out;
  for (const auto& t : target_set) out.emplace(t, Polynomial(ring));
  for (const auto& [key, c] : cur) {
    Exponents z(key.begin(), key.begin() + static_cast<long>(k));
    auto it = out.find(z);
    if (it == out.end()) continue;
    it->second.add_term(Exponents(key.begin() + static_cast<long>(k), key.end()), c);
  }
  return out;
}

}  // namespace

std::map<Exponents, Polynomial> extract_coefficients(const LaurentSeries& numerator,
                                                     const std::vector<LinearForm>& factors,
                                                     const std::vector<LaurentSeries>& extras,
                                                     const std::vector<Exponents>& targets,
                                                     const ResidueOptions& options) {
  auto result = extract_once(numerator, factors, extras, targets, options.margin);
  if (options.self_check) {
    auto wider = extract_once(numerator, factors, extras, targets, options.margin + 2);
    if (wider != result) throw StabilityFailure("iterated residue changed when the expansion depth grew by 2");
  }
  return result;
}

Polynomial iterated_residue(const LaurentSeries& numerator, const std::vector<LinearForm>& factors,
                            const std::vector<LaurentSeries>& extras, const ResidueOptions& options) {
  const std::size_t k = numerator.k();
  Exponents target(k, -1);
  auto result = extract_coefficients(numerator, factors, extras, {target}, options);
  Polynomial p = result.at(target);
  if (k % 2) p = -p;
  return p;
}

}  // namespace itres
