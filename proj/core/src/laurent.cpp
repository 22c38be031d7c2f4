#include <itres/laurent.hpp>

#include <algorithm>
#include <stdexcept>

namespace itres {

namespace {

int sat_add(int a, int m) {
  if (a == kNoLowerBound || a == kNoUpperBound) return a;
  long r = static_cast<long>(a) + m;
  if (r <= kNoLowerBound) return kNoLowerBound + 1;
  if (r >= kNoUpperBound) return kNoUpperBound - 1;
  return static_cast<int>(r);
}

}  // namespace

Window Window::unbounded(std::size_t k) {
  return {std::vector<int>(k, kNoLowerBound), std::vector<int>(k, kNoUpperBound)};
}

Window Window::box(std::size_t k, int lo, int hi) { return {std::vector<int>(k, lo), std::vector<int>(k, hi)}; }

bool Window::contains(const int* z) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (z[i] < lo[i] || z[i] > hi[i]) return false;
  return true;
}

Window Window::enlarged(int margin) const {
  Window w = *this;
  for (auto& v : w.lo) v = sat_add(v, -margin);
  for (auto& v : w.hi) v = sat_add(v, margin);
  return w;
}

Window Window::intersect(const Window& other) const {
  if (size() != other.size()) throw std::invalid_argument("window size mismatch");
  Window w = *this;
  for (std::size_t i = 0; i < size(); ++i) {
    w.lo[i] = std::max(lo[i], other.lo[i]);
    w.hi[i] = std::min(hi[i], other.hi[i]);
  }
  return w;
}

LaurentSeries::LaurentSeries(std::size_t k, RingPtr ring) : LaurentSeries(k, std::move(ring), Window::unbounded(k)) {}

LaurentSeries::LaurentSeries(std::size_t k, RingPtr ring, Window window)
    : k_(k), ring_(std::move(ring)), window_(std::move(window)) {
  if (!ring_) throw std::invalid_argument("null ring");
  if (window_.size() != k_) throw std::invalid_argument("window size does not match variable count");
}

LaurentSeries LaurentSeries::from_polynomial(std::size_t k, const Polynomial& p, RingPtr ring) {
  if (p.ring()->size() != k + ring->size()) throw std::invalid_argument("from_polynomial: ring layout mismatch");
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (!((*p.ring())[k + i] == (*ring)[i])) throw std::invalid_argument("from_polynomial: coefficient ring mismatch");
  LaurentSeries s(k, std::move(ring));
  for (const auto& [e, c] : p.terms()) s.add(e, c);
  return s;
}

LaurentSeries LaurentSeries::from_coefficient(std::size_t k, const Polynomial& p, const Exponents& shift) {
  if (shift.size() != k) throw std::invalid_argument("from_coefficient: shift length");
  LaurentSeries s(k, p.ring());
  for (const auto& [e, c] : p.terms()) s.add(shift, e, c);
  return s;
}

bool LaurentSeries::drops(const Exponents& key) const {
  if (key.size() != k_ + ring_->size()) throw std::invalid_argument("series key length mismatch");
  if (!window_.contains(key.data())) return true;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    const auto& n = (*ring_)[i].nilpotency;
    if (n && key[k_ + i] >= *n) return true;
  }
  return false;
}

void LaurentSeries::add(const Exponents& key, const Rational& c) {
  if (sgn(c) == 0 || drops(key)) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void LaurentSeries::add(const Exponents& z, const Exponents& sym, const Rational& c) {
  Exponents key(z.begin(), z.end());
  key.insert(key.end(), sym.begin(), sym.end());
  add(key, c);
}

Polynomial LaurentSeries::coefficient(const Exponents& z) const {
  Polynomial p(ring_);
  for (const auto& [key, c] : terms_) {
    if (!std::equal(z.begin(), z.end(), key.begin())) continue;
    p.add_term(Exponents(key.begin() + static_cast<long>(k_), key.end()), c);
  }
  return p;
}

int LaurentSeries::max_exponent(std::size_t var) const {
  int m = INT_MIN;
  for (const auto& [key, c] : terms_) m = std::max(m, key[var]);
  return m;
}

int LaurentSeries::min_exponent(std::size_t var) const {
  int m = INT_MAX;
  for (const auto& [key, c] : terms_) m = std::min(m, key[var]);
  return m;
}

int LaurentSeries::top_variable() const {
  int top = -1;
  for (const auto& [key, c] : terms_)
    for (int v = static_cast<int>(k_) - 1; v > top; --v)
      if (key[v]) {
        top = v;
        break;
      }
  return top;
}

LaurentSeries LaurentSeries::truncated(const Window& w) const {
  LaurentSeries s(k_, ring_, window_.intersect(w));
  for (const auto& [key, c] : terms_) s.add(key, c);
  return s;
}

LaurentSeries LaurentSeries::shifted(const Exponents& z) const {
  Window w = window_;
  for (std::size_t i = 0; i < k_; ++i) {
    w.lo[i] = w.lo[i] == kNoLowerBound ? w.lo[i] : w.lo[i] + z[i];
    w.hi[i] = w.hi[i] == kNoUpperBound ? w.hi[i] : w.hi[i] + z[i];
  }
  LaurentSeries s(k_, ring_, w);
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    for (std::size_t i = 0; i < k_; ++i) e[i] += z[i];
    s.add(e, c);
  }
  return s;
}

std::vector<LaurentSeries::Term> LaurentSeries::sorted_terms() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  // z-part lex-descending, then the coefficient ring's canonical order.
  const Ring& r = *ring_;
  const std::size_t k = k_;
  std::sort(out.begin(), out.end(), [&r, k](const Term& a, const Term& b) {
    for (std::size_t i = 0; i < k; ++i)
      if (a.first[i] != b.first[i]) return a.first[i] > b.first[i];
    Exponents sa(a.first.begin() + static_cast<long>(k), a.first.end());
    Exponents sb(b.first.begin() + static_cast<long>(k), b.first.end());
    return canonical_less(r, sa, sb);
  });
  return out;
}

std::string LaurentSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : sorted_terms()) {
    if (!first) out += " + ";
    first = false;
    Polynomial coeff = Polynomial::monomial(ring_, Exponents(key.begin() + static_cast<long>(k_), key.end()), c);
    out += "(" + coeff.to_string() + ")";
    for (std::size_t i = 0; i < k_; ++i)
      if (key[i]) out += "z_" + std::to_string(i + 1) + "^" + std::to_string(key[i]);
  }
  return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  if (other.k_ != k_ || !(*other.ring_ == *ring_)) throw std::invalid_argument("series layout mismatch");
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

bool LaurentSeries::operator==(const LaurentSeries& other) const {
  return k_ == other.k_ && *ring_ == *other.ring_ && terms_ == other.terms_;
}

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b, const Window& window) {
  if (a.k_ != b.k_ || !(*a.ring_ == *b.ring_)) throw std::invalid_argument("series layout mismatch");
  LaurentSeries out(a.k_, a.ring_, window);
  Exponents key(a.k_ + a.ring_->size(), 0);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
      out.add(key, ca * cb);
    }
  }
  return out;
}

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
  return multiply(a, b, Window::unbounded(a.k()));
}

int LinearForm::leading() const {
  for (int i = static_cast<int>(z.size()) - 1; i >= 0; --i)
    if (sgn(z[i]) != 0) return i;
  return -1;
}

Polynomial LinearForm::as_polynomial(const RingPtr& zring) const {
  const std::size_t k = z.size();
  Polynomial p(zring);
  for (const auto& [e, c] : constant.terms()) {
    Exponents f(k, 0);
    f.insert(f.end(), e.begin(), e.end());
    p.add_term(f, c);
  }
  for (std::size_t i = 0; i < k; ++i) {
    Exponents f(zring->size(), 0);
    f[i] = 1;
    p.add_term(f, z[i]);
  }
  return p;
}

LaurentSeries expand_inverse_linear(const LinearForm& form, const Window& window) {
  const std::size_t k = form.k();
  const int q = form.leading();
  if (q < 0) throw std::invalid_argument("expand_inverse_linear: linear form has no z-coefficient");
  if (window.size() != k) throw std::invalid_argument("expand_inverse_linear: window size mismatch");
  RingPtr ring = form.constant.ring();

  // The leading term z_q^{-1}/a_q must fit; all other variables start at exponent 0.
  for (std::size_t i = 0; i < k; ++i) {
    int need = static_cast<int>(i) == q ? -1 : 0;
    if (window.lo[i] > need || window.hi[i] < need)
      throw TruncationOverflow("expand_inverse_linear: window cannot hold the leading term", i,
                               static_cast<int>(i) == q ? -1 : 0);
  }

  // rest = a^0 + a^1 z_1 + ... + a^{q-1} z_{q-1}
  LaurentSeries rest(k, ring);
  for (const auto& [e, c] : form.constant.terms()) rest.add(Exponents(k, 0), e, c);
  for (int i = 0; i < q; ++i) {
    Exponents z(k, 0);
    z[i] = 1;
    rest.add(z, Exponents(ring->size(), 0), form.z[i]);
  }

  const Rational lead = form.z[q];
  LaurentSeries out(k, ring, window);
  Exponents zq(k, 0);
  zq[q] = -1;
  LaurentSeries term = LaurentSeries::from_coefficient(k, Polynomial(ring, 1 / lead), zq);
  // term_j = (-rest)^j / (a_q z_q)^{j+1}
  LaurentSeries step = rest;
  step *= -1 / lead;
  step = step.shifted(zq);
  Window inner = window;
  while (!term.is_zero()) {
    out += term;
    if (rest.is_zero()) break;
    if (window.lo[q] == kNoLowerBound)
      throw TruncationOverflow("expand_inverse_linear: infinite expansion needs a lower bound", q, kNoLowerBound);
    term = multiply(term, step, inner);
  }
  return out;
}

}  // namespace itres
