#include <itres/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace itres {

bool canonical_less(const Ring& ring, const Exponents& a, const Exponents& b) {
  // "less" = earlier in output, i.e. larger weighted degree first, then lex-descending.
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int w = i < ring.size() ? ring[i].degree : 1;
    da += w * a[i];
    db += w * b[i];
  }
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial() : ring_(empty_ring()) {}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : Polynomial(std::move(ring)) {
  add_term(Exponents(ring_->size(), 0), constant);
}

Polynomial Polynomial::symbol(RingPtr ring, std::string_view name, int power) {
  Exponents e(ring->size(), 0);
  e[ring->index(name)] = power;
  Polynomial p(std::move(ring));
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Exponents& e, const Rational& c) {
  Polynomial p(std::move(ring));
  p.add_term(e, c);
  return p;
}

bool Polynomial::exceeds_nilpotency(const Exponents& e) const {
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& n = (*ring_)[i].nilpotency;
    if (n && e[i] >= *n) return true;
  }
  return false;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != ring_->size()) throw std::invalid_argument("exponent length does not match ring");
  if (sgn(c) == 0 || exceeds_nilpotency(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int v : terms_.begin()->first)
    if (v) return false;
  return true;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Polynomial::Term> Polynomial::sorted_terms() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  const Ring& r = *ring_;
  std::sort(out.begin(), out.end(), [&r](const Term& a, const Term& b) { return canonical_less(r, a.first, b.first); });
  return out;
}

namespace {

std::string monomial_text(const Ring& ring, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    s += ring[i].name;
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    std::string mono = monomial_text(*ring_, e);
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mono.empty() || a != 1) out += itres::to_string(a);
    out += mono;
    first = false;
  }
  return out;
}

int Polynomial::weighted_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += (*ring_)[i].degree * e[i];
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = weighted_degree(e);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

int Polynomial::degree_in(std::size_t symbol) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[symbol]);
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exponent_sum(e));
  return d;
}

Polynomial Polynomial::coefficient_of(std::size_t symbol, int power) const {
  Polynomial out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[symbol] != power) continue;
    Exponents f = e;
    f[symbol] = 0;
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t symbol, const Polynomial& value) const {
  require_same_ring(value);
  Polynomial out(ring_);
  std::vector<Polynomial> powers{Polynomial(ring_, 1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[symbol]) powers.push_back(powers.back() * value);
    Exponents f = e;
    f[symbol] = 0;
    out += monomial(ring_, f, c) * powers[e[symbol]];
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  if (values.size() != ring_->size()) throw std::invalid_argument("evaluate: value count mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= itres::pow(values[i], static_cast<unsigned long>(e[i]));
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(ring_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  std::vector<int> map(ring_->size(), -1);
  for (std::size_t i = 0; i < ring_->size(); ++i)
    if (auto j = target->find((*ring_)[i].name)) map[i] = static_cast<int>(*j);
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (map[i] < 0) throw std::invalid_argument("symbol '" + (*ring_)[i].name + "' missing from target ring");
      f[map[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) throw std::invalid_argument("polynomials over different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.ring_);
  Exponents e(a.ring_->size(), 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(ring_ == other.ring_ || *ring_ == *other.ring_)) return false;
  return terms_ == other.terms_;
}

// Grammar: term (('+'|'-') term)*, term = [number] factor*, factor = name ['^' int], '*' optional.
Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  Polynomial out(ring);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_uint = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;

    Rational coeff = 1;
    bool have_any = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_uint();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den = read_uint();
        if (den.empty()) fail("missing denominator");
        coeff = parse_rational(num + "/" + den);
      } else {
        coeff = Rational(Integer(num, 10));
      }
      have_any = true;
    }
    Exponents e(ring->size(), 0);
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
      std::size_t best = 0, best_len = 0;
      for (std::size_t i = 0; i < ring->size(); ++i) {
        const auto& name = (*ring)[i].name;
        if (name.size() > best_len && text.substr(pos, name.size()) == name) {
          best = i;
          best_len = name.size();
        }
      }
      if (!best_len) break;
      pos += best_len;
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::string p = read_uint();
        if (p.empty()) fail("missing exponent");
        power = std::stoi(p);
      }
      e[best] += power;
      have_any = true;
    }
    if (!have_any) fail("unexpected character at offset " + std::to_string(pos));
    out.add_term(e, sign * coeff);
  }
  return out;
}

}  // namespace itres
