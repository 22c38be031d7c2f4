#pragma once

#include <itres/exponents.hpp>
#include <itres/rational.hpp>
#include <itres/ring.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace itres {

// Sparse polynomial over Q in the graded symbols of a ring.
// Terms above a symbol's nilpotency are dropped on insertion.
class Polynomial {
 public:
  using Terms = std::unordered_map<Exponents, Rational, ExponentsHash>;
  using Term = std::pair<Exponents, Rational>;

  Polynomial();
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, const Rational& constant);

  static Polynomial symbol(RingPtr ring, std::string_view name, int power = 1);
  static Polynomial monomial(RingPtr ring, const Exponents& e, const Rational& c);
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  // Canonical order: weighted degree descending, then exponents lex-descending.
  std::vector<Term> sorted_terms() const;
  std::string to_string() const;

  int weighted_degree(const Exponents& e) const;
  std::optional<int> homogeneous_degree() const;  // nullopt for zero or mixed degree
  int degree_in(std::size_t symbol) const;         // -1 for zero
  int total_degree() const;                        // plain exponent sum, -1 for zero

  // Coefficient of symbol^power, as a polynomial with that exponent removed.
  Polynomial coefficient_of(std::size_t symbol, int power) const;
  Polynomial substitute(std::size_t symbol, const Polynomial& value) const;
  Rational evaluate(const std::vector<Rational>& values) const;
  Polynomial pow(unsigned exponent) const;
  // Re-express over another ring by symbol name; unused symbols may be missing.
  Polynomial in_ring(RingPtr target) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const;

 private:
  void require_same_ring(const Polynomial& other) const;
  bool exceeds_nilpotency(const Exponents& e) const;

  RingPtr ring_;
  Terms terms_;
};

// Canonical term comparison shared with LaurentSeries output.
bool canonical_less(const Ring& ring, const Exponents& a, const Exponents& b);

}  // namespace itres
