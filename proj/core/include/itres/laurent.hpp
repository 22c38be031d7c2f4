#pragma once

#include <itres/polynomial.hpp>

#include <climits>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace itres {

inline constexpr int kNoLowerBound = INT_MIN;
inline constexpr int kNoUpperBound = INT_MAX;

// Per-variable inclusive exponent bounds. Unbounded sides mean the series is exact there.
struct Window {
  std::vector<int> lo;
  std::vector<int> hi;

  static Window unbounded(std::size_t k);
  static Window box(std::size_t k, int lo, int hi);

  std::size_t size() const { return lo.size(); }
  bool contains(const int* z) const;
  Window enlarged(int margin) const;
  Window intersect(const Window& other) const;
  bool operator==(const Window&) const = default;
};

class TruncationOverflow : public std::runtime_error {
 public:
  TruncationOverflow(const std::string& what, std::size_t variable, int required_lo)
      : std::runtime_error(what), variable_(variable), required_lo_(required_lo) {}
  std::size_t variable() const { return variable_; }
  int required_lo() const { return required_lo_; }

 private:
  std::size_t variable_;
  int required_lo_;
};

// Laurent series in z_1..z_k with coefficients in a symbol ring, expanded in the
// domain |z_1| << ... << |z_k|. Keys are the k z-exponents followed by the symbol exponents.
class LaurentSeries {
 public:
  using Terms = std::unordered_map<Exponents, Rational, ExponentsHash>;
  using Term = std::pair<Exponents, Rational>;

  LaurentSeries(std::size_t k, RingPtr ring);
  LaurentSeries(std::size_t k, RingPtr ring, Window window);

  // p lives over z_ring(k, ring->symbols()); z exponents must be nonnegative there.
  static LaurentSeries from_polynomial(std::size_t k, const Polynomial& p, RingPtr ring);
  // p lives over `ring`; the result is p * z^shift.
  static LaurentSeries from_coefficient(std::size_t k, const Polynomial& p, const Exponents& shift);

  std::size_t k() const { return k_; }
  const RingPtr& ring() const { return ring_; }
  const Window& window() const { return window_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Drops terms outside the window and above nilpotency.
  void add(const Exponents& key, const Rational& c);
  void add(const Exponents& z, const Exponents& sym, const Rational& c);

  Polynomial coefficient(const Exponents& z) const;
  int max_exponent(std::size_t var) const;  // INT_MIN when empty
  int min_exponent(std::size_t var) const;  // INT_MAX when empty
  int top_variable() const;                 // highest z with a nonzero exponent, -1 if none

  LaurentSeries truncated(const Window& w) const;
  LaurentSeries shifted(const Exponents& z) const;
  std::vector<Term> sorted_terms() const;
  std::string to_string() const;

  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator*=(const Rational& s);
  bool operator==(const LaurentSeries& other) const;

 private:
  friend LaurentSeries multiply(const LaurentSeries&, const LaurentSeries&, const Window&);
  bool drops(const Exponents& key) const;

  std::size_t k_;
  RingPtr ring_;
  Window window_;
  Terms terms_;
};

// Product restricted to `window` (the result's window).
LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b, const Window& window);
LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b);

// a^0 + a^1 z_1 + ... + a^k z_k with a^0 a z-free polynomial.
struct LinearForm {
  Polynomial constant;
  std::vector<Rational> z;

  LinearForm(Polynomial c, std::vector<Rational> coeffs)
      : constant(std::move(c)), z(std::move(coeffs)) {}
  std::size_t k() const { return z.size(); }
  int leading() const;  // max index with nonzero coefficient, -1 if none
  Polynomial as_polynomial(const RingPtr& zring) const;  // over z_ring(k, constant ring)
};

// The geometric expansion in the leading variable, restricted to window.
LaurentSeries expand_inverse_linear(const LinearForm& form, const Window& window);

}  // namespace itres
