#pragma once

#include <itres/polynomial.hpp>

#include <vector>

namespace itres {

using Matrix = std::vector<std::vector<Rational>>;

Matrix matmul(const Matrix& a, const Matrix& b);
// Bareiss elimination, exact.
Rational determinant(Matrix m);

// x_1..x_n of degree 1.
RingPtr x_ring(std::size_t n);

// A k-jet C^u -> C^v: v polynomials over x_ring(u) without constant term, truncated above degree k.
struct Jet {
  std::size_t source = 0;
  std::size_t target = 0;
  int order = 0;
  std::vector<Polynomial> components;

  static Jet zero(std::size_t u, std::size_t v, int k);
  static Jet identity(std::size_t u, int k);
  // Validates shapes, drops constants is an error, truncates above k.
  static Jet make(std::size_t u, int k, std::vector<Polynomial> components);

  // Degree-j homogeneous part of every component evaluated at w.
  std::vector<Rational> part(int j, const std::vector<Rational>& w) const;
  bool is_zero() const;
  bool operator==(const Jet& other) const;
};

Jet compose_jets(const Jet& outer, const Jet& inner);

// Columns v_1..v_k of an n x k matrix.
struct CurveJet {
  Matrix v;  // n rows, k columns

  std::size_t dim() const { return v.size(); }
  int order() const { return v.empty() ? 0 : static_cast<int>(v.front().size()); }
  std::vector<Rational> column(int i) const;  // 1-based
  bool regular() const;
  Jet as_jet() const;
  static CurveJet from_jet(const Jet& jet);
};

// (i, j) entry = [t^j] phi(t)^i for phi = alpha_1 t + ... + alpha_k t^k.
Matrix reparam_matrix(const std::vector<Rational>& alpha);
Jet reparam_jet(const std::vector<Rational>& alpha);
// gamma o phi, computed as V * reparam_matrix(phi).
CurveJet reparametrise(const CurveJet& gamma, const std::vector<Rational>& alpha);

// The symmetric s-linear form of the degree-s part of psi on the given vectors.
std::vector<Rational> polarization(const Jet& psi, int s, const std::vector<std::vector<Rational>>& args);
// Entry m (1-based) sums the s-linear forms over ordered compositions of m.
std::vector<std::vector<Rational>> test_curve_residual(const Jet& psi, const CurveJet& gamma);

struct FlagData {
  std::vector<Exponents> basis;  // monomials of degree 1..k in lex order
  Matrix rows;                   // k x basis.size()
  std::vector<Rational> plucker; // k x k minors, column sets in lex order
};

FlagData curve_flag_data(const CurveJet& gamma);

}  // namespace itres
