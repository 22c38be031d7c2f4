#pragma once

#include <itres/residue.hpp>
#include <itres/thom.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace itres {

// 1/(n^3 (n+1))
Rational default_delta(int n);

// Coefficient ring of the GGL residues: h (nilpotent of order n+1), d and delta of degree 0.
RingPtr ggl_ring(int n);

// I_{n,delta,d}(z, h) over z_ring(n, ggl_ring(n)->symbols()); delta and d stay symbolic.
Polynomial ggl_integrand(int n);

// Coefficient of z^i in Q V (z_1+...+z_n)^{n^2 + sum i} / (prod factors (z_1...z_n)^n).
struct RhoValue {
  Exponents i;
  Integer value;
  bool degree_flagged = false;  // n^2 + sum i < 0, zero by homogeneity
};

RhoValue rho_coefficient(const Exponents& i, int n, const Polynomial& q, const ResidueOptions& options = {});
std::map<Exponents, Integer> rho_coefficients(const std::vector<Exponents>& targets, int n, const Polynomial& q,
                                              const ResidueOptions& options = {});
// Sum over i >= 0 with sum n^2 of Tp_{n 1 - i} times the multinomial coefficient.
Integer rho0_generating(int n, const Polynomial& q, const ResidueOptions& options = {});

Integer b_coefficient(const Exponents& i, int n);
bool b_bound_holds(const Exponents& i, int n);

// p[l] is the coefficient of d^l, l = 0..deg.
struct DegreePolynomial {
  std::vector<Rational> p;
  int degree() const;
  Rational operator()(const Rational& d) const;
  std::string to_string() const;
};

// Coefficients are polynomials in delta over the ring {delta}.
struct SymbolicDegreePolynomial {
  std::vector<Polynomial> p;
  DegreePolynomial at(const Rational& delta) const;
  bool affine_in_delta() const;
};

SymbolicDegreePolynomial intersection_polynomial(int n, const Polynomial& q, const ResidueOptions& options = {});
DegreePolynomial degree_polynomial(int n, const Rational& delta, const Polynomial& q, const ResidueOptions& options = {});
// Numeric-d evaluation through its own residue computation.
Rational intersection_number(int n, const Rational& delta, const Rational& d, const Polynomial& q,
                             const ResidueOptions& options = {});

struct FujiwaraResult {
  Integer D;
  Integer d_star;  // least integer with p(d) > 0 for all integers d >= d_star
};

// Least D with |p_{N-l}| <= D^l p_N, then a downward scan from 2D to `floor`.
FujiwaraResult fujiwara_certify(const DegreePolynomial& p, const Integer& floor = 1);

struct GGLCertificate {
  int n = 0;
  Rational delta;
  DegreePolynomial poly;
  Integer rho0;
  bool leading_identity = false;
  bool ineq_10l = false;
  FujiwaraResult fujiwara;
  bool pass() const;
};

GGLCertificate ggl_certify(int n, const Rational& delta, const Polynomial& q, const ResidueOptions& options = {});
GGLCertificate ggl_certify(int n, const SymbolicDegreePolynomial& sym, const Rational& delta, const Integer& rho0);

// P over the ring {u, h}; returns the degree-n class over {s_1..s_n, h}, carrying the
// sign of the localisation formula with weight factors prod (lambda_i - z_l).
RingPtr segre_ring(int n);
Polynomial tautological_integrand(const Polynomial& p, int n, int k, const Polynomial& q,
                                  const ResidueOptions& options = {});
// Substitutes the hypersurface Segre classes and integrates (h^n -> d).
Rational hypersurface_integral(const Polynomial& cls, int n, const Rational& d);
// I_{n,delta,d}(u, h) over {u, h} for numeric delta and d.
Polynomial ggl_integrand_uh(int n, const Rational& delta, const Rational& d);

struct A1Check {
  Exponents a, b;
  Integer rho;
  Rational dh_direct, dh_closed;      // coefficient of d h^M
  Rational plain_direct, plain_closed; // coefficient of h^M without d
  std::optional<Rational> c;          // C_{a,b} at the sample degree, when defined
  bool closed_ok() const { return dh_direct == dh_closed && plain_direct == plain_closed; }
};

struct RhoSumCheck {
  int r = 0, m = 0;
  Integer sum;
  Integer bound;
  bool pass = false;
};

struct InequalityReport {
  int n = 0;
  Rational delta;
  Integer sample_d;
  std::vector<A1Check> a1;
  bool closed_forms = false;      // (a)
  bool bracket = false;           // (b)
  Rational c_min, c_max;          // over pairs with rho != 0
  Integer bracket_threshold;      // least d for which every C lies in the bracket
  std::vector<RhoSumCheck> rho_sums;
  bool rho_sums_pass = false;     // (c)
  std::vector<bool> ineq;         // (d), index l - 1
  bool ineq_pass = false;
};

// sample_d defaults to 2 n^5 + 1, the worst case of the bracket test.
InequalityReport inequality_suite(int n, const Polynomial& q, const DegreePolynomial& poly,
                                  std::optional<Integer> sample_d = std::nullopt, const ResidueOptions& options = {});

}  // namespace itres
