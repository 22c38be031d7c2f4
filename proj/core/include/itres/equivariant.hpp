#pragma once

#include <itres/polynomial.hpp>
#include <itres/residue.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace itres {

// lambda_1..lambda_r of degree 1.
RingPtr lambda_ring(std::size_t r);

class MonomialIdeal {
 public:
  // Generators are minimalized; throws on the zero ideal, the unit ideal or ragged input.
  MonomialIdeal(std::size_t n, std::vector<std::vector<int>> generators);

  std::size_t variables() const { return n_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }
  bool contains(const std::vector<int>& exponent) const;

 private:
  std::size_t n_;
  std::vector<std::vector<int>> generators_;
};

struct MdegComponent {
  std::vector<std::size_t> coordinates;  // 0-based i with y_i = 0 on the component
  Integer multiplicity;
};

struct Mdeg {
  std::size_t codim = 0;
  std::vector<MdegComponent> components;  // nonzero multiplicities only
  Polynomial value;
};

// eta[i] is the weight of y_i, a linear form over a lambda ring.
Mdeg mdeg_monomial(const MonomialIdeal& ideal, const std::vector<Polynomial>& eta);
Polynomial mdeg_complete_intersection(const std::vector<Polynomial>& degrees, const RingPtr& ring);

struct Prop48Report {
  std::size_t m = 0;      // 0-based weight index
  int mdeg_degree = 0;    // degree of mdeg in lambda_m, -1 for zero
  int weight_count = 0;   // number of eta_i involving lambda_m
  bool holds = false;     // mdeg_degree <= weight_count - 1
  std::string summary() const;
};

Prop48Report prop48_degree_report(const MonomialIdeal& ideal, const std::vector<Polynomial>& eta, std::size_t m);

// One localisation summand for a full permutation of 1..n (0-based entries).
Rational fixed_point_term(const Polynomial& q, const std::vector<Rational>& lambda, const std::vector<std::size_t>& perm,
                          std::size_t k);
// Sum over ordered k-subsets, each completed by the unused indices in increasing order.
Rational fixed_point_sum(const Polynomial& q, const std::vector<Rational>& lambda, std::size_t k);

// The residue side with symbolic weights: a polynomial over lambda_ring(n).
Polynomial localisation_residue(const Polynomial& q, std::size_t n, std::size_t k, const ResidueOptions& options = {});

struct OracleReport {
  std::vector<Rational> lambda;
  Polynomial residue;       // symbolic
  Rational residue_value;   // residue at lambda
  Rational sum;             // fixed-point side
  bool equal = false;
};

OracleReport localisation_oracle(const Polynomial& q, std::size_t n, std::size_t k, const std::vector<Rational>& lambda,
                                 const ResidueOptions& options = {});
OracleReport localisation_oracle(const Polynomial& q, std::size_t n, std::size_t k, std::uint64_t seed,
                                 const ResidueOptions& options = {});

// n pairwise distinct rationals with small numerators and denominators.
std::vector<Rational> random_weights(std::size_t n, std::uint64_t seed);
// Random homogeneous polynomial in z_1..z_k with small integer coefficients, not identically zero.
Polynomial random_homogeneous(std::size_t k, int degree, std::uint64_t seed);

}  // namespace itres
