#pragma once

#include <itres/residue.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace itres {

// Built-in numerator polynomials over z_ring(k); available for 1 <= k <= 5.
bool has_builtin_q(int k);
Polynomial builtin_q(int k);
// Throws unless q is a homogeneous polynomial in z_1..z_k of the degree the series needs.
void validate_q(int k, const Polynomial& q);

// prod_{m<l} (z_m - z_l) over `zring` (whose first k symbols are z_1..z_k).
Polynomial vandermonde(int k, const RingPtr& zring);

// Denominator factors z_m + z_r - z_l for m <= r, m + r <= l <= k; constants live in `coeffs`.
std::vector<LinearForm> thom_factors(int k, const RingPtr& coeffs);

// Thom-series coefficients on the box |i_j| <= radius, sum i = 0. Zero entries are stored too.
struct TpWindowTable {
  int k = 0;
  int radius = 0;
  std::map<Exponents, Integer> values;

  bool in_box(const Exponents& i) const;
  // Value at i; nullopt outside the box.
  std::optional<Integer> get(const Exponents& i) const;
  const Integer& at(const Exponents& i) const;
};

// All i with sum 0 and |i_j| <= radius, in lexicographic order.
std::vector<Exponents> zero_sum_box(int k, int radius);

TpWindowTable tp_window(int k, const Polynomial& q, int radius, const ResidueOptions& options = {});
// Arbitrary zero-sum targets.
std::map<Exponents, Integer> tp_coefficients(int k, const Polynomial& q, const std::vector<Exponents>& targets,
                                             const ResidueOptions& options = {});

// Coefficients of the k = 3 product formula in a, b, re-indexed by a^p b^q -> (p, q - p, -q).
TpWindowTable tp3_factorized(int radius);

// Direct residue evaluation over chern_ring(k (codim + 1)).
Polynomial thom_polynomial(int k, int codim, const Polynomial& q, const ResidueOptions& options = {});
// The same polynomial reassembled from series coefficients; needs radius >= (k - 1)(codim + 1).
Polynomial thom_from_window(const TpWindowTable& table, int codim);

// Golden rows k = 1..8 over chern_ring(k).
Polynomial table1_row(int k);
std::string table1_text(int k);
int table1_rows();

struct Table1Entry {
  int k = 0;
  bool match = false;
  std::string computed;
  std::vector<std::string> differences;  // "c_1^2c_2: expected 6, got 5"
};

struct Table1Report {
  std::vector<Table1Entry> entries;
  bool pass() const;
  int matches() const;
};

// Uses `user_q` where present and the built-in polynomials otherwise.
Table1Report verify_table1(int kmax, const std::map<int, Polynomial>& user_q = {}, const ResidueOptions& options = {});

// Predecessors of a nonzero zero-sum vector, sorted.
std::vector<Exponents> predecessors(const Exponents& i);

struct ScanEntry {
  Exponents i;
  Integer value;
};

struct ScanReport {
  int k = 0;
  int radius = 0;
  std::vector<ScanEntry> negatives;
  std::size_t positives = 0;     // nonzero i with Tp_i > 0
  std::size_t confirmed = 0;     // with an in-box predecessor meeting the ratio bound
  std::vector<Exponents> inconclusive;
  std::vector<Exponents> violations;
  bool pass() const { return negatives.empty() && violations.empty(); }
  std::string summary() const;
};

// Ratio bound k^2 unless `ratio` is given.
ScanReport scan_conjecture(const TpWindowTable& table, std::optional<Integer> ratio = std::nullopt);

struct Tp3Report {
  int radius = 0;
  std::size_t compared = 0;
  std::vector<Exponents> mismatches;  // keys where the product formula and the residue disagree
  std::size_t negatives = 0;
  std::size_t ratio_pairs = 0;
  std::vector<std::pair<Exponents, Exponents>> ratio_failures;  // (i, i + e_l - e_m)
  ScanReport scan;
  bool pass() const;
};

Tp3Report tp3_check(int radius, const ResidueOptions& options = {});

// Partitions of k as nondecreasing part lists.
std::vector<std::vector<int>> partitions(int k);

struct CoeffIdentity {
  std::vector<int> partition;
  Integer lhs;  // coefficient in the Thom polynomial
  Integer rhs;  // sum of series coefficients over distinct placements
  bool inconclusive = false;
  bool pass() const { return !inconclusive && lhs == rhs; }
};

// `thom` is Tp_k^0 over chern_ring(k); `table` needs radius >= k - 1.
CoeffIdentity table1_coeff_identity(const Polynomial& thom, const TpWindowTable& table, const std::vector<int>& partition);

}  // namespace itres
