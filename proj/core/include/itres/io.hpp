#pragma once

#include <itres/equivariant.hpp>
#include <itres/ggl.hpp>
#include <itres/jets.hpp>
#include <itres/laurent.hpp>
#include <itres/polynomial.hpp>
#include <itres/residue.hpp>
#include <itres/thom.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace itres {

using Json = nlohmann::ordered_json;

// Malformed or inconsistent input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);  // "p/q" string or JSON integer
Integer integer_from_json(const Json& j);

Json symbols_to_json(const Ring& ring);
RingPtr ring_from_json(const Json& j);

// Polynomials: {"symbols": [...], "terms": [{"exp": [...], "coeff": "p/q"}]}, terms canonically sorted.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
// Terms only, over a known ring.
Json terms_to_json(const Polynomial& p);
Polynomial polynomial_from_terms(const RingPtr& ring, const Json& terms);

// {"k": k, "symbols": [...], "window": {"lo": [...], "hi": [...]}, "terms": [...]}; null bounds are open.
Json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);

// Q files: {"k": k, "terms": [{"exp": [k ints], "coeff": "int"}]}, polynomial over z_ring(k).
Json q_to_json(int k, const Polynomial& q);
Polynomial q_from_json(const Json& j, int& k);

Json to_json(const TpWindowTable& table);  // [{"i": [...], "tp": "..."}]

MonomialIdeal ideal_from_json(const Json& j);                  // {"N": n, "generators": [[...]]}
std::vector<Polynomial> weights_from_json(const Json& j);      // {"r": r, "eta": [[r coefficients]]}

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json to_json(const CurveJet& gamma);  // {"v": [[...]]}, n rows of k entries
CurveJet curve_jet_from_json(const Json& j);
Json to_json(const Jet& jet);  // {"source", "target", "order", "components": [terms...]}
Jet jet_from_json(const Json& j);

Json to_json(const GGLCertificate& c);

// Residue problems:
// {"k": k, "symbols": [...], "numerator": [terms over z and symbols],
//  "factors": [{"z": [k rationals], "constant": [terms over symbols]}],
//  "extras": [{"name": "...", "window": ..., "terms": [...]}],
//  "targets": [[k ints]]}  (targets default to the single residue exponent)
struct ResidueSpec {
  std::size_t k = 0;
  RingPtr ring;
  LaurentSeries numerator{0, empty_ring()};
  std::vector<LinearForm> factors;
  std::vector<std::string> extra_names;
  std::vector<LaurentSeries> extras;
  std::vector<Exponents> targets;
  bool residue_only = true;  // no explicit targets: report the signed iterated residue
};
ResidueSpec residue_spec_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace itres
