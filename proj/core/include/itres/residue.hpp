#pragma once

#include <itres/laurent.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace itres {

class StabilityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResidueOptions {
  int margin = 0;           // extra expansion depth beyond the inferred one
  bool self_check = false;  // rerun at margin + 2 and require identical output
};

// Coefficients of the given z-exponents in numerator * prod 1/factor * prod extras.
// Extras must be exact in every variable except their top one, whose lower window
// bound is checked against the inferred requirement (TruncationOverflow otherwise).
std::map<Exponents, Polynomial> extract_coefficients(const LaurentSeries& numerator,
                                                     const std::vector<LinearForm>& factors,
                                                     const std::vector<LaurentSeries>& extras,
                                                     const std::vector<Exponents>& targets,
                                                     const ResidueOptions& options = {});

// (-1)^k times the coefficient of (z_1...z_k)^{-1}.
Polynomial iterated_residue(const LaurentSeries& numerator, const std::vector<LinearForm>& factors,
                            const std::vector<LaurentSeries>& extras = {},
                            const ResidueOptions& options = {});

}  // namespace itres
