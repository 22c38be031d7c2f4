#pragma once

#include <itres/laurent.hpp>

#include <optional>
#include <string>
#include <vector>

namespace itres {

struct VanishingLevel {
  int l = 0;  // 1-based
  int deg_p_tail = 0, deg_q_tail = 0;  // deg(.; k, k-1, ..., l)
  int deg_p_l = 0, deg_q_l = 0, lead_q_l = 0;
  bool option1 = false;
  bool option2 = false;
};

struct VanishingReport {
  std::vector<VanishingLevel> levels;  // l = k down to 1
  std::optional<int> certified_level;
  int certified_option = 0;
  std::string summary() const;  // "vanishes by option 1 at l = 1" or "no vanishing certified"
  bool vanishes() const { return certified_level.has_value(); }
};

// p lives over z_ring(k, ...); symbols past the first k count as constants.
VanishingReport vanishing_predicates(const Polynomial& p, std::size_t k,
                                     const std::vector<LinearForm>& factors);

}  // namespace itres
