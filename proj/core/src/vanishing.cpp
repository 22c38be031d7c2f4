#include <itres/vanishing.hpp>

#include <algorithm>
#include <stdexcept>

namespace itres {

namespace {

// Largest total degree in the variables [l, k).
int degree_in_tail(const Polynomial& p, std::size_t l, std::size_t k) {
  int best = -1;
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (std::size_t i = l; i < k; ++i) d += e[i];
    best = std::max(best, d);
  }
  return best;
}

int factors_touching(const std::vector<LinearForm>& factors, std::size_t l, std::size_t k) {
  int n = 0;
  for (const auto& f : factors) {
    for (std::size_t i = l; i < k; ++i)
      if (sgn(f.z[i]) != 0) {
        ++n;
        break;
      }
  }
  return n;
}

}  // namespace

std::string VanishingReport::summary() const {
  if (!certified_level) return "no vanishing certified";
  return "vanishes by option " + std::to_string(certified_option) + " at l = " + std::to_string(*certified_level);
}

VanishingReport vanishing_predicates(const Polynomial& p, std::size_t k, const std::vector<LinearForm>& factors) {
  if (factors.empty()) throw std::invalid_argument("vanishing_predicates: no factors");
  if (p.ring()->size() < k) throw std::invalid_argument("vanishing_predicates: numerator ring too small");
  for (const auto& f : factors)
    if (f.k() != k) throw std::invalid_argument("vanishing_predicates: factor variable count mismatch");

  VanishingReport report;
  // A zero numerator vanishes trivially; its degree is treated as -infinity.
  const bool zero = p.is_zero();
  for (std::size_t l = k; l-- > 0;) {
    VanishingLevel level;
    level.l = static_cast<int>(l) + 1;
    level.deg_p_tail = degree_in_tail(p, l, k);
    level.deg_q_tail = factors_touching(factors, l, k);
    level.deg_p_l = degree_in_tail(p, l, l + 1);
    level.deg_q_l = factors_touching(factors, l, l + 1);
    level.lead_q_l = static_cast<int>(
        std::count_if(factors.begin(), factors.end(), [l](const LinearForm& f) { return f.leading() == static_cast<int>(l); }));
    const int span = static_cast<int>(k - l);
    level.option1 = zero || level.deg_p_tail + span < level.deg_q_tail;  // span = k - l + 1 for 1-based l
    level.option2 = zero || (level.deg_p_l + 1 < level.deg_q_l && level.deg_q_l == level.lead_q_l);
    report.levels.push_back(level);
  }
  // Report the lowest level, preferring option 1.
  for (auto it = report.levels.rbegin(); it != report.levels.rend(); ++it) {
    if (it->option1 || it->option2) {
      report.certified_level = it->l;
      report.certified_option = it->option1 ? 1 : 2;
      break;
    }
  }
  return report;
}

}  // namespace itres
