#include <itres/series.hpp>

#include <stdexcept>

namespace itres {

std::vector<Polynomial> series_inverse(const std::vector<Polynomial>& c) {
  if (c.empty()) throw std::invalid_argument("series_inverse: need at least one coefficient");
  std::vector<Polynomial> s;
  s.reserve(c.size());
  for (std::size_t j = 1; j <= c.size(); ++j) {
    Polynomial acc = -c[j - 1];
    for (std::size_t i = 1; i < j; ++i) acc -= c[i - 1] * s[j - i - 1];
    s.push_back(std::move(acc));
  }
  return s;
}

}  // namespace itres
