#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

namespace itres {

// Exponent multi-index. Small vectors keep hash-map keys off the heap for k <= 12.
using Exponents = boost::container::small_vector<int, 12>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : e) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

inline Exponents make_exponents(std::initializer_list<int> values) {
  return Exponents(values.begin(), values.end());
}

inline int exponent_sum(const Exponents& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

std::string to_string(const Exponents& e);

}  // namespace itres
