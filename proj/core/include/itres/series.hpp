#pragma once

#include <itres/polynomial.hpp>

#include <vector>

namespace itres {

// s_1..s_n with (1 + sum c_i t^i)(1 + sum s_i t^i) = 1 mod t^{n+1}.
std::vector<Polynomial> series_inverse(const std::vector<Polynomial>& c);

}  // namespace itres
