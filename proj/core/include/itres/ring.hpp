#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace itres {

struct Symbol {
  std::string name;
  int degree = 1;
  std::optional<int> nilpotency;  // symbol^nilpotency == 0

  bool operator==(const Symbol&) const = default;
};

// Ordered list of graded symbols. Polynomials over a ring store one exponent per symbol.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<Symbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws std::out_of_range

  // Ring made of symbols [first, size()).
  Ring tail(std::size_t first) const;

  bool operator==(const Ring& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Symbol> symbols);
RingPtr empty_ring();

// z_1..z_k of degree 1 followed by `extra`.
RingPtr z_ring(std::size_t k, const std::vector<Symbol>& extra = {});
// c_1..c_m with deg c_i = i.
RingPtr chern_ring(std::size_t m);
// Concatenation; names must stay unique.
RingPtr concat(const Ring& a, const Ring& b);

}  // namespace itres
