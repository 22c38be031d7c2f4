#include <itres/ring.hpp>

#include <stdexcept>
#include <unordered_set>

namespace itres {

Ring::Ring(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(s.name).second) throw std::invalid_argument("duplicate symbol '" + s.name + "'");
    if (s.degree < 0) throw std::invalid_argument("negative degree for '" + s.name + "'");
    if (s.nilpotency && *s.nilpotency < 1) throw std::invalid_argument("nilpotency must be positive");
  }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown symbol '" + std::string(name) + "'");
}

Ring Ring::tail(std::size_t first) const {
  if (first > symbols_.size()) throw std::out_of_range("ring tail past end");
  return Ring(std::vector<Symbol>(symbols_.begin() + static_cast<long>(first), symbols_.end()));
}

RingPtr make_ring(std::vector<Symbol> symbols) { return std::make_shared<const Ring>(std::move(symbols)); }

RingPtr empty_ring() {
  static const RingPtr ring = make_ring({});
  return ring;
}

RingPtr z_ring(std::size_t k, const std::vector<Symbol>& extra) {
  std::vector<Symbol> s;
  for (std::size_t i = 1; i <= k; ++i) s.push_back({"z_" + std::to_string(i), 1, std::nullopt});
  s.insert(s.end(), extra.begin(), extra.end());
  return make_ring(std::move(s));
}

RingPtr chern_ring(std::size_t m) {
  std::vector<Symbol> s;
  for (std::size_t i = 1; i <= m; ++i) s.push_back({"c_" + std::to_string(i), static_cast<int>(i), std::nullopt});
  return make_ring(std::move(s));
}

RingPtr concat(const Ring& a, const Ring& b) {
  std::vector<Symbol> s = a.symbols();
  s.insert(s.end(), b.symbols().begin(), b.symbols().end());
  return make_ring(std::move(s));
}

}  // namespace itres
