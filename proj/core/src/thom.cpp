#include <itres/thom.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace itres {

namespace detail {
std::string_view table1_json();
}

namespace {

Polynomial z(const RingPtr& ring, int i) { return Polynomial::symbol(ring, "z_" + std::to_string(i)); }

// Lifts a polynomial in z_1..z_k into a series over `coeffs`.
LaurentSeries lift(int k, const Polynomial& p, const RingPtr& coeffs) {
  LaurentSeries s(static_cast<std::size_t>(k), coeffs);
  Exponents zero(coeffs->size(), 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = static_cast<std::size_t>(k); i < e.size(); ++i)
      if (e[i]) throw std::invalid_argument("lift: polynomial is not purely in z");
    s.add(Exponents(e.begin(), e.begin() + k), zero, c);
  }
  return s;
}

Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw std::logic_error("non-integral Thom-series coefficient " + to_string(r));
  return r.get_num();
}

void enumerate_box(int k, int radius, int pos, int partial, Exponents& cur, std::vector<Exponents>& out) {
  if (pos == k - 1) {
    int last = -partial;
    if (last >= -radius && last <= radius) {
      cur[pos] = last;
      out.push_back(cur);
    }
    return;
  }
  for (int v = -radius; v <= radius; ++v) {
    cur[pos] = v;
    enumerate_box(k, radius, pos + 1, partial + v, cur, out);
  }
}

}  // namespace

void validate_q(int k, const Polynomial& q) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (q.ring()->size() < static_cast<std::size_t>(k)) throw std::invalid_argument("Q has too few variables");
  for (int i = 0; i < k; ++i)
    if ((*q.ring())[i].name != "z_" + std::to_string(i + 1)) throw std::invalid_argument("Q must be a polynomial in z_1..z_k");
  auto deg = q.homogeneous_degree();
  if (!deg) throw std::invalid_argument("Q must be nonzero and homogeneous");
  const int expected = static_cast<int>(thom_factors(k, empty_ring()).size()) - k * (k - 1) / 2;
  if (*deg != expected)
    throw std::invalid_argument("Q_" + std::to_string(k) + " must have degree " + std::to_string(expected) + ", got " +
                                std::to_string(*deg));
}

bool has_builtin_q(int k) { return k >= 1 && k <= 5; }

Polynomial builtin_q(int k) {
  if (!has_builtin_q(k)) throw std::invalid_argument("no built-in Q for k = " + std::to_string(k));
  RingPtr ring = z_ring(static_cast<std::size_t>(k));
  if (k <= 3) return Polynomial(ring, 1);
  if (k == 4) return Rational(2) * z(ring, 1) + z(ring, 2) - z(ring, 4);
  Polynomial quad = Polynomial::parse(
      ring, "2z_1^2 + 3z_1z_2 - 2z_1z_5 + 2z_2z_3 - z_2z_4 - z_2z_5 - z_3z_4 + z_4z_5");
  return (Rational(2) * z(ring, 1) + z(ring, 2) - z(ring, 5)) * quad;
}

Polynomial vandermonde(int k, const RingPtr& zring) {
  Polynomial v(zring, 1);
  for (int m = 1; m <= k; ++m)
    for (int l = m + 1; l <= k; ++l) v = v * (z(zring, m) - z(zring, l));
  return v;
}

std::vector<LinearForm> thom_factors(int k, const RingPtr& coeffs) {
  std::vector<LinearForm> out;
  for (int l = 1; l <= k; ++l)
    for (int m = 1; m <= l; ++m)
      for (int r = m; m + r <= l; ++r) {
        std::vector<Rational> a(static_cast<std::size_t>(k), 0);
        a[m - 1] += 1;
        a[r - 1] += 1;
        a[l - 1] -= 1;
        out.emplace_back(Polynomial(coeffs), std::move(a));
      }
  return out;
}

bool TpWindowTable::in_box(const Exponents& i) const {
  if (i.size() != static_cast<std::size_t>(k) || exponent_sum(i) != 0) return false;
  return std::all_of(i.begin(), i.end(), [this](int v) { return v >= -radius && v <= radius; });
}

std::optional<Integer> TpWindowTable::get(const Exponents& i) const {
  auto it = values.find(i);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

const Integer& TpWindowTable::at(const Exponents& i) const {
  auto it = values.find(i);
  if (it == values.end()) throw std::out_of_range("exponent " + to_string(i) + " outside the Tp window");
  return it->second;
}

std::vector<Exponents> zero_sum_box(int k, int radius) {
  std::vector<Exponents> out;
  if (k < 1 || radius < 0) return out;
  Exponents cur(static_cast<std::size_t>(k), 0);
  enumerate_box(k, radius, 0, 0, cur, out);
  return out;
}

std::map<Exponents, Integer> tp_coefficients(int k, const Polynomial& q, const std::vector<Exponents>& targets,
                                             const ResidueOptions& options) {
  validate_q(k, q);
  for (const auto& t : targets)
    if (t.size() != static_cast<std::size_t>(k) || exponent_sum(t) != 0)
      throw std::invalid_argument("Thom-series targets must have k zero-sum entries");
  RingPtr zr = z_ring(static_cast<std::size_t>(k));
  Polynomial numerator = vandermonde(k, zr) * q.in_ring(zr);
  auto coeffs = extract_coefficients(lift(k, numerator, empty_ring()), thom_factors(k, empty_ring()), {}, targets, options);
  std::map<Exponents, Integer> out;
  for (const auto& [i, p] : coeffs) out.emplace(i, to_integer(p.constant_term()));
  return out;
}

TpWindowTable tp_window(int k, const Polynomial& q, int radius, const ResidueOptions& options) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  return {k, radius, tp_coefficients(k, q, zero_sum_box(k, radius), options)};
}

TpWindowTable tp3_factorized(int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const int n = radius + 1;
  using Grid = std::vector<std::vector<Integer>>;  // [p][q] coefficient of a^p b^q
  auto mul = [n](const Grid& x, const Grid& y) {
    Grid out(n, std::vector<Integer>(n, 0));
    for (int p1 = 0; p1 < n; ++p1)
      for (int q1 = 0; q1 < n; ++q1) {
        if (x[p1][q1] == 0) continue;
        for (int p2 = 0; p1 + p2 < n; ++p2)
          for (int q2 = 0; q1 + q2 < n; ++q2) out[p1 + p2][q1 + q2] += x[p1][q1] * y[p2][q2];
      }
    return out;
  };
  Grid f(n, std::vector<Integer>(n, 0)), g = f, h = f;
  // (1 - a)/(1 - 2a) = 1 + sum_{p >= 1} 2^{p-1} a^p, likewise in ab
  f[0][0] = 1;
  g[0][0] = 1;
  for (int p = 1; p < n; ++p) {
    Integer two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(p - 1));
    f[p][0] = two;
    g[p][p] = two;
  }
  // (1 - b)/(1 - b(1 + a)) = (1 - b) sum_j b^j (1 + a)^j
  Grid geo(n, std::vector<Integer>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int p = 0; p <= j && p < n; ++p) geo[p][j] = binomial(j, static_cast<unsigned long>(p));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) h[p][q] = geo[p][q] - (q > 0 ? geo[p][q - 1] : Integer(0));
  Grid prod = mul(mul(f, g), h);

  TpWindowTable table{3, radius, {}};
  for (const auto& i : zero_sum_box(3, radius)) {
    int p = i[0], q = -i[2];
    table.values.emplace(i, (p >= 0 && q >= 0) ? prod[p][q] : Integer(0));
  }
  return table;
}

Polynomial thom_polynomial(int k, int codim, const Polynomial& q, const ResidueOptions& options) {
  validate_q(k, q);
  if (codim < 0) throw std::invalid_argument("codim must be nonnegative");
  const int degree = k * (codim + 1);
  RingPtr zr = z_ring(static_cast<std::size_t>(k));
  Polynomial numerator = vandermonde(k, zr) * q.in_ring(zr);
  if (k % 2) numerator = -numerator;
  auto factors = thom_factors(k, empty_ring());

  int depth = degree + options.margin;
  for (;;) {
    RingPtr cring = chern_ring(static_cast<std::size_t>(depth));
    std::vector<LinearForm> lifted;
    for (const auto& f : factors) lifted.emplace_back(Polynomial(cring), f.z);
    // c(1/z_l) z_l^codim truncated after c_depth
    std::vector<LaurentSeries> extras;
    for (int l = 0; l < k; ++l) {
      Window w = Window::unbounded(static_cast<std::size_t>(k));
      w.lo[l] = codim - depth;
      LaurentSeries e(static_cast<std::size_t>(k), cring, w);
      for (int i = 0; i <= depth; ++i) {
        Exponents zexp(static_cast<std::size_t>(k), 0), cexp(static_cast<std::size_t>(depth), 0);
        zexp[l] = codim - i;
        if (i > 0) cexp[i - 1] = 1;
        e.add(zexp, cexp, 1);
      }
      extras.push_back(std::move(e));
    }
    try {
      Polynomial result = iterated_residue(lift(k, numerator, cring), lifted, extras, options);
      return result.in_ring(chern_ring(static_cast<std::size_t>(degree)));
    } catch (const TruncationOverflow& e) {
      int needed = codim - e.required_lo();
      depth = std::max(depth + 1, needed);
    }
  }
}

Polynomial thom_from_window(const TpWindowTable& table, int codim) {
  const int k = table.k;
  const int degree = k * (codim + 1);
  if (table.radius < (k - 1) * (codim + 1)) throw std::invalid_argument("Tp window too small for reassembly");
  RingPtr cring = chern_ring(static_cast<std::size_t>(degree));
  Polynomial out(cring);
  for (const auto& [i, v] : table.values) {
    if (v == 0) continue;
    Exponents c(static_cast<std::size_t>(degree), 0);
    bool ok = true;
    for (int x : i) {
      int j = x + codim + 1;
      if (j < 0 || j > degree) {
        ok = false;
        break;
      }
      if (j > 0) ++c[j - 1];
    }
    if (ok) out.add_term(c, Rational(v));
  }
  return out;
}

namespace {

const nlohmann::json& table1_data() {
  static const nlohmann::json data = nlohmann::json::parse(detail::table1_json());
  return data;
}

}  // namespace

int table1_rows() { return static_cast<int>(table1_data().at("rows").size()); }

std::string table1_text(int k) {
  for (const auto& row : table1_data().at("rows"))
    if (row.at("k").get<int>() == k) return row.at("tp").get<std::string>();
  throw std::out_of_range("no stored row for k = " + std::to_string(k));
}

Polynomial table1_row(int k) { return Polynomial::parse(chern_ring(static_cast<std::size_t>(k)), table1_text(k)); }

bool Table1Report::pass() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const Table1Entry& e) { return e.match; });
}

int Table1Report::matches() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const Table1Entry& e) { return e.match; }));
}

Table1Report verify_table1(int kmax, const std::map<int, Polynomial>& user_q, const ResidueOptions& options) {
  if (kmax < 1 || kmax > table1_rows()) throw std::invalid_argument("kmax must lie in 1.." + std::to_string(table1_rows()));
  Table1Report report;
  for (int k = 1; k <= kmax; ++k) {
    auto it = user_q.find(k);
    if (it == user_q.end() && !has_builtin_q(k))
      throw std::invalid_argument("no Q available for k = " + std::to_string(k) + "; supply one");
    Polynomial q = it != user_q.end() ? it->second : builtin_q(k);
    Polynomial computed = thom_polynomial(k, 0, q, options);
    Polynomial expected = table1_row(k);
    Table1Entry entry;
    entry.k = k;
    entry.computed = computed.to_string();
    Polynomial diff = computed - expected;
    for (const auto& [e, c] : diff.sorted_terms()) {
      Polynomial mono = Polynomial::monomial(expected.ring(), e, 1);
      entry.differences.push_back(mono.to_string() + ": expected " + to_string(expected.coefficient(e)) + ", got " +
                                  to_string(computed.coefficient(e)));
    }
    entry.match = entry.differences.empty();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<Exponents> predecessors(const Exponents& i) {
  if (exponent_sum(i) != 0) throw std::invalid_argument("predecessors: coordinates must sum to zero");
  if (std::all_of(i.begin(), i.end(), [](int v) { return v == 0; }))
    throw std::invalid_argument("predecessors: zero vector has none");
  const std::size_t k = i.size();
  const int top = *std::max_element(i.begin(), i.end());
  int plus_sum = 0;
  for (int v : i) plus_sum += std::max(v, 0);

  std::set<Exponents> out;
  for (std::size_t s = 0; s < k; ++s) {
    if (i[s] != top) continue;
    Exponents jplus(k, 0);
    for (std::size_t t = 0; t < k; ++t) jplus[t] = std::max(i[t], 0);
    --jplus[s];
    std::vector<std::size_t> free;
    for (std::size_t t = 0; t < k; ++t)
      if (jplus[t] == 0) free.push_back(t);
    // distribute plus_sum - 1 units over the free coordinates
    const int units = plus_sum - 1;
    std::vector<int> split(free.size(), 0);
    auto emit = [&]() {
      Exponents j = jplus;
      for (std::size_t f = 0; f < free.size(); ++f) j[free[f]] -= split[f];
      out.insert(j);
    };
    if (free.empty()) {
      if (units == 0) emit();
      continue;
    }
    // stars and bars, iterating compositions of `units` into free.size() parts
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
      if (pos + 1 == free.size()) {
        split[pos] = left;
        emit();
        return;
      }
      for (int v = 0; v <= left; ++v) {
        split[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, units);
  }
  return {out.begin(), out.end()};
}

std::string ScanReport::summary() const {
  std::ostringstream os;
  os << "k=" << k << " R=" << radius << ": " << negatives.size() << " negative, " << positives << " positive, "
     << confirmed << " confirmed, " << inconclusive.size() << " inconclusive, " << violations.size() << " violations";
  return os.str();
}

ScanReport scan_conjecture(const TpWindowTable& table, std::optional<Integer> ratio) {
  ScanReport report;
  report.k = table.k;
  report.radius = table.radius;
  const Integer bound = ratio ? *ratio : Integer(table.k * table.k);
  for (const auto& [i, v] : table.values) {
    if (v < 0) report.negatives.push_back({i, v});
    bool zero = std::all_of(i.begin(), i.end(), [](int x) { return x == 0; });
    if (zero || v <= 0) continue;
    ++report.positives;
    bool found = false, outside = false;
    for (const auto& j : predecessors(i)) {
      auto tj = table.get(j);
      if (!tj) {
        outside = true;
        continue;
      }
      if (*tj > 0 && v < bound * *tj) {
        found = true;
        break;
      }
    }
    if (found)
      ++report.confirmed;
    else if (outside)
      report.inconclusive.push_back(i);
    else
      report.violations.push_back(i);
  }
  return report;
}

bool Tp3Report::pass() const {
  return mismatches.empty() && negatives == 0 && ratio_failures.empty() && scan.pass() &&
         scan.confirmed == scan.positives;
}

Tp3Report tp3_check(int radius, const ResidueOptions& options) {
  Tp3Report report;
  report.radius = radius;
  TpWindowTable direct = tp_window(3, builtin_q(3), radius, options);
  TpWindowTable product = tp3_factorized(radius);
  for (const auto& [i, v] : direct.values) {
    ++report.compared;
    if (product.at(i) != v) report.mismatches.push_back(i);
    if (v < 0) ++report.negatives;
  }
  for (const auto& [i, v] : product.values) {
    if (v <= 0) continue;
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m) {
        if (l == m) continue;
        Exponents j = i;
        ++j[l];
        --j[m];
        auto tj = product.get(j);
        if (!tj || *tj <= 0) continue;
        ++report.ratio_pairs;
        if (*tj >= 9 * v) report.ratio_failures.emplace_back(i, j);
      }
  }
  report.scan = scan_conjecture(product);
  return report;
}

std::vector<std::vector<int>> partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int min_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (k > 0) rec(k, 1);
  return out;
}

CoeffIdentity table1_coeff_identity(const Polynomial& thom, const TpWindowTable& table,
                                    const std::vector<int>& partition) {
  const int k = table.k;
  if (std::accumulate(partition.begin(), partition.end(), 0) != k) throw std::invalid_argument("partition must sum to k");
  if (static_cast<int>(partition.size()) > k) throw std::invalid_argument("partition has more parts than k");
  CoeffIdentity out;
  out.partition = partition;
  std::sort(out.partition.begin(), out.partition.end());

  Exponents c(thom.ring()->size(), 0);
  for (int part : partition) {
    if (part < 1 || part > static_cast<int>(c.size())) throw std::invalid_argument("partition part out of range");
    ++c[part - 1];
  }
  out.lhs = to_integer(thom.coefficient(c));

  std::vector<int> placement(static_cast<std::size_t>(k) - partition.size(), 0);
  placement.insert(placement.end(), out.partition.begin(), out.partition.end());
  std::sort(placement.begin(), placement.end());
  out.rhs = 0;
  do {
    Exponents i(static_cast<std::size_t>(k), 0);
    for (int t = 0; t < k; ++t) i[t] = placement[t] - 1;
    auto v = table.get(i);
    if (!v) {
      out.inconclusive = true;
      continue;
    }
    out.rhs += *v;
  } while (std::next_permutation(placement.begin(), placement.end()));
  return out;
}

}  // namespace itres
