#include <itres/io.hpp>

#include <fstream>
#include <sstream>

namespace itres {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Exponents exponents_from_json(const Json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    throw InputError(std::string(what) + " must be an array of " + std::to_string(expected) + " integers");
  Exponents e;
  for (const auto& v : j) e.push_back(int_from_json(v, what));
  return e;
}

Json window_to_json(const Window& w) {
  Json lo = Json::array(), hi = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    lo.push_back(w.lo[i] == kNoLowerBound ? Json(nullptr) : Json(w.lo[i]));
    hi.push_back(w.hi[i] == kNoUpperBound ? Json(nullptr) : Json(w.hi[i]));
  }
  return Json{{"lo", lo}, {"hi", hi}};
}

Window window_from_json(const Json& j, std::size_t k) {
  Window w = Window::unbounded(k);
  if (j.is_null()) return w;
  const Json& lo = field(j, "lo");
  const Json& hi = field(j, "hi");
  if (!lo.is_array() || !hi.is_array() || lo.size() != k || hi.size() != k) throw InputError("window bounds need k entries");
  for (std::size_t i = 0; i < k; ++i) {
    if (!lo[i].is_null()) w.lo[i] = int_from_json(lo[i], "window bound");
    if (!hi[i].is_null()) w.hi[i] = int_from_json(hi[i], "window bound");
  }
  return w;
}

Json series_terms(const LaurentSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.sorted_terms())
    terms.push_back(Json{{"exp", Json(std::vector<int>(e.begin(), e.end()))}, {"coeff", rational_to_json(c)}});
  return terms;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("rationals must be \"p/q\" strings or integers, got " + j.dump());
}

Integer integer_from_json(const Json& j) {
  Rational q = rational_from_json(j);
  if (!is_integer(q)) throw InputError("expected an integer, got " + to_string(q));
  return q.get_num();
}

Json symbols_to_json(const Ring& ring) {
  Json out = Json::array();
  for (const auto& s : ring.symbols()) {
    Json sym{{"name", s.name}, {"degree", s.degree}};
    sym["nilpotency"] = s.nilpotency ? Json(*s.nilpotency) : Json(nullptr);
    out.push_back(std::move(sym));
  }
  return out;
}

RingPtr ring_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("symbols must be an array");
  std::vector<Symbol> symbols;
  for (const auto& s : j) {
    Symbol sym;
    const Json& name = field(s, "name");
    if (!name.is_string()) throw InputError("symbol name must be a string");
    sym.name = name.get<std::string>();
    sym.degree = s.contains("degree") ? int_from_json(s["degree"], "symbol degree") : 1;
    if (s.contains("nilpotency") && !s["nilpotency"].is_null()) {
      sym.nilpotency = int_from_json(s["nilpotency"], "nilpotency");
      if (*sym.nilpotency < 1) throw InputError("nilpotency must be positive");
    }
    symbols.push_back(std::move(sym));
  }
  try {
    return make_ring(std::move(symbols));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json terms_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.sorted_terms())
    terms.push_back(Json{{"exp", Json(std::vector<int>(e.begin(), e.end()))}, {"coeff", rational_to_json(c)}});
  return terms;
}

Polynomial polynomial_from_terms(const RingPtr& ring, const Json& terms) {
  if (!terms.is_array()) throw InputError("terms must be an array");
  Polynomial p(ring);
  for (const auto& t : terms) {
    Exponents e = exponents_from_json(field(t, "exp"), ring->size(), "term exponent");
    for (int v : e)
      if (v < 0) throw InputError("polynomial exponents must be nonnegative");
    p.add_term(e, rational_from_json(field(t, "coeff")));
  }
  return p;
}

Json to_json(const Polynomial& p) {
  return Json{{"symbols", symbols_to_json(*p.ring())}, {"terms", terms_to_json(p)}};
}

Polynomial polynomial_from_json(const Json& j) {
  return polynomial_from_terms(ring_from_json(field(j, "symbols")), field(j, "terms"));
}

Json to_json(const LaurentSeries& s) {
  return Json{{"k", s.k()},
              {"symbols", symbols_to_json(*s.ring())},
              {"window", window_to_json(s.window())},
              {"terms", series_terms(s)}};
}

LaurentSeries series_from_json(const Json& j) {
  const int k = int_from_json(field(j, "k"), "k");
  if (k < 1) throw InputError("k must be positive");
  RingPtr ring = ring_from_json(j.contains("symbols") ? j["symbols"] : Json::array());
  LaurentSeries s(static_cast<std::size_t>(k), ring,
                  window_from_json(j.contains("window") ? j["window"] : Json(nullptr), static_cast<std::size_t>(k)));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("terms must be an array");
  for (const auto& t : terms) {
    Exponents e = exponents_from_json(field(t, "exp"), static_cast<std::size_t>(k) + ring->size(), "series exponent");
    for (std::size_t i = static_cast<std::size_t>(k); i < e.size(); ++i)
      if (e[i] < 0) throw InputError("symbol exponents must be nonnegative");
    s.add(e, rational_from_json(field(t, "coeff")));
  }
  return s;
}

Json q_to_json(int k, const Polynomial& q) {
  Json terms = Json::array();
  for (const auto& [e, c] : q.sorted_terms())
    terms.push_back(Json{{"exp", Json(std::vector<int>(e.begin(), e.begin() + k))}, {"coeff", rational_to_json(c)}});
  return Json{{"k", k}, {"terms", terms}};
}

Polynomial q_from_json(const Json& j, int& k) {
  k = int_from_json(field(j, "k"), "k");
  if (k < 1 || k > 12) throw InputError("k must lie in 1..12");
  RingPtr zr = z_ring(static_cast<std::size_t>(k));
  Polynomial q(zr);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("terms must be an array");
  for (const auto& t : terms) {
    Exponents e = exponents_from_json(field(t, "exp"), static_cast<std::size_t>(k), "Q exponent");
    for (int v : e)
      if (v < 0) throw InputError("Q exponents must be nonnegative");
    q.add_term(e, integer_from_json(field(t, "coeff")));
  }
  try {
    validate_q(k, q);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return q;
}

Json to_json(const TpWindowTable& table) {
  Json out = Json::array();
  for (const auto& [i, v] : table.values)
    out.push_back(Json{{"i", Json(std::vector<int>(i.begin(), i.end()))}, {"tp", to_string(v)}});
  return out;
}

MonomialIdeal ideal_from_json(const Json& j) {
  const int n = int_from_json(field(j, "N"), "N");
  if (n < 1) throw InputError("N must be positive");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw InputError("generators must be an array");
  std::vector<std::vector<int>> g;
  for (const auto& row : gens) {
    Exponents e = exponents_from_json(row, static_cast<std::size_t>(n), "generator");
    for (int v : e)
      if (v < 0) throw InputError("generator exponents must be nonnegative");
    g.emplace_back(e.begin(), e.end());
  }
  try {
    return MonomialIdeal(static_cast<std::size_t>(n), std::move(g));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::vector<Polynomial> weights_from_json(const Json& j) {
  const int r = int_from_json(field(j, "r"), "r");
  if (r < 1) throw InputError("r must be positive");
  RingPtr lr = lambda_ring(static_cast<std::size_t>(r));
  const Json& eta = field(j, "eta");
  if (!eta.is_array()) throw InputError("eta must be an array");
  std::vector<Polynomial> out;
  for (const auto& row : eta) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(r)) throw InputError("each weight needs r coefficients");
    Polynomial w(lr);
    for (int m = 0; m < r; ++m) {
      Exponents e(static_cast<std::size_t>(r), 0);
      e[m] = 1;
      w.add_term(e, rational_from_json(row[m]));
    }
    out.push_back(std::move(w));
  }
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    if (!m.empty() && r.size() != m.front().size()) throw InputError("ragged matrix");
    m.push_back(std::move(r));
  }
  return m;
}

Json to_json(const CurveJet& gamma) { return Json{{"v", matrix_to_json(gamma.v)}}; }

CurveJet curve_jet_from_json(const Json& j) {
  CurveJet g{matrix_from_json(field(j, "v"))};
  if (g.v.empty() || g.v.front().empty()) throw InputError("curve jet needs at least one row and column");
  return g;
}

Json to_json(const Jet& jet) {
  Json comps = Json::array();
  for (const auto& c : jet.components) comps.push_back(terms_to_json(c));
  return Json{{"source", jet.source}, {"target", jet.target}, {"order", jet.order}, {"components", comps}};
}

Jet jet_from_json(const Json& j) {
  const int u = int_from_json(field(j, "source"), "source");
  const int k = int_from_json(field(j, "order"), "order");
  if (u < 1 || k < 1) throw InputError("jet source and order must be positive");
  RingPtr xr = x_ring(static_cast<std::size_t>(u));
  const Json& comps = field(j, "components");
  if (!comps.is_array()) throw InputError("components must be an array");
  std::vector<Polynomial> c;
  for (const auto& t : comps) c.push_back(polynomial_from_terms(xr, t));
  if (j.contains("target") && int_from_json(j["target"], "target") != static_cast<int>(c.size()))
    throw InputError("target does not match the number of components");
  try {
    return Jet::make(static_cast<std::size_t>(u), k, std::move(c));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const GGLCertificate& c) {
  Json coeffs = Json::array();
  for (const auto& x : c.poly.p) coeffs.push_back(rational_to_json(x));
  return Json{{"n", c.n},
              {"delta", rational_to_json(c.delta)},
              {"coeffs", coeffs},
              {"rho0", to_string(c.rho0)},
              {"leading_identity", c.leading_identity},
              {"ineq_10l", c.ineq_10l},
              {"fujiwara_D", to_string(c.fujiwara.D)},
              {"d_star", to_string(c.fujiwara.d_star)},
              {"verdict", c.pass() ? "PASS" : "FAIL"}};
}

ResidueSpec residue_spec_from_json(const Json& j) {
  ResidueSpec spec;
  const int k = int_from_json(field(j, "k"), "k");
  if (k < 1 || k > 12) throw InputError("k must lie in 1..12");
  spec.k = static_cast<std::size_t>(k);
  spec.ring = ring_from_json(j.contains("symbols") ? j["symbols"] : Json::array());

  RingPtr full = z_ring(spec.k, spec.ring->symbols());
  Polynomial num = polynomial_from_terms(full, field(j, "numerator"));
  spec.numerator = LaurentSeries::from_polynomial(spec.k, num, spec.ring);
  if (j.contains("shift")) spec.numerator = spec.numerator.shifted(exponents_from_json(j["shift"], spec.k, "shift"));

  const Json& factors = field(j, "factors");
  if (!factors.is_array()) throw InputError("factors must be an array");
  for (const auto& f : factors) {
    const Json& z = field(f, "z");
    if (!z.is_array() || z.size() != spec.k) throw InputError("factor needs k z-coefficients");
    std::vector<Rational> coeffs;
    for (const auto& x : z) coeffs.push_back(rational_from_json(x));
    Polynomial c = f.contains("constant") ? polynomial_from_terms(spec.ring, f["constant"]) : Polynomial(spec.ring);
    LinearForm form(std::move(c), std::move(coeffs));
    if (form.leading() < 0) throw InputError("factor without a z-coefficient");
    spec.factors.push_back(std::move(form));
  }

  if (j.contains("extras")) {
    if (!j["extras"].is_array()) throw InputError("extras must be an array");
    std::size_t idx = 0;
    for (const auto& e : j["extras"]) {
      std::string name = e.contains("name") && e["name"].is_string() ? e["name"].get<std::string>()
                                                                      : "extra" + std::to_string(idx);
      Json full_series = e;
      full_series["k"] = k;
      full_series["symbols"] = symbols_to_json(*spec.ring);
      spec.extras.push_back(series_from_json(full_series));
      spec.extra_names.push_back(std::move(name));
      ++idx;
    }
  }

  if (j.contains("targets")) {
    spec.residue_only = false;
    if (!j["targets"].is_array() || j["targets"].empty()) throw InputError("targets must be a nonempty array");
    for (const auto& t : j["targets"]) spec.targets.push_back(exponents_from_json(t, spec.k, "target"));
  } else {
    spec.targets.push_back(Exponents(spec.k, -1));
  }
  return spec;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace itres
