#include <itres/equivariant.hpp>
#include <itres/ggl.hpp>
#include <itres/io.hpp>
#include <itres/thom.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace itres;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2 };

struct Common {
  std::string format = "text";
  int margin = 0;
  bool self_check = false;

  ResidueOptions options() const { return {margin, self_check}; }
  bool json() const { return format == "json"; }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Polynomial load_q(const std::string& path, std::optional<int> expected_k) {
  int k = 0;
  Polynomial q = q_from_json(read_json_file(path), k);
  if (expected_k && k != *expected_k)
    throw InputError(path + ": Q file is for k=" + std::to_string(k) + ", expected k=" + std::to_string(*expected_k));
  return q;
}

Polynomial q_or_builtin(const std::string& path, int k) {
  if (!path.empty()) return load_q(path, k);
  if (!has_builtin_q(k)) throw InputError("no built-in Q for k=" + std::to_string(k) + "; pass --q FILE");
  return builtin_q(k);
}

Json exps(const Exponents& e) { return Json(std::vector<int>(e.begin(), e.end())); }

int cmd_tp(const Common& c, int k, int codim, const std::string& qfile) {
  Polynomial tp = thom_polynomial(k, codim, q_or_builtin(qfile, k), c.options());
  if (c.json())
    emit(Json{{"k", k}, {"codim", codim}, {"thom", to_json(tp)}, {"text", tp.to_string()}});
  else
    std::cout << tp.to_string() << "\n";
  return kOk;
}

int cmd_verify(const Common& c, int kmax, const std::vector<std::string>& qfiles) {
  if (kmax < 1 || kmax > table1_rows()) throw InputError("--kmax must lie in 1.." + std::to_string(table1_rows()));
  std::map<int, Polynomial> user;
  for (const auto& f : qfiles) {
    int k = 0;
    Polynomial q = q_from_json(read_json_file(f), k);
    user.insert_or_assign(k, q);
  }
  for (int k = 1; k <= kmax; ++k)
    if (!user.count(k) && !has_builtin_q(k))
      throw InputError("row k=" + std::to_string(k) + " needs a Q file (--q)");
  Table1Report rep = verify_table1(kmax, user, c.options());
  if (c.json()) {
    Json rows = Json::array();
    for (const auto& e : rep.entries)
      rows.push_back(Json{{"k", e.k}, {"match", e.match}, {"computed", e.computed}, {"differences", e.differences}});
    emit(Json{{"verdict", rep.pass() ? "PASS" : "FAIL"}, {"matches", rep.matches()}, {"rows", kmax}, {"entries", rows}});
  } else {
    std::cout << (rep.pass() ? "PASS " : "FAIL ") << rep.matches() << "/" << kmax << "\n";
    for (const auto& e : rep.entries)
      for (const auto& d : e.differences) std::cout << "  k=" << e.k << " " << d << "\n";
  }
  return rep.pass() ? kOk : kFail;
}

int cmd_scan(const Common& c, int k, int radius, const std::string& qfile, const std::string& exportfile) {
  if (k < 1) throw InputError("--k must be positive");
  if (radius < 0) throw InputError("--radius must be nonnegative");
  TpWindowTable table = tp_window(k, q_or_builtin(qfile, k), radius, c.options());
  ScanReport rep = scan_conjecture(table);
  if (!exportfile.empty()) {
    std::ofstream out(exportfile);
    if (!out) throw InputError("cannot write " + exportfile);
    out << to_json(table).dump(2) << "\n";
  }
  if (c.json()) {
    Json neg = Json::array(), viol = Json::array(), inc = Json::array();
    for (const auto& e : rep.negatives) neg.push_back(Json{{"i", exps(e.i)}, {"tp", to_string(e.value)}});
    for (const auto& v : rep.violations) viol.push_back(exps(v));
    for (const auto& v : rep.inconclusive) inc.push_back(exps(v));
    emit(Json{{"k", k},
              {"radius", radius},
              {"negatives", neg},
              {"positives", rep.positives},
              {"confirmed", rep.confirmed},
              {"inconclusive", inc},
              {"violations", viol},
              {"verdict", rep.pass() ? "PASS" : "FAIL"}});
  } else {
    std::cout << rep.summary() << "\n";
    for (const auto& e : rep.negatives) std::cout << "  negative Tp" << to_string(e.i) << " = " << e.value << "\n";
    for (const auto& v : rep.violations) std::cout << "  violation at " << to_string(v) << "\n";
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass() ? kOk : kFail;
}

int cmd_tp3(const Common& c, int radius) {
  if (radius < 0) throw InputError("--radius must be nonnegative");
  Tp3Report rep = tp3_check(radius, c.options());
  if (c.json()) {
    Json mism = Json::array(), rf = Json::array();
    for (const auto& m : rep.mismatches) mism.push_back(exps(m));
    for (const auto& [a, b] : rep.ratio_failures) rf.push_back(Json::array({exps(a), exps(b)}));
    emit(Json{{"radius", radius},
              {"compared", rep.compared},
              {"mismatches", mism},
              {"negatives", rep.negatives},
              {"ratio_pairs", rep.ratio_pairs},
              {"ratio_failures", rf},
              {"positives", rep.scan.positives},
              {"confirmed", rep.scan.confirmed},
              {"verdict", rep.pass() ? "PASS" : "FAIL"}});
  } else {
    std::cout << "R=" << radius << ": " << rep.compared << " compared, " << rep.mismatches.size() << " mismatches, "
              << rep.negatives << " negative, " << rep.ratio_pairs << " ratio pairs, " << rep.ratio_failures.size()
              << " ratio failures, " << rep.scan.confirmed << "/" << rep.scan.positives << " positives confirmed\n";
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass() ? kOk : kFail;
}

int cmd_ggl(const Common& c, int n, const std::string& delta_text, const std::string& qfile, bool suite) {
  if (n < 1) throw InputError("--n must be positive");
  Rational delta = delta_text.empty() ? default_delta(n) : rational_from_json(Json(delta_text));
  GGLCertificate cert = ggl_certify(n, delta, q_or_builtin(qfile, n), c.options());
  std::optional<InequalityReport> rep;
  if (suite) rep = inequality_suite(n, q_or_builtin(qfile, n), cert.poly, std::nullopt, c.options());
  bool ok = cert.pass() && (!rep || (rep->closed_forms && rep->bracket && rep->rho_sums_pass && rep->ineq_pass));
  if (c.json()) {
    Json j = to_json(cert);
    if (rep)
      j["inequality_suite"] = Json{{"sample_d", to_string(rep->sample_d)},
                                   {"closed_forms", rep->closed_forms},
                                   {"bracket", rep->bracket},
                                   {"c_min", to_string(rep->c_min)},
                                   {"c_max", to_string(rep->c_max)},
                                   {"bracket_threshold", to_string(rep->bracket_threshold)},
                                   {"rho_sums", rep->rho_sums_pass},
                                   {"ineq", rep->ineq_pass}};
    emit(j);
  } else {
    std::cout << "n=" << n << " delta=" << to_string(delta) << "\n";
    std::cout << "I(d) = " << cert.poly.to_string() << "\n";
    std::cout << "rho0 = " << cert.rho0 << "\n";
    std::cout << "leading identity: " << (cert.leading_identity ? "yes" : "no") << "\n";
    std::cout << "|p_{n+1-l}| < n^{10l} p_{n+1}: " << (cert.ineq_10l ? "yes" : "no") << "\n";
    std::cout << "Fujiwara D = " << cert.fujiwara.D << ", d* = " << cert.fujiwara.d_star << "\n";
    if (rep) {
      std::cout << "suite at d=" << rep->sample_d << ": closed forms " << (rep->closed_forms ? "PASS" : "FAIL")
                << ", bracket " << (rep->bracket ? "PASS" : "FAIL") << " (C in [" << rep->c_min << ", " << rep->c_max
                << "], holds from d=" << rep->bracket_threshold << "), sums " << (rep->rho_sums_pass ? "PASS" : "FAIL")
                << ", coefficient bounds " << (rep->ineq_pass ? "PASS" : "FAIL") << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kFail;
}

int cmd_mdeg(const Common& c, const std::string& ideal_file, const std::string& weights_file) {
  MonomialIdeal ideal = ideal_from_json(read_json_file(ideal_file));
  std::vector<Polynomial> eta = weights_from_json(read_json_file(weights_file));
  if (eta.size() != ideal.variables()) throw InputError("weights count differs from N");
  Mdeg md = mdeg_monomial(ideal, eta);
  if (c.json()) {
    Json comps = Json::array();
    for (const auto& comp : md.components) {
      std::vector<std::size_t> coords;
      for (auto i : comp.coordinates) coords.push_back(i + 1);
      comps.push_back(Json{{"coordinates", coords}, {"multiplicity", to_string(comp.multiplicity)}});
    }
    emit(Json{{"codim", md.codim}, {"components", comps}, {"mdeg", to_json(md.value)}, {"text", md.value.to_string()}});
  } else {
    std::cout << md.value.to_string() << "\n";
  }
  return kOk;
}

int cmd_oracle(const Common& c, int k, int n, std::uint64_t seed, const std::string& qfile) {
  if (k < 1 || n < k) throw InputError("need 1 <= k <= n");
  Polynomial q = qfile.empty()
                     ? random_homogeneous(static_cast<std::size_t>(k), std::max(0, k * (n - 1) - k * (k - 1) / 2) + 1, seed)
                     : load_q(qfile, k);
  OracleReport rep = localisation_oracle(q, static_cast<std::size_t>(n), static_cast<std::size_t>(k), seed, c.options());
  if (c.json()) {
    Json lam = Json::array();
    for (const auto& x : rep.lambda) lam.push_back(rational_to_json(x));
    emit(Json{{"k", k},
              {"n", n},
              {"seed", seed},
              {"q", q_to_json(k, q)},
              {"lambda", lam},
              {"residue", to_json(rep.residue)},
              {"residue_value", rational_to_json(rep.residue_value)},
              {"fixed_point_sum", rational_to_json(rep.sum)},
              {"verdict", rep.equal ? "EQUAL" : "DIFFERENT"}});
  } else {
    std::cout << (rep.equal ? "EQUAL" : "DIFFERENT") << "\n";
  }
  return rep.equal ? kOk : kFail;
}

int cmd_residue(const Common& c, const std::string& spec_file) {
  ResidueSpec spec = residue_spec_from_json(read_json_file(spec_file));
  if (spec.residue_only) {
    Polynomial r = iterated_residue(spec.numerator, spec.factors, spec.extras, c.options());
    if (c.json())
      emit(Json{{"residue", to_json(r)}, {"text", r.to_string()}});
    else
      std::cout << r.to_string() << "\n";
    return kOk;
  }
  auto coeffs = extract_coefficients(spec.numerator, spec.factors, spec.extras, spec.targets, c.options());
  if (c.json()) {
    Json out = Json::array();
    for (const auto& [t, p] : coeffs) out.push_back(Json{{"target", exps(t)}, {"coefficient", to_json(p)}});
    emit(Json{{"coefficients", out}});
  } else {
    for (const auto& [t, p] : coeffs) std::cout << to_string(t) << ": " << p.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact iterated residues, Thom series and GGL certificates"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--margin", common.margin, "Extra expansion depth for every residue")->check(CLI::NonNegativeNumber);
    sub->add_flag("--self-check", common.self_check, "Recompute with the depth enlarged by 2 and compare");
  };

  int k = 0, codim = 0, kmax = 5, radius = 5, n = 0;
  std::uint64_t seed = 0;
  std::string qfile, delta, ideal_file, weights_file, spec_file, export_file;
  std::vector<std::string> qfiles;
  bool suite = false;

  auto* tp = app.add_subcommand("tp", "Thom polynomial Tp_k^codim");
  tp->add_option("--k", k, "Singularity index")->required()->check(CLI::Range(1, 12));
  tp->add_option("--codim", codim, "Relative codimension")->check(CLI::NonNegativeNumber);
  tp->add_option("--q", qfile, "Q polynomial file (JSON)");
  add_common(tp);

  auto* ver = app.add_subcommand("verify-table1", "Compare Tp_k^0 with the stored table rows");
  ver->add_option("--kmax", kmax, "Largest k to check")->capture_default_str();
  ver->add_option("--q", qfiles, "Q polynomial files overriding the built-in ones");
  add_common(ver);

  auto* scan = app.add_subcommand("scan", "Sign and predecessor scan of Thom series coefficients");
  scan->add_option("--k", k, "Singularity index")->required()->check(CLI::Range(1, 12));
  scan->add_option("--radius", radius, "Box radius")->capture_default_str();
  scan->add_option("--q", qfile, "Q polynomial file (JSON)");
  scan->add_option("--export", export_file, "Write the coefficient table as JSON");
  add_common(scan);

  auto* tp3 = app.add_subcommand("tp3", "k = 3 product formula cross-check");
  tp3->add_option("--radius", radius, "Box radius")->capture_default_str();
  add_common(tp3);

  auto* ggl = app.add_subcommand("ggl", "Degree polynomial and positivity certificate");
  ggl->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 8));
  ggl->add_option("--delta", delta, "delta as p/q (default 1/(n^3(n+1)))");
  ggl->add_option("--q", qfile, "Q polynomial file (JSON)");
  ggl->add_flag("--suite", suite, "Also run the coefficient inequality suite");
  add_common(ggl);

  auto* mdeg = app.add_subcommand("mdeg", "Multidegree of a monomial ideal");
  mdeg->add_option("--ideal", ideal_file, "Ideal file (JSON)")->required();
  mdeg->add_option("--weights", weights_file, "Weight file (JSON)")->required();
  add_common(mdeg);

  auto* oracle = app.add_subcommand("oracle", "Residue against fixed-point localisation");
  oracle->add_option("--k", k, "Number of residue variables")->required()->check(CLI::Range(1, 8));
  oracle->add_option("--n", n, "Number of weights")->required()->check(CLI::Range(1, 8));
  oracle->add_option("--seed", seed, "Random seed")->capture_default_str();
  oracle->add_option("--q", qfile, "Q polynomial file (JSON); random when omitted");
  add_common(oracle);

  auto* res = app.add_subcommand("residue", "Generic iterated residue from a JSON problem");
  res->add_option("--spec", spec_file, "Problem file (JSON)")->required();
  add_common(res);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (*tp) return cmd_tp(common, k, codim, qfile);
    if (*ver) return cmd_verify(common, kmax, qfiles);
    if (*scan) return cmd_scan(common, k, radius, qfile, export_file);
    if (*tp3) return cmd_tp3(common, radius);
    if (*ggl) return cmd_ggl(common, n, delta, qfile, suite);
    if (*mdeg) return cmd_mdeg(common, ideal_file, weights_file);
    if (*oracle) return cmd_oracle(common, k, n, seed, qfile);
    if (*res) return cmd_residue(common, spec_file);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const StabilityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
