#include "qhr/commands.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qhr/brst_ops.hpp"
#include "qhr/derham.hpp"
#include "qhr/errors.hpp"

namespace qhr {

namespace {

using ojson = nlohmann::ordered_json;

int effective_bound(const RunConfig& cfg, const CliOptions& opts) {
  const int n = opts.max_degree.value_or(cfg.max_degree);
  if (n < 0 || n % 2 != 0)
    throw ParseError("max_degree must be even and nonnegative", 0);
  return n;
}

std::string effective_format(const RunConfig& cfg, const CliOptions& opts) {
  const std::string f = opts.format.value_or(cfg.format);
  if (f != "text" && f != "json")
    throw ParseError("format must be text or json", 0);
  return f;
}

void render_text(const ojson& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>()
                                                 : v.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- "
           << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const ojson& rep, const RunConfig& cfg, const CliOptions& opts) {
  std::ostringstream os;
  if (effective_format(cfg, opts) == "json") {
    os << rep.dump(2) << "\n";
  } else {
    render_text(rep, os, 0);
  }
  if (opts.out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + opts.out_path);
    out << os.str();
  }
}

ojson weight_json(const std::vector<long>& w) {
  ojson a = ojson::array();
  for (long x : w) a.push_back(x);
  return a;
}

ojson setup_echo(const ReductionSetup& s) {
  ojson e;
  e["provenance"] = s.provenance;
  for (const auto& [k, v] : s.echo) e[k] = v;
  ojson assumed = ojson::array();
  assumed.push_back("freeness of the group action on the semistable locus");
  assumed.push_back("normality of the reduced variety");
  for (const auto& n : s.assumption_notes) assumed.push_back(n);
  e["assumed"] = assumed;
  return e;
}

long binom_long(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<PolyElement> flatness_moments(const ReductionSetup& s,
                                          const RunConfig& cfg) {
  std::vector<PolyElement> moments = s.classical_moments;
  if (cfg.negative_control == "duplicate-moment" && !moments.empty())
    moments.push_back(moments.front());
  return moments;
}

ojson flatness_json(const FlatnessReport& cert, const ReductionSetup& s) {
  ojson f;
  f["ok"] = cert.ok;
  f["first_failure"] = cert.first_failure;
  ojson actual = ojson::array(), expected = ojson::array();
  for (long a : cert.actual) actual.push_back(a);
  for (const Integer& e : cert.expected)
    expected.push_back(static_cast<long>(e.get_si()));
  f["hilbert_actual"] = actual;
  f["hilbert_expected"] = expected;
  if (s.flatness_target) f["dimension_target"] = *s.flatness_target;
  return f;
}

// All torus weights realized by monomials of degree <= bound, sorted.
std::vector<std::vector<long>> auto_sectors(const ReductionSetup& s,
                                            int bound) {
  std::set<std::vector<long>> out;
  const int rank = s.torus_rank();
  std::vector<long> acc(rank, 0);
  // gamma_j = alpha_j - beta_j ranges over |gamma|_1 <= bound.
  std::function<void(int, int)> rec = [&](int j, int budget) {
    if (j == s.n_vars) {
      out.insert(acc);
      return;
    }
    for (int g = -budget; g <= budget; ++g) {
      for (int t = 0; t < rank; ++t) acc[t] += g * s.variable_weights[j][t];
      rec(j + 1, budget - std::abs(g));
      for (int t = 0; t < rank; ++t) acc[t] -= g * s.variable_weights[j][t];
    }
  };
  rec(0, bound);
  return {out.begin(), out.end()};
}

std::vector<std::vector<long>> parse_weights_option(const std::string& text,
                                                    int rank) {
  std::vector<std::vector<long>> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    std::vector<long> w;
    std::istringstream pin(part);
    std::string num;
    while (std::getline(pin, num, ',')) {
      try {
        w.push_back(std::stol(num));
      } catch (const std::exception&) {
        throw ParseError("bad weight entry '" + num + "'", 0);
      }
    }
    if (static_cast<int>(w.size()) != rank)
      throw ParseError("weight entries must have " + std::to_string(rank) +
                           " components",
                       0);
    out.push_back(w);
  }
  if (out.empty()) throw ParseError("empty weight list", 0);
  return out;
}

std::vector<std::vector<long>> sectors_for(const ReductionSetup& s,
                                           const RunConfig& cfg,
                                           const CliOptions& opts, int bound) {
  if (opts.weights && *opts.weights != "auto")
    return parse_weights_option(*opts.weights, s.torus_rank());
  if (!opts.weights && cfg.weight) {
    if (static_cast<int>(cfg.weight->size()) != s.torus_rank())
      throw ParseError("config weight has wrong length", 0);
    return {*cfg.weight};
  }
  return auto_sectors(s, bound);
}

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

ojson checks_json(const std::vector<Check>& checks) {
  ojson a = ojson::array();
  for (const auto& c : checks) {
    ojson e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    if (!c.detail.empty()) e["detail"] = c.detail;
    a.push_back(e);
  }
  return a;
}

// Structural identities of the complex, evaluated exactly on a small
// deterministic sample of basis elements.
std::vector<Check> identity_checks(const ReductionSetup& s,
                                   const BRSTElement& Qc) {
  std::vector<Check> out;
  const auto bad = jacobi_check(s.lie);
  out.push_back({"jacobi-identity", !bad.has_value(),
                 bad ? "violated at basis triple" : ""});
  std::string reason;
  const bool char_ok = validate_character(s.lie, s.character, &reason);
  out.push_back({"character-valid", char_ok, reason});
  out.push_back(
      {"q-squared-zero", brst_mul(Qc, Qc).is_zero(), ""});

  std::vector<BRSTElement> sample;
  const std::vector<long> zero(s.torus_rank(), 0);
  for (int n = -1; n <= 1; ++n) {
    const auto basis =
        enumerate_basis(s.n_vars, s.lie.dim, n, zero, s.variable_weights, 2);
    for (size_t i = 0; i < basis.size() && i < 6; ++i) {
      sample.push_back(BRSTElement::tensor(
          WeylElement::monomial(s.n_vars, basis[i].wm, Rational(1)),
          GhostElement::monomial(s.lie.dim, basis[i].gm, Rational(1))));
    }
  }
  bool split_ok = true, dp_ok = true, dm_ok = true, anti_ok = true;
  for (const auto& el : sample) {
    const BRSTElement dp = apply_d_plus(s, el);
    const BRSTElement dm = apply_d_minus(s, el);
    if (!(apply_ad_Qc(Qc, el) - dp - dm).is_zero()) split_ok = false;
    if (!apply_d_plus(s, dp).is_zero()) dp_ok = false;
    if (!apply_d_minus(s, dm).is_zero()) dm_ok = false;
    if (!(apply_d_plus(s, dm) + apply_d_minus(s, dp)).is_zero())
      anti_ok = false;
  }
  out.push_back({"splitting-identity", split_ok, ""});
  out.push_back({"d-plus-squared-zero", dp_ok, ""});
  out.push_back({"d-minus-squared-zero", dm_ok, ""});
  out.push_back({"d-plus-minus-anticommute", anti_ok, ""});
  return out;
}

ojson cell_entry(const std::vector<long>& weight, int n, int bound,
                 const CohomologyCell& cell) {
  ojson e;
  e["weight"] = weight_json(weight);
  e["ghost_degree"] = n;
  e["bound"] = bound;
  e["degree"] = cell.degree;
  e["dim"] = cell.dim;
  e["stable"] = cell.stable;
  return e;
}

ojson poincare_json(const PoincarePolynomial& p) {
  ojson out;
  ojson coeffs = ojson::array();
  Integer at_one(0);
  bool palindromic = true;
  for (int k = 0; k <= p.degree(); ++k) {
    coeffs.push_back(static_cast<long>(p.coeff(k).get_si()));
    at_one += p.coeff(k);
    if (p.coeff(k) != p.coeff(p.degree() - k)) palindromic = false;
  }
  out["coefficients"] = coeffs;
  out["value_at_one"] = static_cast<long>(at_one.get_si());
  out["palindromic"] = palindromic;
  return out;
}

// Per-sector cohomology across all ghost degrees, parallel over sectors,
// merged in sector order.
std::vector<std::vector<CohomologyReport>> sector_cohomology(
    const ReductionSetup& s, const BRSTElement& Qc,
    const std::vector<std::vector<long>>& sectors, int bound, int jobs) {
  const int g = s.lie.dim;
  std::vector<std::vector<CohomologyReport>> results(sectors.size());
  std::atomic<size_t> next(0);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= sectors.size()) return;
      try {
        std::vector<CohomologyReport> reps;
        for (int n = -g; n <= g; ++n)
          reps.push_back(brst_cohomology(s, Qc, n, sectors[i], bound));
        results[i] = std::move(reps);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  const int n_threads = std::max(1, jobs);
  std::vector<std::thread> threads;
  for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace

int cmd_validate(const RunConfig& cfg, const CliOptions& opts) {
  const ReductionSetup s = build_setup(cfg);
  std::vector<Check> checks;
  const auto bad = jacobi_check(s.lie);
  checks.push_back({"jacobi-identity", !bad.has_value(), ""});
  std::string reason;
  checks.push_back(
      {"character-valid", validate_character(s.lie, s.character, &reason),
       reason});
  if (cfg.kind == "hypertoric") {
    checks.push_back({"unimodular", true, "checked at construction"});
    checks.push_back({"full-row-rank", true, "checked at construction"});
    HypertoricData h{cfg.matrix, cfg.theta, cfg.c};
    const SmoothnessResult sm = check_hypertoric_smoothness(h);
    std::string detail;
    if (!sm.ok) {
      std::ostringstream os;
      os << "stability parameter lies in the span of columns {";
      for (size_t i = 0; i < sm.witness->size(); ++i)
        os << (i ? "," : "") << (*sm.witness)[i];
      os << "}";
      detail = os.str();
    }
    checks.push_back({"smoothness-criterion", sm.ok, detail});
  } else {
    checks.push_back({"stability", true, "checked at construction"});
  }

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.ok;
  ojson rep;
  rep["command"] = "validate";
  rep["setup_echo"] = setup_echo(s);
  rep["checks"] = checks_json(checks);
  rep["verdict"] = all_ok ? "pass" : "fail";
  emit(rep, cfg, opts);
  return all_ok ? 0 : 2;
}

int cmd_flatness(const RunConfig& cfg, const CliOptions& opts) {
  const ReductionSetup s = build_setup(cfg);
  const int bound = effective_bound(cfg, opts);
  const FlatnessReport cert =
      koszul_flatness_certificate(flatness_moments(s, cfg), s.n_vars, bound);
  ojson rep;
  rep["command"] = "flatness";
  rep["setup_echo"] = setup_echo(s);
  if (!cfg.negative_control.empty())
    rep["negative_control"] = cfg.negative_control;
  rep["flatness"] = flatness_json(cert, s);
  rep["verdict"] = cert.ok ? "pass" : "fail";
  emit(rep, cfg, opts);
  return cert.ok ? 0 : 1;
}

int cmd_brst(const RunConfig& cfg, const CliOptions& opts) {
  const ReductionSetup s = build_setup(cfg);
  if (!s.lie.is_abelian())
    throw NonabelianInvariants(
        "the differential does not preserve torus-weight sectors for a "
        "nonabelian group; use verify, which reports the structural "
        "identities instead");
  const int bound = effective_bound(cfg, opts);
  const BRSTElement Qc = build_Qc(s);
  const std::vector<std::vector<long>> sectors =
      sectors_for(s, cfg, opts, bound);
  const auto results = sector_cohomology(s, Qc, sectors, bound, opts.jobs);
  ojson rep;
  rep["command"] = "brst";
  rep["setup_echo"] = setup_echo(s);
  ojson tables = ojson::array();
  for (size_t i = 0; i < sectors.size(); ++i)
    for (const auto& r : results[i])
      for (const auto& cell : r.cells)
        tables.push_back(cell_entry(sectors[i], r.ghost_degree, bound, cell));
  rep["tables"] = tables;
  rep["verdict"] = "computed";
  emit(rep, cfg, opts);
  return 0;
}

int cmd_oracle(const RunConfig& cfg, const CliOptions& opts) {
  const ReductionSetup s = build_setup(cfg);
  const int bound = effective_bound(cfg, opts);
  std::vector<std::vector<long>> sectors;
  if (opts.weights && *opts.weights != "auto") {
    sectors = parse_weights_option(*opts.weights, s.torus_rank());
  } else if (cfg.weight) {
    sectors = {*cfg.weight};
  } else {
    sectors = {std::vector<long>(s.torus_rank(), 0)};
  }
  ojson rep;
  rep["command"] = "oracle";
  rep["setup_echo"] = setup_echo(s);
  ojson tables = ojson::array();
  for (const auto& w : sectors) {
    const std::vector<long> dims = lc_oracle(s, w, bound);
    ojson e;
    e["weight"] = weight_json(w);
    e["bound"] = bound;
    ojson d = ojson::array();
    for (long x : dims) d.push_back(x);
    e["dims_by_even_degree"] = d;
    tables.push_back(e);
  }
  rep["tables"] = tables;
  rep["verdict"] = "computed";
  emit(rep, cfg, opts);
  return 0;
}

int cmd_predict(const RunConfig& cfg, const CliOptions& opts) {
  const ReductionSetup s = build_setup(cfg);
  ojson rep;
  rep["command"] = "predict";
  rep["setup_echo"] = setup_echo(s);
  rep["predicted"] = poincare_json(predicted_poincare(s));
  rep["verdict"] = "computed";
  emit(rep, cfg, opts);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const CliOptions& opts) {
  const ReductionSetup s = build_setup(cfg);
  const int bound = effective_bound(cfg, opts);
  const BRSTElement Qc = build_Qc(s);

  std::vector<Check> checks = identity_checks(s, Qc);
  const FlatnessReport cert =
      koszul_flatness_certificate(flatness_moments(s, cfg), s.n_vars, bound);
  checks.push_back({"koszul-flatness", cert.ok,
                    cert.ok ? ""
                            : "first failure at degree " +
                                  std::to_string(cert.first_failure)});
  bool checks_ok = true;
  for (const auto& c : checks) checks_ok = checks_ok && c.ok;

  const PoincarePolynomial predicted = predicted_poincare(s);

  ojson rep;
  rep["command"] = "verify";
  rep["setup_echo"] = setup_echo(s);
  rep["bound"] = bound;
  rep["checks"] = checks_json(checks);
  if (!cfg.negative_control.empty())
    rep["negative_control"] = cfg.negative_control;
  rep["flatness"] = flatness_json(cert, s);
  rep["predicted"] = poincare_json(predicted);

  bool mismatch = false;
  if (s.lie.is_abelian()) {
    rep["mode"] = "full";
    const int g = s.lie.dim;
    const std::vector<long> zero(s.torus_rank(), 0);
    const std::vector<long> lc0 = lc_oracle(s, zero, bound);
    ojson lc = ojson::array();
    for (long x : lc0) lc.push_back(x);
    rep["lc_invariants"] = lc;

    const std::vector<std::vector<long>> sectors =
        sectors_for(s, cfg, opts, bound);
    const auto results = sector_cohomology(s, Qc, sectors, bound, opts.jobs);

    ojson tables = ojson::array();
    ojson mismatches = ojson::array();
    for (size_t i = 0; i < sectors.size(); ++i) {
      const bool is_zero_weight =
          sectors[i] == std::vector<long>(s.torus_rank(), 0);
      for (const auto& r : results[i]) {
        for (const auto& cell : r.cells) {
          ojson e = cell_entry(sectors[i], r.ghost_degree, bound, cell);
          if (cell.stable) {
            const long expected =
                is_zero_weight
                    ? binom_long(g, r.ghost_degree) * lc0[cell.degree / 2]
                    : 0L;
            e["expected"] = expected;
            e["match"] = (cell.dim == expected);
            if (cell.dim != expected) {
              mismatch = true;
              ojson m;
              m["weight"] = weight_json(sectors[i]);
              m["ghost_degree"] = r.ghost_degree;
              m["bound"] = bound;
              m["degree"] = cell.degree;
              m["got"] = cell.dim;
              m["expected"] = expected;
              mismatches.push_back(m);
            }
          }
          tables.push_back(e);
        }
      }
    }
    rep["tables"] = tables;
    rep["mismatches"] = mismatches;
  } else {
    rep["mode"] = "identities-only";
    rep["notice"] =
        "nonabelian group: sector-by-sector comparison is skipped; "
        "structural identities, the flatness certificate and the "
        "predicted multiplicities are reported instead";
    rep["tables"] = ojson::array();
  }

  const bool pass = checks_ok && !mismatch;
  rep["verdict"] = pass ? "pass" : "fail";
  emit(rep, cfg, opts);
  return pass ? 0 : 1;
}

int run_command(const std::string& command, const std::string& config_path,
                const CliOptions& opts) {
  try {
    const RunConfig cfg = parse_config_file(config_path);
    if (command == "validate") return cmd_validate(cfg, opts);
    if (command == "flatness") return cmd_flatness(cfg, opts);
    if (command == "brst") return cmd_brst(cfg, opts);
    if (command == "oracle") return cmd_oracle(cfg, opts);
    if (command == "predict") return cmd_predict(cfg, opts);
    if (command == "verify") return cmd_verify(cfg, opts);
    std::cerr << "unknown command " << command << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const UnknownFamily& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const ContainmentViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qhr
