#include "padicft/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>

#include "padicft/attainability.hpp"
#include "padicft/fourier_matrix.hpp"
#include "padicft/json_io.hpp"
#include "padicft/qcalc.hpp"
#include "padicft/schwartz.hpp"

namespace padicft::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kSeed = 20260115;

CycNumber random_element(const ContextPtr& ctx, std::mt19937_64& rng, long bound, bool allow_den) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> num(static_cast<std::size_t>(ctx->degree()));
  for (auto& c : num) c = coeff(rng);
  Integer den = 1;
  if (allow_den) den = std::uniform_int_distribution<long>(1, 6)(rng);
  return CycNumber(ctx, std::move(num), den);
}

SchwartzVec random_function(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::vector<CycNumber> coeffs;
  for (long i = 0; i < ctx->order(); ++i) coeffs.push_back(random_element(ctx, rng, 3, true));
  return SchwartzVec(ctx, std::move(coeffs));
}

CheckResult make_check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

std::string describe_failures(const IdentityReport& report) {
  if (report.passed()) return "d=" + std::to_string(report.dim);
  const auto& f = report.failures.front();
  return std::to_string(report.failures.size()) + " failing entries, first " + f.identity + " at (" +
         std::to_string(f.row) + "," + std::to_string(f.col) + ")";
}

std::string join_indices(const std::vector<long>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size() && i < 8; ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  if (idx.size() > 8) out += ",...";
  return out;
}

void identities_suite(long p, int r, std::vector<CheckResult>& out) {
  const auto ctx = CyclotomicContext::make(p, 2 * r);
  const long d = ctx->order();

  {
    const long top = std::min<long>(d, 24);
    const QBinomTable table(top);
    const LaurentPoly q = LaurentPoly::monomial(1, 1);
    bool ok = true;
    for (long n = 0; n <= top && ok; ++n) {
      const LaurentPoly full = pochhammer(n, q);
      for (long k = 0; k <= n && ok; ++k) ok = table(n, k) * pochhammer(k, q) * pochhammer(n - k, q) == full;
    }
    out.push_back(make_check("q_binomial_factorial_ratio", ok, "n <= " + std::to_string(top)));
  }
  {
    const long top = std::min<long>(d, 32);
    bool ok = true;
    for (long n = 0; n <= top && ok; ++n) {
      ok = q_binomial_theorem_coeffs(n) == pochhammer_in_x(n, LaurentPoly::monomial(1, 1));
    }
    out.push_back(make_check("q_binomial_theorem", ok, "n <= " + std::to_string(top)));
  }
  {
    const auto sym_dim = static_cast<std::size_t>(std::min<long>(d, 16));
    const auto report = verify_ldu_decomposition(sym_dim);
    out.push_back(make_check("ldu_decomposition_symbolic", report.passed(), describe_failures(report)));
  }
  {
    const auto report = verify_lower_factor_identity(static_cast<std::size_t>(d), ctx);
    out.push_back(make_check("lower_factor_identity_at_zeta", report.passed(), describe_failures(report)));
  }
  const QBinomTable table(d - 1);
  {
    std::vector<long> bad;
    for (long n = 0; n < d; ++n) {
      if (!omega_roots_check(ctx, n, table).agree()) bad.push_back(n);
    }
    out.push_back(make_check("lacunary_sum_root_average", bad.empty(), bad.empty() ? "all n" : join_indices(bad)));
  }
  {
    std::vector<long> bad;
    for (long n = 0; n < d; ++n) {
      const auto report = check_cyclotomic_divisibility(p, r, n, table);
      if (!report.divides || !(report.divisor * report.quotient == report.dividend)) bad.push_back(n);
    }
    out.push_back(make_check("cyclotomic_divisibility", bad.empty(), bad.empty() ? "all n" : join_indices(bad)));
  }
}

void matrices_suite(long p, int r, std::vector<CheckResult>& out) {
  const auto ctx = CyclotomicContext::make(p, 2 * r);
  const auto d = static_cast<std::size_t>(ctx->order());
  const auto ldu = verify_ldu_decomposition(d, ctx);
  out.push_back(make_check("ldu_decomposition_at_zeta", ldu.passed(), describe_failures(ldu)));
  const auto structure = verify_matrix_structure(ctx);
  out.push_back(make_check("matrix_structure", structure.passed(), describe_failures(structure)));
}

void valuations_suite(long p, int r, std::vector<CheckResult>& out) {
  const auto ctx = CyclotomicContext::make(p, 2 * r);
  const long d = ctx->order();
  {
    std::vector<long> bad;
    PValuation running(0);
    for (long n = 0; n < d; ++n) {
      if (n > 0) running = running + cyc_valuation(CycNumber::one(ctx) - CycNumber::zeta_power(ctx, n));
      const Rational scaled = running.value() * ctx->degree();
      if (!(scaled == beta_p(p, n))) bad.push_back(n);
    }
    out.push_back(make_check("pochhammer_valuation_digit_formula", bad.empty(), join_indices(bad)));
  }
  {
    const auto report = check_beta_bounds(p, r);
    out.push_back(make_check("beta_bounds", report.passed(),
                             "worst slack " + to_fraction_string(report.worst_lower_slack) + " / " +
                                 to_fraction_string(report.worst_upper_slack)));
  }
  const LevelData data = LevelData::compute(ctx);
  {
    const auto report = check_omega_lower_bound(data);
    out.push_back(make_check("lacunary_sum_lower_bound", report.passed()));
  }
  {
    std::mt19937_64 rng(kSeed);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      const CycNumber a = random_element(ctx, rng, 20, false);
      if (a.is_zero()) continue;
      const Rational via_norm(Rational(p_adic_order(cyc_norm(a), p)) / ctx->degree());
      ok = cyc_valuation(a) == PValuation(via_norm);
    }
    out.push_back(make_check("valuation_norm_oracle", ok, "100 random elements"));
  }
  {
    const auto report = gamma_r(data);
    std::string detail = "gamma exponent " + report.gamma_exponent.to_string();
    if (!report.consistent()) {
      detail += "; dual " + join_indices(report.dual_valuation_failures) + " relation " +
                join_indices(report.dual_relation_failures) + " average " + join_indices(report.average_failures);
    }
    out.push_back(make_check("dual_criterion_consistency", report.consistent(), detail));
  }
  {
    const auto report = check_generating_function(data);
    out.push_back(make_check("dual_generating_function", report.passed(), join_indices(report.mismatches)));
  }
  {
    const auto report = check_outside_critical_interval(data, Rational(1, 2), Rational(0));
    out.push_back(make_check("outside_critical_interval", report.passed(),
                             std::to_string(report.records.size()) + " indices outside the critical interval"));
  }
}

void fourier_suite(long p, int r, std::vector<CheckResult>& out) {
  const auto ctx = CyclotomicContext::make(p, 2 * r);
  const long d = ctx->order();
  std::mt19937_64 rng(kSeed + 1);
  {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) {
      const SchwartzVec phi = random_function(ctx, rng);
      ok = fourier(fourier(phi)) == reflect(phi);
    }
    out.push_back(make_check("fourier_inversion", ok, "5 random functions"));
  }
  {
    const SchwartzVec one = indicator_of_integers(ctx);
    out.push_back(make_check("indicator_fixed_by_fourier", fourier(one) == one));
  }
  {
    bool ok = true;
    for (long i = 0; i < d && ok; ++i) {
      const SchwartzVec v = SchwartzVec::basis(ctx, i);
      const auto sm = support_mesh(v);
      const auto fsm = support_mesh(fourier(v));
      ok = fsm.support == sm.mesh && fsm.mesh == sm.support;
    }
    out.push_back(make_check("support_mesh_exchange", ok, "all basis vectors"));
  }
  {
    const long block = ipow(p, r);
    auto commutes = [&](const HeisenbergElement& g, const SchwartzVec& phi) {
      return fourier(heisenberg_act(g, phi)) == heisenberg_act(fourier_conjugate(g), fourier(phi));
    };
    bool ok = true;
    std::string detail;
    const SchwartzVec phi = random_function(ctx, rng);
    if (d <= 16) {
      for (long a = 0; a < d && ok; ++a) {
        for (long k = 0; k < d && ok; ++k) {
          for (long j = 0; j < d && ok; ++j) {
            ok = commutes({make_rational(a, d), make_rational(k, block), make_rational(j, block)}, phi);
          }
        }
      }
      detail = "full grid";
    } else {
      std::uniform_int_distribution<long> idx(0, d - 1);
      for (int i = 0; i < 100 && ok; ++i) {
        ok = commutes({make_rational(idx(rng), d), make_rational(idx(rng), block), make_rational(idx(rng), block)}, phi);
      }
      detail = "100 random triples";
    }
    out.push_back(make_check("heisenberg_commutation", ok, detail));
  }
  {
    const auto report = gamma_r(ctx);
    const Rational e = report.gamma_exponent.value();
    auto built = build_witness(ctx, e);
    bool ok = std::holds_alternative<WitnessRecord>(built);
    if (ok) {
      const auto& w = std::get<WitnessRecord>(built);
      ok = w.routes_agree && verify_witness(w).passed();
    }
    out.push_back(make_check("witness_at_gamma", ok, "e = " + to_fraction_string(e)));
    const Rational above = e + Rational(1, 2 * ctx->degree());
    const bool refused = std::holds_alternative<NotAttainable>(build_witness(ctx, above));
    out.push_back(make_check("witness_refused_above_gamma", refused, "e = " + to_fraction_string(above)));
  }
}

void require_prime(long p) {
  if (!is_prime(p)) throw UsageError("--p must be prime, got " + std::to_string(p));
}

void require_budget(long p, int r, long max_dim, const std::string& what) {
  const long d = ipow(p, 2 * r);
  if (d > max_dim) {
    std::ostringstream msg;
    msg << what << " at p=" << p << ", r=" << r << " needs dimension d = p^(2r) = " << d
        << " with ring degree " << (p - 1) * ipow(p, 2 * r - 1) << "; the exact-arithmetic budget allows d <= "
        << max_dim;
    throw BudgetError(msg.str());
  }
}

int write_output(const RunConfig& config, const std::string& payload, std::ostream& out, std::ostream& err) {
  if (config.out_path.empty()) {
    out << payload;
    return kOk;
  }
  std::ofstream file(config.out_path);
  if (!file) {
    err << "cannot open " << config.out_path << " for writing\n";
    return kCheckFailed;
  }
  file << payload;
  return kOk;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, long p, int r) {
  std::vector<CheckResult> out;
  if (r < 1) throw std::invalid_argument("verification suites need r >= 1");
  const bool all = suite == "all";
  if (all || suite == "identities") identities_suite(p, r, out);
  if (all || suite == "matrices") matrices_suite(p, r, out);
  if (all || suite == "valuations") valuations_suite(p, r, out);
  if (all || suite == "fourier") fourier_suite(p, r, out);
  if (out.empty()) throw std::invalid_argument("unknown suite " + suite);
  return out;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_prime(config.p);
  if (!config.r) throw UsageError("verify needs --r");
  if (*config.r < 1) throw UsageError("verify needs --r >= 1");
  static const std::vector<std::string> suites = {"identities", "matrices", "valuations", "fourier", "all"};
  if (std::find(suites.begin(), suites.end(), config.suite) == suites.end()) {
    throw UsageError("unknown suite " + config.suite);
  }
  require_budget(config.p, *config.r, kMaxVerifyDimension, "verify");
  const auto checks = run_suite(config.suite, config.p, *config.r);
  const bool passed = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  std::string payload;
  if (config.format == "csv") {
    payload = "check,passed,detail\n";
    for (const auto& c : checks) {
      payload += c.name + "," + (c.passed ? "true" : "false") + "," + csv_escape(c.detail) + "\n";
    }
  } else {
    json items = json::array();
    for (const auto& c : checks) items.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json report = {{"command", "verify"}, {"p", config.p}, {"r", *config.r}, {"suite", config.suite},
                   {"passed", passed},    {"checks", items}};
    payload = report.dump(2) + "\n";
  }
  const int io = write_output(config, payload, out, err);
  if (io != kOk) return io;
  for (const auto& c : checks) {
    if (!c.passed) err << "FAILED " << c.name << ": " << c.detail << "\n";
  }
  return passed ? kOk : kCheckFailed;
}

int cmd_gamma(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_prime(config.p);
  const int r_max = config.r_max.value_or(config.r.value_or(0));
  if (r_max < 1) throw UsageError("gamma needs --rmax >= 1");
  require_budget(config.p, r_max, kMaxGammaDimension, "gamma");
  json rows = json::array();
  json reports = json::array();
  std::string csv = "r,d,gamma_exponent,argmin_n\n";
  bool consistent = true;
  bool monotone = true;
  PValuation previous(0);
  for (int r = 1; r <= r_max; ++r) {
    const auto report = gamma_r(CyclotomicContext::make(config.p, 2 * r), config.delta);
    consistent = consistent && report.consistent();
    if (report.gamma_exponent < previous) monotone = false;
    previous = report.gamma_exponent;
    const bool in_critical = report.argmin_n >= report.critical.first && report.argmin_n <= report.critical.second;
    rows.push_back({{"r", r},
                    {"d", report.d},
                    {"gamma_exponent", report.gamma_exponent.to_string()},
                    {"argmin_n", report.argmin_n},
                    {"critical_interval", {report.critical.first, report.critical.second}},
                    {"argmin_in_critical_interval", in_critical},
                    {"gamma_approx", std::pow(static_cast<double>(config.p), -report.gamma_exponent.value().get_d())}});
    reports.push_back(to_json(report));
    csv += std::to_string(r) + "," + std::to_string(report.d) + "," + report.gamma_exponent.to_string() + "," +
           std::to_string(report.argmin_n) + "\n";
  }
  std::string payload;
  if (config.format == "csv") {
    payload = csv;
  } else {
    json doc = {{"command", "gamma"},
                {"p", config.p},
                {"delta", to_fraction_string(config.delta)},
                {"note", "gamma_approx is a non-normative floating-point convenience"},
                {"rows", rows},
                {"gamma_non_increasing", monotone},
                {"consistent", consistent},
                {"reports", reports}};
    payload = doc.dump(2) + "\n";
  }
  const int io = write_output(config, payload, out, err);
  if (io != kOk) return io;
  if (!consistent) err << "internal consistency checks failed\n";
  return consistent ? kOk : kCheckFailed;
}

int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_prime(config.p);
  if (!config.r || *config.r < 0) throw UsageError("witness needs --r >= 0");
  if (!config.e) throw UsageError("witness needs --e");
  if (*config.e < 0) throw UsageError("--e must be nonnegative");
  require_budget(config.p, *config.r, kMaxVerifyDimension, "witness");
  const auto ctx = CyclotomicContext::make(config.p, 2 * *config.r);
  auto built = build_witness(ctx, *config.e);
  json doc;
  int code = kOk;
  if (const auto* failure = std::get_if<NotAttainable>(&built)) {
    doc = {{"status", "not_attainable"},
           {"p", config.p},
           {"r", *config.r},
           {"e", to_fraction_string(*config.e)},
           {"first_failing_n", failure->n},
           {"deficit", to_fraction_string(failure->deficit)}};
    code = kNotAttainable;
  } else {
    const auto& w = std::get<WitnessRecord>(built);
    const auto verification = verify_witness(w);
    const bool ok = verification.passed() && w.routes_agree;
    doc = to_json(w);
    doc["status"] = ok ? "attained" : "inconsistent";
    doc["verification"] = to_json(verification);
    code = ok ? kOk : kCheckFailed;
  }
  const int io = write_output(config, doc.dump(2) + "\n", out, err);
  if (io != kOk) return io;
  if (code == kNotAttainable) err << "epsilon = p^-" << to_fraction_string(*config.e) << " is not attainable\n";
  if (code == kCheckFailed) err << "witness failed independent verification\n";
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite-level p-adic Fourier analysis: identities, gamma_r tables and witnesses"};
  app.require_subcommand(1);
  RunConfig config;
  std::string e_text;
  std::string delta_text;
  std::optional<int> r;
  std::optional<int> r_max;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", config.p, "prime p")->capture_default_str();
    sub->add_option("--delta", delta_text, "critical-interval width, a fraction in (0,1)");
    sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out_path, "output file (default stdout)");
  };
  auto* verify = app.add_subcommand("verify", "run identity and property suites");
  add_common(verify);
  verify->add_option("--r", r, "level r");
  verify->add_option("--suite", config.suite, "identities, matrices, valuations, fourier or all");
  auto* gamma = app.add_subcommand("gamma", "tabulate exact gamma_r exponents");
  add_common(gamma);
  gamma->add_option("--rmax", r_max, "largest level");
  gamma->add_option("--r", r, "single level (same as --rmax)");
  auto* witness = app.add_subcommand("witness", "build and verify an explicit approximant");
  add_common(witness);
  witness->add_option("--r", r, "level r");
  witness->add_option("--e", e_text, "epsilon exponent as num/den (eps = p^-e)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    config.r = r;
    config.r_max = r_max;
    if (!e_text.empty()) config.e = parse_fraction(e_text);
    if (!delta_text.empty()) {
      config.delta = parse_fraction(delta_text);
      if (config.delta <= 0 || config.delta >= 1) throw UsageError("--delta must lie strictly between 0 and 1");
    }
    if (verify->parsed()) {
      config.command = "verify";
      return cmd_verify(config, out, err);
    }
    if (gamma->parsed()) {
      config.command = "gamma";
      return cmd_gamma(config, out, err);
    }
    config.command = "witness";
    return cmd_witness(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    err << "refused: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace padicft::cli
