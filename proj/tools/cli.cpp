#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json_writer.hpp"
#include "twr/errors.hpp"
#include "twr/gamma_rep.hpp"
#include "twr/lorentz.hpp"
#include "twr/thomas_wigner.hpp"
#include "twr/verify.hpp"

namespace twr::cli {

namespace {

// Bad user input; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw UsageError("invalid number '" + std::string(s) + "' in " + std::string(what));
  }
  return x;
}

std::vector<double> parse_csv(const std::string& text, std::string_view what) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(std::string_view(text).substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_arity(const std::vector<double>& v, int dim, std::string_view what) {
  if (static_cast<int>(v.size()) != dim - 1) {
    throw UsageError(std::string(what) + " needs " + std::to_string(dim - 1) +
                     " components for --dim " + std::to_string(dim) + ", got " +
                     std::to_string(v.size()));
  }
}

struct Common {
  int dim = 4;
  bool json = false;
  double tol = kDefaultTol;
  bool tol_given = false;
};

double resolve_tolerance(const Common& c, const Environment& env) {
  double tol = kDefaultTol;
  if (c.tol_given) {
    tol = c.tol;
  } else if (env.tolerance) {
    tol = parse_double(*env.tolerance, "TWR_TOL");
  }
  if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
  return tol;
}

void check_dim(int dim) {
  if (dim != 3 && dim != 4) throw UsageError("--dim must be 3 or 4");
}

std::string fmt17(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

void write_vector(JsonWriter& j, const SpacetimeVector& v) { j.array(v.components()); }

int cmd_angle(const std::string& v_text, const std::string& w_text, const Common& c,
              const Environment& env, std::ostream& out) {
  check_dim(c.dim);
  const double tol = resolve_tolerance(c, env);
  const auto vs = parse_csv(v_text, "--v");
  const auto ws = parse_csv(w_text, "--w");
  require_arity(vs, c.dim, "--v");
  require_arity(ws, c.dim, "--w");

  const TwResult r = tw_angle(vs, ws, tol);
  const double psi_deg = r.psi_signed * 180.0 / std::numbers::pi;

  if (c.json) {
    JsonWriter j;
    j.begin_object();
    j.key("cos_psi").value(r.cos_psi);
    j.key("psi_rad").value(r.psi_signed);
    j.key("psi_deg").value(psi_deg);
    j.key("gamma_uv").value(r.gamma_uv);
    j.key("gamma_uw").value(r.gamma_uw);
    j.key("gamma_vw").value(r.gamma_vw);
    j.key("sigma_sq").value(r.sigma_sq);
    j.key("plane").begin_array();
    write_vector(j, r.v_perp);
    write_vector(j, r.w_perp);
    j.end_array();
    j.key("degenerate").value(r.degenerate);
    j.key("cos_psi_oracle").value(r.cos_psi_oracle);
    j.end_object();
    out << j.str() << '\n';
  } else {
    out << "cos_psi        " << fmt17(r.cos_psi) << '\n'
        << "cos_psi_oracle " << fmt17(r.cos_psi_oracle) << '\n'
        << "psi_rad        " << fmt17(r.psi_signed) << '\n'
        << "psi_deg        " << fmt17(psi_deg) << '\n'
        << "gamma_uv       " << fmt17(r.gamma_uv) << '\n'
        << "gamma_uw       " << fmt17(r.gamma_uw) << '\n'
        << "gamma_vw       " << fmt17(r.gamma_vw) << '\n'
        << "sigma_sq       " << fmt17(r.sigma_sq) << '\n'
        << "plane          v_perp " << r.v_perp.to_string() << ", w_perp "
        << r.w_perp.to_string() << '\n'
        << "degenerate     " << (r.degenerate ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_boost(const std::string& v_text, const Common& c, const Environment& env,
              std::ostream& out) {
  check_dim(c.dim);
  const double tol = resolve_tolerance(c, env);
  const auto vs = parse_csv(v_text, "--v");
  require_arity(vs, c.dim, "--v");

  const SpacetimeVector u = SpacetimeVector::rest(c.dim);
  const SpacetimeVector v = four_velocity(vs);
  const LorentzMatrix m = boost_matrix(u, v, tol);
  const double gamma = gamma_factor(u, v, tol);
  const double rapidity = hyperbolic_angle(u, v, tol);
  // Identity on the (n-2)-dimensional complement of the boost plane.
  const double cosh_from_trace = (m.trace() - (c.dim - 2)) / 2.0;

  if (c.json) {
    JsonWriter j;
    j.begin_object();
    j.key("matrix").begin_array();
    for (int i = 0; i < m.dim(); ++i) {
      j.begin_array();
      for (int k = 0; k < m.dim(); ++k) j.value(m(i, k));
      j.end_array();
    }
    j.end_array();
    j.key("four_velocity");
    write_vector(j, v);
    j.key("gamma").value(gamma);
    j.key("rapidity").value(rapidity);
    j.key("cosh_rapidity_from_trace").value(cosh_from_trace);
    j.end_object();
    out << j.str() << '\n';
  } else {
    out << "boost matrix (rest -> " << v.to_string() << "):\n";
    for (int i = 0; i < m.dim(); ++i) {
      out << "  ";
      for (int k = 0; k < m.dim(); ++k) out << std::setw(24) << fmt17(m(i, k));
      out << '\n';
    }
    out << "gamma                    " << fmt17(gamma) << '\n'
        << "rapidity                 " << fmt17(rapidity) << '\n'
        << "cosh(rapidity) via trace " << fmt17(cosh_from_trace) << '\n';
  }
  return kOk;
}

int cmd_verify(std::int64_t cases, std::uint64_t seed, const Common& c, const Environment& env,
               std::ostream& out, std::ostream& err) {
  check_dim(c.dim);
  if (cases < 1) throw UsageError("--cases must be >= 1");
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.cases = static_cast<std::uint64_t>(cases);
  cfg.dim = c.dim;
  cfg.tol = resolve_tolerance(c, env);

  const auto results = run_verification(cfg);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (c.json) {
    JsonWriter j;
    j.begin_object();
    j.key("seed").value(cfg.seed);
    j.key("cases").value(cfg.cases);
    j.key("dim").value(cfg.dim);
    j.key("suites").begin_array();
    for (const auto& r : results) {
      j.begin_object();
      j.key("name").value(r.name);
      j.key("cases").value(r.cases);
      j.key("max_error").value(r.max_error);
      j.key("tolerance").value(r.tolerance);
      j.key("passed").value(r.passed);
      j.key("first_failure");
      if (r.passed) {
        j.null();
      } else {
        j.value(r.first_failure);
      }
      j.end_object();
    }
    j.end_array();
    j.key("passed").value(all);
    j.end_object();
    out << j.str() << '\n';
  } else {
    out << "seed " << cfg.seed << ", " << cfg.cases << " cases per suite, dim " << cfg.dim << '\n';
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << r.name
          << std::right << " max_error " << std::setw(24) << fmt17(r.max_error) << "  tol "
          << r.tolerance << '\n';
    }
  }
  for (const auto& r : results) {
    if (!r.passed) {
      err << "first failure in " << r.name << ": " << r.first_failure << '\n';
      break;
    }
  }
  return all ? kOk : kFailure;
}

int cmd_gamma_check(const Common& c, std::ostream& out) {
  const auto relations = gamma_rep::check_relations();
  const int rank = gamma_rep::blade_image_rank();
  int exact = 0;
  for (const auto& r : relations) exact += r.ok ? 1 : 0;
  const bool ok = exact == static_cast<int>(relations.size()) && rank == 8;

  if (c.json) {
    JsonWriter j;
    j.begin_object();
    j.key("relations").begin_array();
    for (const auto& r : relations) {
      j.begin_object();
      j.key("mu").value(r.mu);
      j.key("nu").value(r.nu);
      j.key("expected").value(r.expected);
      j.key("ok").value(r.ok);
      j.end_object();
    }
    j.end_array();
    j.key("rank").value(rank);
    j.key("passed").value(ok);
    j.end_object();
    out << j.str() << '\n';
  } else {
    out << "g_mu g_nu + g_nu g_mu = 2 eta_{mu nu} I\n";
    for (const auto& r : relations) {
      out << "  (" << r.mu << "," << r.nu << ")  expected " << std::setw(2) << r.expected
          << " I   " << (r.ok ? "exact" : "FAILED") << '\n';
    }
    out << exact << "/" << relations.size() << " relations exact\n"
        << "blade image rank " << rank << " (of 8)\n";
  }
  return ok ? kOk : kFailure;
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* t = std::getenv("TWR_TOL")) env.tolerance = t;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Thomas-Wigner rotation toolkit: Lorentz boosts via Clifford algebra"};
  app.name(args.empty() ? "twr" : args.front());
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_dim, bool with_tol) {
    sub->add_flag("--json", common.json, "Emit one JSON object");
    if (with_dim) sub->add_option("--dim", common.dim, "Spacetime dimension (3 or 4)");
    if (with_tol) {
      sub->add_option("--tol", common.tol, "Precondition tolerance (overrides TWR_TOL)")
          ->each([&](const std::string&) { common.tol_given = true; });
    }
  };

  std::string v_text;
  std::string w_text;
  auto* angle = app.add_subcommand("angle", "Thomas-Wigner angle for boosts u -> v -> w -> u");
  angle->add_option("--v", v_text, "Velocity of v in u's frame, comma separated")->required();
  angle->add_option("--w", w_text, "Velocity of w in u's frame, comma separated")->required();
  add_common(angle, true, true);

  std::int64_t cases = 10000;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run the seeded invariant sweeps");
  verify->add_option("--seed", seed, "64-bit sweep seed");
  verify->add_option("--cases", cases, "Cases per suite");
  add_common(verify, true, true);

  auto* gamma = app.add_subcommand("gamma-check", "Check the 4x4 real gamma matrices");
  add_common(gamma, false, false);

  std::string boost_v;
  auto* boost = app.add_subcommand("boost", "Boost matrix from rest to velocity v");
  boost->add_option("--v", boost_v, "Velocity, comma separated")->required();
  add_common(boost, true, true);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*angle) return cmd_angle(v_text, w_text, common, env, out);
    if (*verify) return cmd_verify(cases, seed, common, env, out, err);
    if (*gamma) return cmd_gamma_check(common, out);
    if (*boost) return cmd_boost(boost_v, common, env, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace twr::cli
