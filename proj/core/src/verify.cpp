#include "twr/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "twr/clifford.hpp"
#include "twr/lorentz.hpp"
#include "twr/sampling.hpp"
#include "twr/thomas_wigner.hpp"

namespace twr {

namespace {

// One case: returns its error and describes its inputs in `inputs`.
using CaseFn = std::function<double(CaseRng&, const VerifyConfig&, std::ostringstream& inputs)>;

struct Suite {
  const char* name;
  double tolerance;
  CaseFn run_case;
};

std::string csv(std::span<const double> xs) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::ostringstream& prec(std::ostringstream& os) {
  os.precision(17);
  return os;
}

double case_macfarlane_vs_oracle(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const auto vs = random_velocity(rng, cfg.dim - 1, 0.99);
  const auto ws = random_velocity(rng, cfg.dim - 1, 0.99);
  prec(in) << "v=" << csv(vs) << " w=" << csv(ws);
  const SpacetimeVector u = SpacetimeVector::rest(cfg.dim);
  const double formula =
      macfarlane_cos_psi(gamma_factor(u, four_velocity(vs), cfg.tol),
                         gamma_factor(u, four_velocity(ws), cfg.tol), gamma_vw(vs, ws));
  const double oracle = rotation_cos_from_trace(tw_oracle(vs, ws, cfg.tol), u, cfg.tol);
  return std::abs(formula - oracle);
}

struct Triple {
  SpacetimeVector u, v, w;
};

// u, v, w seen from a randomly boosted frame.
Triple random_triple(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const LorentzMatrix frame = random_boost(rng, cfg.dim, 0.5);
  const auto vs = random_velocity(rng, cfg.dim - 1, 0.99);
  const auto ws = random_velocity(rng, cfg.dim - 1, 0.99);
  Triple t{frame.apply(SpacetimeVector::rest(cfg.dim)), frame.apply(four_velocity(vs)),
           frame.apply(four_velocity(ws))};
  in << "u=" << t.u.to_string() << " v=" << t.v.to_string() << " w=" << t.w.to_string();
  return t;
}

double case_versor_vs_matrix(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const auto [u, v, w] = random_triple(rng, cfg, in);
  return max_abs_diff(versor_to_matrix(tw_versor(u, v, w, cfg.tol), cfg.tol),
                      tw_oracle_matrix(u, v, w, cfg.tol));
}

double case_sigma_squared(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const auto vs = random_velocity(rng, cfg.dim - 1, 0.99);
  const auto ws = random_velocity(rng, cfg.dim - 1, 0.99);
  prec(in) << "v=" << csv(vs) << " w=" << csv(ws);
  const SpacetimeVector u = SpacetimeVector::rest(cfg.dim);
  const SpacetimeVector v = four_velocity(vs);
  const SpacetimeVector w = four_velocity(ws);
  const double expected = 8.0 * (1.0 + gamma_factor(u, v, cfg.tol)) *
                          (1.0 + gamma_factor(v, w, cfg.tol)) * (1.0 + gamma_factor(w, u, cfg.tol));
  return std::abs(sigma_squared(u, v, w, cfg.tol) - expected) / expected;
}

double case_reflection_involution(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const SpacetimeVector x = random_non_null(rng, cfg.dim);
  const SpacetimeVector y = random_vector(rng, cfg.dim);
  in << "x=" << x.to_string() << " y=" << y.to_string();
  return max_abs_diff(reflect(x, reflect(x, y, cfg.tol), cfg.tol), y);
}

double case_reflection_isometry(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const SpacetimeVector x = random_non_null(rng, cfg.dim);
  const SpacetimeVector y = random_vector(rng, cfg.dim);
  const SpacetimeVector z = random_vector(rng, cfg.dim);
  in << "x=" << x.to_string() << " y=" << y.to_string() << " z=" << z.to_string();
  return std::abs(inner(reflect(x, y, cfg.tol), reflect(x, z, cfg.tol)) - inner(y, z));
}

double case_reflection_equivariance(CaseRng& rng, const VerifyConfig& cfg,
                                    std::ostringstream& in) {
  const SpacetimeVector x = random_non_null(rng, cfg.dim);
  const SpacetimeVector beta = random_unit_timelike(rng, cfg.dim, 0.9);
  in << "x=" << x.to_string() << " boost_to=" << beta.to_string();
  const LorentzMatrix lambda = boost_matrix(SpacetimeVector::rest(cfg.dim), beta, cfg.tol);
  return max_abs_diff(lambda * reflection_matrix(x, cfg.tol) * lambda.inverse(),
                      reflection_matrix(lambda.apply(x), cfg.tol));
}

double case_reflection_scale(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  static constexpr std::array<double, 4> kScales{0.1, -0.1, 10.0, -10.0};
  const SpacetimeVector x = random_non_null(rng, cfg.dim);
  const SpacetimeVector y = random_vector(rng, cfg.dim);
  const double lambda = kScales[rng.bits() % kScales.size()];
  in << "x=" << x.to_string() << " y=" << y.to_string() << " lambda=" << lambda;
  return max_abs_diff(reflect(lambda * x, y, cfg.tol), reflect(x, y, cfg.tol));
}

double case_boost_factorization(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const SpacetimeVector u = random_unit_timelike(rng, cfg.dim, 0.9);
  const SpacetimeVector v = random_unit_timelike(rng, cfg.dim, 0.9);
  in << "u=" << u.to_string() << " v=" << v.to_string();
  const LorentzMatrix su = reflection_matrix(u, cfg.tol);
  const LorentzMatrix sv = reflection_matrix(v, cfg.tol);
  const LorentzMatrix suv = reflection_matrix(u + v, cfg.tol);
  return max_abs_diff(suv * su, sv * suv);
}

double case_rotation_square(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const SpacetimeVector u = random_unit_timelike(rng, cfg.dim, 0.9);
  const auto [a, b] = random_orthogonal_spacelike_pair(rng, u);
  in << "a=" << a.to_string() << " b=" << b.to_string();
  const LorentzMatrix half = reflection_matrix(a + b, cfg.tol) * reflection_matrix(a, cfg.tol);
  return max_abs_diff(half * half, reflection_matrix(b, cfg.tol) * reflection_matrix(a, cfg.tol));
}

double case_boost_doubling(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const SpacetimeVector u = random_unit_timelike(rng, cfg.dim, 0.9);
  const SpacetimeVector v = random_unit_timelike(rng, cfg.dim, 0.9);
  in << "u=" << u.to_string() << " v=" << v.to_string();
  const double alpha = hyperbolic_angle(u, v, cfg.tol);
  const double expected = std::cosh(2.0 * alpha);
  const double by_image = -inner(reflect(v, reflect(u, u, cfg.tol), cfg.tol), u);
  const LorentzMatrix m = reflection_matrix(v, cfg.tol) * reflection_matrix(u, cfg.tol);
  // Identity on the (n-2)-dimensional complement of Span{u, v}.
  const double by_trace = (m.trace() - (cfg.dim - 2)) / 2.0;
  return std::max(std::abs(by_image - expected), std::abs(by_trace - expected));
}

double case_rotation_doubling(CaseRng& rng, const VerifyConfig& cfg, std::ostringstream& in) {
  const SpacetimeVector u = random_unit_timelike(rng, cfg.dim, 0.9);
  const auto [a, b] = random_orthogonal_spacelike_pair(rng, u);
  in << "a=" << a.to_string() << " b=" << b.to_string();
  const double theta = std::acos(std::clamp(inner(a, b), -1.0, 1.0));
  const LorentzMatrix m = reflection_matrix(b, cfg.tol) * reflection_matrix(a, cfg.tol);
  return std::abs((m.trace() - (cfg.dim - 2)) - 2.0 * std::cos(2.0 * theta));
}

double case_rapidity_additivity(CaseRng& rng, const VerifyConfig&, std::ostringstream& in) {
  const double a = rng.uniform(-3.0, 3.0);
  const double b = rng.uniform(-3.0, 3.0);
  prec(in) << "alpha=" << a << " beta=" << b;
  return (boost_matrix_2d(a) * boost_matrix_2d(b) - boost_matrix_2d(a + b)).cwiseAbs().maxCoeff();
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> kSuites{
      {"macfarlane_vs_oracle", 1e-9, case_macfarlane_vs_oracle},
      {"versor_vs_matrix", 1e-9, case_versor_vs_matrix},
      {"sigma_squared", 1e-10, case_sigma_squared},
      {"reflection_involution", 1e-10, case_reflection_involution},
      {"reflection_isometry", 1e-10, case_reflection_isometry},
      {"reflection_equivariance", 1e-10, case_reflection_equivariance},
      {"reflection_scale", 1e-10, case_reflection_scale},
      {"boost_factorization", 1e-10, case_boost_factorization},
      {"rotation_square", 1e-10, case_rotation_square},
      {"boost_doubling", 1e-10, case_boost_doubling},
      {"rotation_doubling", 1e-10, case_rotation_doubling},
      {"rapidity_additivity", 1e-12, case_rapidity_additivity},
  };
  return kSuites;
}

SuiteResult run(const Suite& suite, std::uint64_t stream, const VerifyConfig& cfg) {
  SuiteResult res;
  res.name = suite.name;
  res.tolerance = suite.tolerance;
  res.cases = cfg.cases;
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    CaseRng rng(cfg.seed, i, stream);
    std::ostringstream inputs;
    double err = 0.0;
    std::string error_text;
    try {
      err = suite.run_case(rng, cfg, inputs);
    } catch (const std::exception& e) {
      err = std::numeric_limits<double>::infinity();
      error_text = std::string(" error: ") + e.what();
    }
    if (!(err <= suite.tolerance) && res.passed) {
      res.passed = false;
      std::ostringstream os;
      os.precision(17);
      os << "case " << i << ": " << inputs.str() << " error=" << err << error_text;
      res.first_failure = os.str();
    }
    if (!(err <= res.max_error)) res.max_error = err;
  }
  return res;
}

}  // namespace

std::vector<std::string> verification_suites() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.emplace_back(s.name);
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
  const auto& all = suites();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (name == all[i].name) return run(all[i], i, config);
  }
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_verification(const VerifyConfig& config) {
  (void)Signature(config.dim);
  std::vector<SuiteResult> out;
  const auto& all = suites();
  for (std::size_t i = 0; i < all.size(); ++i) out.push_back(run(all[i], i, config));
  return out;
}

}  // namespace twr
