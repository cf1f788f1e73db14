#include "relaysec/esr.hpp"

#include <cmath>
#include <stdexcept>

#include "relaysec/specfun.hpp"

namespace relaysec {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;
// Below this relative separation the difference quotient loses too much
// precision; switch to the equal-scale (Meijer-G) value.
constexpr double kDegenerateSwitch = 1e-6;

bool nearly_equal(double a, double b) {
  return std::abs(a - b) < kDegenerateSwitch * std::max(a, b);
}

double two_scale_log_moment(double mu, double lambda, bool* used_meijer) {
  if (!(mu >= 0.0) || !(lambda >= 0.0) || !std::isfinite(mu) || !std::isfinite(lambda))
    throw std::domain_error("expected_log1p_two_exponentials: scales must be >= 0 and finite");
  if (used_meijer) *used_meijer = false;
  if (mu == 0.0 && lambda == 0.0) return 0.0;
  if (mu == 0.0) return exp_e1_scaled(1.0 / lambda);
  if (lambda == 0.0) return exp_e1_scaled(1.0 / mu);
  if (nearly_equal(mu, lambda)) {
    if (used_meijer) *used_meijer = true;
    return meijer_g_1323(0.5 * (mu + lambda));
  }
  const double f_mu = mu * exp_e1_scaled(1.0 / mu);
  const double f_lambda = lambda * exp_e1_scaled(1.0 / lambda);
  return (f_lambda - f_mu) / (lambda - mu);
}

void check_t(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error(std::string(who) + ": t must be in [0, 1]");
}

struct CdParts {
  double mu_d, lambda_d;
  double value;  // nats
  bool mu_d_zero, cd3_meijer;
};

CdParts ecd_parts(double t, const LinkConstants& k, int n_antennas) {
  check_t(t, "ecd_closed_form");
  const double n = static_cast<double>(n_antennas);
  const double t2 = t * t;
  const double base = 1.0 + k.k1 * n * t2;

  CdParts p;
  p.mu_d = k.k1 * (1.0 - t2) / base;
  p.lambda_d = k.k2 / base;
  p.mu_d_zero = (p.mu_d == 0.0);
  // c_d1 = 0 in the pure-IB limit; evaluating 1/mu_d is never needed.
  const double c_d1 = p.mu_d_zero ? 0.0 : exp_e1_scaled(1.0 / p.mu_d);
  const double c_d2 = exp_e1_scaled(1.0 / k.k2);
  const double c_d3 = two_scale_log_moment(p.mu_d, p.lambda_d, &p.cd3_meijer);
  p.value = c_d1 + c_d2 - c_d3;
  return p;
}

struct CeParts {
  double mu_e, lambda_e;
  double value;  // nats
  bool ce1_meijer, ce2_meijer;
};

CeParts ece_parts(double t, const LinkConstants& k, int n_antennas) {
  check_t(t, "ece_closed_form");
  const double n = static_cast<double>(n_antennas);
  const double t2 = t * t;

  CeParts p;
  p.mu_e = k.k3 * (n * (1.0 - t2) + t2);
  p.lambda_e = k.k4 / (1.0 + k.k1 * (n * t2 + (1.0 - t2)));
  const double c_e1 = two_scale_log_moment(k.k4, p.mu_e, &p.ce1_meijer);
  const double c_e2 = two_scale_log_moment(p.lambda_e, p.mu_e, &p.ce2_meijer);
  p.value = c_e1 - c_e2;
  return p;
}

}  // namespace

double expected_log1p_two_exponentials(double mu, double lambda) {
  return two_scale_log_moment(mu, lambda, nullptr);
}

double ecd_closed_form(double t, const LinkConstants& k, int n_antennas) {
  return ecd_parts(t, k, n_antennas).value * kInvLn2;
}

double ece_closed_form(double t, const LinkConstants& k, int n_antennas) {
  return ece_parts(t, k, n_antennas).value * kInvLn2;
}

EsrClosedForm esr_closed_form(double t, const LinkConstants& k, int n_antennas) {
  const CdParts cd = ecd_parts(t, k, n_antennas);
  const CeParts ce = ece_parts(t, k, n_antennas);

  EsrClosedForm out;
  out.e_cd = cd.value * kInvLn2;
  out.e_ce = ce.value * kInvLn2;
  out.esr = std::max(0.0, 0.5 * (out.e_cd - out.e_ce));
  out.mu_d = cd.mu_d;
  out.lambda_d = cd.lambda_d;
  out.mu_e = ce.mu_e;
  out.lambda_e = ce.lambda_e;
  out.branches.mu_d_zero = cd.mu_d_zero;
  out.branches.cd3_meijer = cd.cd3_meijer;
  out.branches.ce1_meijer = ce.ce1_meijer;
  out.branches.ce2_meijer = ce.ce2_meijer;
  return out;
}

}  // namespace relaysec
