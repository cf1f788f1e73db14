#include "relaysec/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace relaysec {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(who) + ": argument must be finite");
  if (!(x > 0.0)) throw std::domain_error(std::string(who) + ": argument must be > 0");
}

// Power series for E1 on (0, 1]:
//   E1(x) = -gamma - ln(x) + sum_{k>=1} (-1)^{k+1} x^k / (k * k!)
double exp_e1_series(double x) {
  double sum = 0.0;
  double p = 1.0;  // (-x)^k / k!
  for (int k = 1; k <= 60; ++k) {
    p *= -x / k;
    const double term = -p / k;
    sum += term;
    if (std::abs(term) < kEps * (std::abs(sum) + 1.0)) break;
  }
  return std::exp(x) * (-kEulerGamma - std::log(x) + sum);
}

// Continued fraction for x > 1 (modified Lentz), evaluated in scaled form:
//   e^x E1(x) = 1 / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
double exp_e1_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= 1e-16) return h;
  }
  return h;  // converges long before the cap for any x > 1
}

}  // namespace

double exp_e1_scaled(double x) {
  require_positive_finite(x, "exp_e1_scaled");
  return x <= 1.0 ? exp_e1_series(x) : exp_e1_continued_fraction(x);
}

double meijer_g_1323(double x) {
  require_positive_finite(x, "meijer_g_1323");
  if (x < 0.01) {
    // E[ln(1 + x*S)] = sum_{k>=1} (-1)^{k+1} ((k+1)!/k) x^k, truncated at
    // the smallest term (asymptotic, plenty of accuracy for x < 0.01).
    double term = 2.0 * x;
    double sum = term;
    for (int k = 1; k <= 40; ++k) {
      const double next = term * (-x) * (k + 2.0) * k / (k + 1.0);
      if (std::abs(next) >= std::abs(term)) break;
      sum += next;
      term = next;
      if (std::abs(next) < kEps * std::abs(sum)) break;
    }
    return sum;
  }
  const double y = 1.0 / x;
  return 1.0 + (1.0 - y) * exp_e1_scaled(y);
}

double expect_log1p_exponential_oracle(double scale, const QuadratureSpec& spec) {
  require_positive_finite(scale, "expect_log1p_exponential_oracle");
  spec.validate();

  // Truncate the upper tail where the remaining mass provably drops below
  // a small fraction of the tolerance:
  //   int_Z^inf ln(1+s z) e^-z dz <= e^-Z (ln(1+s Z) + 1)
  const double lower_bound = std::exp(-1.0) * std::log1p(scale);
  double upper = 40.0;
  while (upper < 700.0 &&
         std::exp(-upper) * (std::log1p(scale * upper) + 1.0) >
             0.05 * spec.relative_tolerance * lower_bound) {
    upper += 40.0;
  }
  return integrate_adaptive(
      [scale](double z) { return std::log1p(scale * z) * std::exp(-z); }, 0.0, upper, spec);
}

double expect_log1p_gamma2_oracle(double scale, const QuadratureSpec& spec) {
  require_positive_finite(scale, "expect_log1p_gamma2_oracle");
  spec.validate();

  //   int_Z^inf ln(1+s z) z e^-z dz <= e^-Z ((Z+1) ln(1+s Z) + 1 + 2/Z)
  const double lower_bound = 0.5 * std::log1p(scale);
  double upper = 40.0;
  while (upper < 700.0 &&
         std::exp(-upper) * ((upper + 1.0) * std::log1p(scale * upper) + 1.0 + 2.0 / upper) >
             0.05 * spec.relative_tolerance * lower_bound) {
    upper += 40.0;
  }
  return integrate_adaptive(
      [scale](double z) { return std::log1p(scale * z) * z * std::exp(-z); }, 0.0, upper, spec);
}

double expect_log1p_two_exponentials_oracle(double mu, double lambda,
                                            const QuadratureSpec& spec) {
  if (!std::isfinite(mu) || !std::isfinite(lambda) || mu < 0.0 || lambda < 0.0)
    throw std::domain_error("expect_log1p_two_exponentials_oracle: scales must be >= 0 and finite");
  spec.validate();
  if (mu == 0.0 && lambda == 0.0) return 0.0;
  if (mu == 0.0) return expect_log1p_exponential_oracle(lambda, spec);
  if (lambda == 0.0) return expect_log1p_exponential_oracle(mu, spec);

  // Condition on Z:  E ln(1 + mu Z + lambda X)
  //   = E_Z [ ln(1 + mu Z) + E_X ln(1 + (lambda/(1+mu Z)) X) ]
  // with the inner expectation itself done by quadrature, so the oracle
  // never touches the closed-form path.
  QuadratureSpec inner = spec;
  inner.relative_tolerance = 0.1 * spec.relative_tolerance;

  const double lower_bound = std::exp(-1.0) * std::log1p(std::max(mu, lambda));
  double upper = 40.0;
  while (upper < 700.0 &&
         std::exp(-upper) * (std::log1p(mu * upper) + std::log1p(lambda) + 2.0) >
             0.05 * spec.relative_tolerance * lower_bound) {
    upper += 40.0;
  }
  return integrate_adaptive(
      [mu, lambda, &inner](double z) {
        const double shrunk = lambda / (1.0 + mu * z);
        return std::exp(-z) *
               (std::log1p(mu * z) + expect_log1p_exponential_oracle(shrunk, inner));
      },
      0.0, upper, spec);
}

}  // namespace relaysec
