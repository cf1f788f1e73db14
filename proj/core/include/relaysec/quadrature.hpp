#pragma once

#include <functional>
#include <stdexcept>

namespace relaysec {

/// Configuration for the adaptive quadrature used by the reference oracles.
struct QuadratureSpec {
  double relative_tolerance = 1e-12;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(relative_tolerance > 0.0))
      throw std::invalid_argument("QuadratureSpec: relative_tolerance must be > 0");
    if (max_subdivisions < 1)
      throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
  }
};

/// Thrown when the adaptive scheme cannot reach the requested tolerance
/// within the subdivision budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Globally adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
///
/// Bisects the segment with the largest local error estimate until the
/// summed estimate drops below relative_tolerance * |integral|.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec = {});

}  // namespace relaysec
