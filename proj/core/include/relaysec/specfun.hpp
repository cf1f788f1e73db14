#pragma once

#include "relaysec/quadrature.hpp"

namespace relaysec {

// Numerically stable special functions backing the closed-form ergodic
// rate expressions, together with slow quadrature oracles used to
// validate them.

/// e^x * E1(x) for x > 0, carried in scaled form throughout so that no
/// intermediate overflows or underflows even for extreme arguments.
///
/// Series below x = 1, continued fraction above. Relative error is well
/// under 1e-10 across [1e-8, 1e8].
///
/// Equals E[ln(1 + Z/x)] for a unit-mean exponential Z.
double exp_e1_scaled(double x);

/// Value of G^{1,3}_{3,2}[x | -1,1,1; 1,0] for x > 0.
///
/// Equals E[ln(1 + x*S)] where S is the sum of two independent unit-mean
/// exponentials, i.e. the equal-scale limit of the two-parameter
/// log-moment below. Evaluated through the analytic limit
///   1 + (1 - 1/x) * e^{1/x} E1(1/x)
/// with an asymptotic series for small x where that form cancels.
double meijer_g_1323(double x);

/// Quadrature oracle for E[ln(1 + scale*Z)], Z a unit-mean exponential.
/// Must reproduce exp_e1_scaled(1/scale) to oracle tolerance.
double expect_log1p_exponential_oracle(double scale, const QuadratureSpec& spec = {});

/// Quadrature oracle for E[ln(1 + scale*S)], S the sum of two independent
/// unit-mean exponentials (density s*e^{-s}). Oracle for meijer_g_1323.
double expect_log1p_gamma2_oracle(double scale, const QuadratureSpec& spec = {});

/// Iterated-quadrature oracle for E[ln(1 + mu*Z + lambda*X)] with Z, X
/// independent unit-mean exponentials. Oracle for the two-parameter
/// log-moment used by the closed-form rate expressions. Independent of
/// exp_e1_scaled (pure quadrature on both levels).
double expect_log1p_two_exponentials_oracle(double mu, double lambda,
                                            const QuadratureSpec& spec = {});

}  // namespace relaysec
