#pragma once

#include "relaysec/model.hpp"

namespace relaysec {

/// Which degenerate formulas were used by the closed form.
struct EsrBranchFlags {
  bool mu_d_zero = false;    // t = 1: the fluctuation term collapses
  bool cd3_meijer = false;   // lambda_d ~= mu_d
  bool ce1_meijer = false;   // k4 ~= mu_e
  bool ce2_meijer = false;   // lambda_e ~= mu_e
};

/// Closed-form ergodic-rate components and the resulting ESR lower bound.
struct EsrClosedForm {
  double e_cd;      // E(C_D) [bits/s/Hz]
  double e_ce;      // E(C_E) [bits/s/Hz]
  double esr;       // max(0, (e_cd - e_ce)/2)
  double mu_d;
  double lambda_d;
  double mu_e;
  double lambda_e;
  EsrBranchFlags branches;
};

/// E[ln(1 + mu*A + lambda*B)] in nats for independent unit-mean
/// exponentials A, B. Symmetric in (mu, lambda); degenerate branches for
/// zero or (nearly) equal scales. Requires mu, lambda >= 0.
double expected_log1p_two_exponentials(double mu, double lambda);

/// Closed-form approximation of E(C_D) = E[log2(1 + gamma_d)] at mixing
/// coefficient t, large-N regime. Throws for t outside [0, 1].
double ecd_closed_form(double t, const LinkConstants& k, int n_antennas);

/// Closed-form approximation of E(C_E) = E[log2(1 + gamma_e)] at mixing
/// coefficient t, large-N regime. Throws for t outside [0, 1].
double ece_closed_form(double t, const LinkConstants& k, int n_antennas);

/// Both components plus the clamped ESR and branch bookkeeping.
EsrClosedForm esr_closed_form(double t, const LinkConstants& k, int n_antennas);

}  // namespace relaysec
