#pragma once

#include <cstdint>
#include <string>

#include "relaysec/model.hpp"

namespace relaysec {

/// Beamforming schemes compared in the experiments.
struct Scheme {
  enum class Kind {
    ProposedAdaptive,        // per-realization t from the closed form
    FixedT,                  // combine(t) with a fixed mixing coefficient
    EnergyBeamforming,       // w = h_sj/||h_sj||
    InformationBeamforming,  // w = h_sr/||h_sr||
    NoJammer,                // jammer absent: w = w_i, gamma_je = 0
  };

  Kind kind = Kind::ProposedAdaptive;
  double t = 0.0;  // only meaningful for FixedT

  static Scheme proposed() { return {Kind::ProposedAdaptive, 0.0}; }
  static Scheme fixed_t(double t);
  static Scheme eb() { return {Kind::EnergyBeamforming, 0.0}; }
  static Scheme ib() { return {Kind::InformationBeamforming, 0.0}; }
  static Scheme no_jammer() { return {Kind::NoJammer, 0.0}; }

  std::string name() const;
};

/// Monte Carlo estimate with its standard error.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_trials = 0;
  std::uint64_t seed = 0;
};

struct BoundComponents {
  McEstimate e_cd;  // E[log2(1 + gamma_d)]
  McEstimate e_ce;  // E[log2(1 + gamma_e)]
};

/// Seeded Monte Carlo estimate of the ergodic secrecy capacity E(C) for
/// one scheme. Bit-identical for any n_workers (counter-based seeding
/// plus fixed-order block reduction); n_workers <= 0 picks a default.
McEstimate simulate_ergodic(const SystemParams& params, const Scheme& scheme,
                            std::int64_t n_trials, std::uint64_t master_seed, int n_workers = 0);

/// Monte Carlo estimates of E(C_D) and E(C_E) with w = combine(t); the
/// simulation oracle for the closed-form components.
BoundComponents simulate_bound_components(const SystemParams& params, double t,
                                          std::int64_t n_trials, std::uint64_t master_seed,
                                          int n_workers = 0);

}  // namespace relaysec
