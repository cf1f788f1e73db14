#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "relaysec/channel.hpp"
#include "relaysec/model.hpp"

namespace relaysec {

/// Unit-norm beamforming vector, plus the mixing coefficient t when the
/// vector was produced by combine().
struct BeamformerWeights {
  std::vector<std::complex<double>> vec;
  std::optional<double> t;
};

/// Conditioning variables for the large-N analysis: the realized
/// relay-side SNRs and jammer-eavesdropper gain together with the
/// derived mixing statistic b0, which lies in [-1, inf).
struct AsymptoticState {
  double b0;
  double gamma_rd;
  double gamma_re;
  double x_je;
};

/// Large-N SNR approximations at mixing coefficient t (fluctuation terms
/// replaced by their unit means).
struct ApproxSnrs {
  double gamma_sr;
  double gamma_d;
  double gamma_je;
  double gamma_e;
};

/// Information beamformer h_sr/||h_sr||. Throws on a zero vector.
BeamformerWeights ib_vector(const std::vector<std::complex<double>>& h_sr);

/// Energy beamformer h_sj/||h_sj||. Throws on a zero vector.
BeamformerWeights eb_vector(const std::vector<std::complex<double>>& h_sj);

/// t*w_i + sqrt(1-t^2)*w_e, renormalized to exactly unit norm so the
/// power constraint holds at any finite N. Throws for t outside [0, 1].
BeamformerWeights combine(double t, const BeamformerWeights& w_i, const BeamformerWeights& w_e);

/// b0 = N (k1 gamma_re/gamma_rd - k3 x_je) / (k3 N x_je + gamma_re),
/// evaluated in a rearranged form that keeps the result >= -1 under
/// rounding. Throws for gamma_rd <= 0 or a non-positive denominator.
double compute_b0(const LinkConstants& k, int n_antennas, double gamma_rd, double gamma_re,
                  double x_je);

/// Realized conditioning state for one channel draw.
AsymptoticState make_asymptotic_state(const LinkConstants& k, int n_antennas,
                                      const ChannelRealization& real);

/// Near-optimal mixing coefficient:
///   t = sqrt((-1 + sqrt(1+b0)) / b0)   for b0 != 0,
/// continuous at b0 = 0 with value 1/sqrt(2), t(-1) = 1. Evaluated as
/// 1/sqrt(1 + sqrt(1+b0)) which is stable everywhere on [-1, inf).
/// Throws for b0 < -1.
double optimal_t(double b0);

/// Mixing coefficient with the random variables in b0 replaced by their
/// means (statistical-CSI mode: only channel statistics required).
double statistical_t(const LinkConstants& k, int n_antennas);

ApproxSnrs approx_snrs(double t, const AsymptoticState& state, const LinkConstants& k,
                       int n_antennas);

/// Reduced objective of the mixing-coefficient problem,
///   g2(t) = [1 + gamma_re/gamma_je(t)] / gamma_d(t),
/// with the SNR approximations taken in their dominant large-N form
/// (fluctuation terms dropped, as in the derivation of b0). Returns +inf
/// at the endpoint poles t = 0 and t = 1.
double objective_g2(double t, const AsymptoticState& state, const LinkConstants& k,
                    int n_antennas);

/// Brute-force oracle: argmin of g2 over the closed grid {0, step, ..., 1},
/// ties broken toward smaller t. grid_step must lie in (0, 0.1].
double grid_search_t(const AsymptoticState& state, const LinkConstants& k, int n_antennas,
                     double grid_step);

struct SphereSearchResult {
  BeamformerWeights best;
  double capacity;      // bits/s/Hz
  int best_index;       // -3: w_i, -2: w_e, -1: combine(optimal_t), >=0: random sample
};

/// Random search over unit vectors for the exact secrecy capacity,
/// always including the analytic candidates {w_i, w_e, combine(t_opt)} in
/// the sample set. Intended for small N; result is independent of
/// evaluation order (max with deterministic tie-break on sample index).
SphereSearchResult sphere_search_w(const ChannelRealization& real, const LinkConstants& k,
                                   int samples, std::uint64_t seed);

}  // namespace relaysec
