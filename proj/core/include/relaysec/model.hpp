#pragma once

#include <complex>
#include <vector>

#include "relaysec/channel.hpp"

namespace relaysec {

/// Physical constants of the network. Powers are stored in watts; any
/// dBm conversion happens at the CLI boundary, not here.
struct SystemParams {
  double p_s = 1.0;            // transmit power of the source [W]
  double p_r = 1.0;            // transmit power of the relay [W]
  double noise_power = 1e-11;  // sigma_n^2 [W]
  double eta = 0.8;            // energy conversion efficiency, in [0, 1]
  double l_c = 0.1;            // path-loss constant
  double alpha = 2.7;          // path-loss exponent
  double d_sr = 50.0;          // distances [m]
  double d_sj = 50.0;
  double d_rd = 30.0;
  double d_re = 60.0;
  double d_je = 40.0;
  int n_antennas = 300;

  void validate() const;
};

/// Dimensionless per-link SNR scale factors.
struct LinkConstants {
  double k1;  // source->relay
  double k2;  // relay->destination
  double k3;  // harvested jamming, jammer->eavesdropper
  double k4;  // relay->eavesdropper
};

/// Per-realization SNRs for a given beamforming vector.
struct SnrSample {
  double gamma_sr;
  double gamma_rd;
  double gamma_je;
  double gamma_re;
  double gamma_d;     // exact destination SNR
  double gamma_d_ub;  // upper bound gamma_sr*gamma_rd/(gamma_sr+gamma_rd)
  double gamma_e;     // eavesdropper SNR
};

/// k1 = P_S Lc d_SR^-a / s2, k2 = P_R Lc d_RD^-a / s2,
/// k3 = eta P_S Lc^2 (d_SJ d_JE)^-a / s2, k4 = P_R Lc d_RE^-a / s2.
/// Throws std::invalid_argument if params are invalid or any constant
/// comes out non-positive or non-finite.
LinkConstants link_constants(const SystemParams& params);

/// Exact end-to-end SNR combiners.
double destination_snr(double gamma_sr, double gamma_rd);
double destination_snr_upper(double gamma_sr, double gamma_rd);
double eavesdropper_snr(double gamma_sr, double gamma_re, double gamma_je);

/// Per-link and end-to-end SNRs for beamforming vector w.
/// Requires ||w|| = 1 within 1e-12 and matching vector lengths.
SnrSample snrs(const ChannelRealization& real, const std::vector<std::complex<double>>& w,
               const LinkConstants& k);

/// Instantaneous secrecy capacity in bits/s/Hz:
///   (1/2) [log2(1+gamma_d) - log2(1+gamma_e)]^+
double secrecy_capacity(const SnrSample& s);

}  // namespace relaysec
