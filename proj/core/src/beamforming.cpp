#include "relaysec/beamforming.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace relaysec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::complex<double>> normalized(const std::vector<std::complex<double>>& h,
                                             const char* who) {
  double norm2 = 0.0;
  for (const auto& v : h) norm2 += std::norm(v);
  if (!(norm2 > 0.0) || !std::isfinite(norm2))
    throw std::invalid_argument(std::string(who) + ": degenerate channel vector");
  const double inv = 1.0 / std::sqrt(norm2);
  std::vector<std::complex<double>> w(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) w[i] = h[i] * inv;
  return w;
}

}  // namespace

BeamformerWeights ib_vector(const std::vector<std::complex<double>>& h_sr) {
  return {normalized(h_sr, "ib_vector"), std::nullopt};
}

BeamformerWeights eb_vector(const std::vector<std::complex<double>>& h_sj) {
  return {normalized(h_sj, "eb_vector"), std::nullopt};
}

BeamformerWeights combine(double t, const BeamformerWeights& w_i, const BeamformerWeights& w_e) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("combine: t must be in [0, 1]");
  if (w_i.vec.size() != w_e.vec.size())
    throw std::invalid_argument("combine: vector lengths must agree");

  const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
  std::vector<std::complex<double>> v(w_i.vec.size());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] = t * w_i.vec[n] + s * w_e.vec[n];
  // The cross term w_i^H w_e vanishes only as N -> inf; renormalize so the
  // unit-power constraint holds exactly at finite N.
  return {normalized(v, "combine"), t};
}

double compute_b0(const LinkConstants& k, int n_antennas, double gamma_rd, double gamma_re,
                  double x_je) {
  if (n_antennas < 1) throw std::domain_error("compute_b0: n_antennas must be >= 1");
  if (!(gamma_rd > 0.0)) throw std::domain_error("compute_b0: gamma_rd must be > 0");
  if (gamma_re < 0.0 || x_je < 0.0)
    throw std::domain_error("compute_b0: gamma_re and x_je must be >= 0");
  const double n = static_cast<double>(n_antennas);
  const double denom = k.k3 * n * x_je + gamma_re;
  if (!(denom > 0.0)) throw std::domain_error("compute_b0: singular input, denominator is 0");

  // Algebraically identical to N(k1 gamma_re/gamma_rd - k3 x_je)/denom but
  // written as -1 + (nonnegative), so rounding cannot push it below -1.
  const double b0 = -1.0 + gamma_re * (n * k.k1 / gamma_rd + 1.0) / denom;
  if (!(b0 >= -1.0) || !std::isfinite(b0))
    throw std::logic_error("compute_b0: result escaped [-1, inf)");
  return b0;
}

AsymptoticState make_asymptotic_state(const LinkConstants& k, int n_antennas,
                                      const ChannelRealization& real) {
  AsymptoticState st;
  st.gamma_rd = k.k2 * real.x_rd();
  st.gamma_re = k.k4 * real.x_re();
  st.x_je = real.x_je();
  st.b0 = compute_b0(k, n_antennas, st.gamma_rd, st.gamma_re, st.x_je);
  return st;
}

double optimal_t(double b0) {
  if (!(b0 >= -1.0)) throw std::domain_error("optimal_t: b0 must be >= -1");
  if (b0 == 0.0) return std::sqrt(0.5);
  // y2 = (-1+sqrt(1+b0))/b0 rationalizes to 1/(1+sqrt(1+b0)); t = sqrt(y2).
  return 1.0 / std::sqrt(1.0 + std::sqrt(1.0 + b0));
}

double statistical_t(const LinkConstants& k, int n_antennas) {
  return optimal_t(compute_b0(k, n_antennas, k.k2, k.k4, 1.0));
}

ApproxSnrs approx_snrs(double t, const AsymptoticState& state, const LinkConstants& k,
                       int n_antennas) {
  const double n = static_cast<double>(n_antennas);
  const double t2 = t * t;
  ApproxSnrs a;
  a.gamma_sr = k.k1 * (n * t2 + (1.0 - t2));
  a.gamma_d = destination_snr_upper(a.gamma_sr, state.gamma_rd);
  a.gamma_je = k.k3 * (n * (1.0 - t2) + t2) * state.x_je;
  a.gamma_e = a.gamma_je > 0.0 ? std::min(a.gamma_sr, state.gamma_re / a.gamma_je) : a.gamma_sr;
  return a;
}

double objective_g2(double t, const AsymptoticState& state, const LinkConstants& k,
                    int n_antennas) {
  const double n = static_cast<double>(n_antennas);
  const double t2 = t * t;
  // Dominant large-N terms only, matching the stationarity condition that
  // defines b0. The fluctuation terms kept by approx_snrs would bias the
  // argmin by O(1/N).
  const double gamma_sr = k.k1 * n * t2;
  const double gamma_je = k.k3 * n * (1.0 - t2) * state.x_je;
  if (!(gamma_sr > 0.0) || !(gamma_je > 0.0)) return kInf;
  const double gamma_d = destination_snr_upper(gamma_sr, state.gamma_rd);
  if (!(gamma_d > 0.0)) return kInf;
  return (1.0 + state.gamma_re / gamma_je) / gamma_d;
}

double grid_search_t(const AsymptoticState& state, const LinkConstants& k, int n_antennas,
                     double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.1))
    throw std::domain_error("grid_search_t: grid_step must be in (0, 0.1]");
  const long steps = std::lround(std::floor(1.0 / grid_step));
  double best_t = 0.0;
  double best_val = kInf;
  for (long i = 0; i <= steps; ++i) {
    const double t = std::min(1.0, i * grid_step);
    const double val = objective_g2(t, state, k, n_antennas);
    if (val < best_val) {
      best_val = val;
      best_t = t;
    }
  }
  if (1.0 > steps * grid_step) {
    const double val = objective_g2(1.0, state, k, n_antennas);
    if (val < best_val) best_t = 1.0;
  }
  return best_t;
}

SphereSearchResult sphere_search_w(const ChannelRealization& real, const LinkConstants& k,
                                   int samples, std::uint64_t seed) {
  if (samples < 0) throw std::domain_error("sphere_search_w: samples must be >= 0");
  const int n = real.n_antennas();

  const BeamformerWeights w_i = ib_vector(real.h_sr);
  const BeamformerWeights w_e = eb_vector(real.h_sj);
  const AsymptoticState state = make_asymptotic_state(k, n, real);
  const BeamformerWeights w_opt = combine(optimal_t(state.b0), w_i, w_e);

  SphereSearchResult result{w_i, -1.0, -3};
  auto consider = [&](const BeamformerWeights& w, int index) {
    const double c = secrecy_capacity(snrs(real, w.vec, k));
    if (c > result.capacity) {
      result.best = w;
      result.capacity = c;
      result.best_index = index;
    }
  };
  consider(w_i, -3);
  consider(w_e, -2);
  consider(w_opt, -1);

  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> h(n);
  for (int idx = 0; idx < samples; ++idx) {
    for (auto& v : h) v = std::complex<double>(gauss(engine), gauss(engine));
    consider({normalized(h, "sphere_search_w"), std::nullopt}, idx);
  }
  return result;
}

}  // namespace relaysec
