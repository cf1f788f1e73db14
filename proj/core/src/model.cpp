#include "relaysec/model.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysec {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;  // 1/ln(2)

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void SystemParams::validate() const {
  require(std::isfinite(p_s) && p_s > 0.0, "SystemParams: p_s must be > 0");
  require(std::isfinite(p_r) && p_r > 0.0, "SystemParams: p_r must be > 0");
  require(std::isfinite(noise_power) && noise_power > 0.0,
          "SystemParams: noise_power must be > 0");
  require(std::isfinite(eta) && eta >= 0.0 && eta <= 1.0, "SystemParams: eta must be in [0, 1]");
  require(std::isfinite(l_c) && l_c > 0.0, "SystemParams: l_c must be > 0");
  require(std::isfinite(alpha) && alpha > 0.0, "SystemParams: alpha must be > 0");
  require(std::isfinite(d_sr) && d_sr > 0.0, "SystemParams: d_sr must be > 0");
  require(std::isfinite(d_sj) && d_sj > 0.0, "SystemParams: d_sj must be > 0");
  require(std::isfinite(d_rd) && d_rd > 0.0, "SystemParams: d_rd must be > 0");
  require(std::isfinite(d_re) && d_re > 0.0, "SystemParams: d_re must be > 0");
  require(std::isfinite(d_je) && d_je > 0.0, "SystemParams: d_je must be > 0");
  require(n_antennas >= 1, "SystemParams: n_antennas must be >= 1");
}

LinkConstants link_constants(const SystemParams& p) {
  p.validate();
  LinkConstants k;
  k.k1 = p.p_s * p.l_c * std::pow(p.d_sr, -p.alpha) / p.noise_power;
  k.k2 = p.p_r * p.l_c * std::pow(p.d_rd, -p.alpha) / p.noise_power;
  k.k3 = p.eta * p.p_s * p.l_c * p.l_c * std::pow(p.d_sj * p.d_je, -p.alpha) / p.noise_power;
  k.k4 = p.p_r * p.l_c * std::pow(p.d_re, -p.alpha) / p.noise_power;
  for (double v : {k.k1, k.k2, k.k3, k.k4})
    require(std::isfinite(v) && v > 0.0, "link_constants: constants must be positive and finite");
  return k;
}

double destination_snr(double gamma_sr, double gamma_rd) {
  return gamma_sr * gamma_rd / (gamma_sr + gamma_rd + 1.0);
}

double destination_snr_upper(double gamma_sr, double gamma_rd) {
  const double denom = gamma_sr + gamma_rd;
  return denom > 0.0 ? gamma_sr * gamma_rd / denom : 0.0;
}

double eavesdropper_snr(double gamma_sr, double gamma_re, double gamma_je) {
  return gamma_sr * gamma_re / (gamma_re + (gamma_sr + 1.0) * (gamma_je + 1.0));
}

SnrSample snrs(const ChannelRealization& real, const std::vector<std::complex<double>>& w,
               const LinkConstants& k) {
  const std::size_t n = real.h_sr.size();
  require(w.size() == n && real.h_sj.size() == n, "snrs: vector lengths must agree");

  double norm2 = 0.0;
  std::complex<double> dot_sr(0.0, 0.0);
  std::complex<double> dot_sj(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    norm2 += std::norm(w[i]);
    dot_sr += std::conj(real.h_sr[i]) * w[i];
    dot_sj += std::conj(real.h_sj[i]) * w[i];
  }
  // ||w|| = 1 within 1e-12, checked on the squared norm (factor 2 from the
  // derivative, plus slack for the O(N eps) summation error).
  require(std::abs(norm2 - 1.0) <= 3e-12, "snrs: w must be unit-norm within 1e-12");

  SnrSample s;
  s.gamma_sr = k.k1 * std::norm(dot_sr);
  s.gamma_rd = k.k2 * real.x_rd();
  s.gamma_je = k.k3 * std::norm(dot_sj) * real.x_je();
  s.gamma_re = k.k4 * real.x_re();
  s.gamma_d = destination_snr(s.gamma_sr, s.gamma_rd);
  s.gamma_d_ub = destination_snr_upper(s.gamma_sr, s.gamma_rd);
  s.gamma_e = eavesdropper_snr(s.gamma_sr, s.gamma_re, s.gamma_je);
  return s;
}

double secrecy_capacity(const SnrSample& s) {
  const double diff = (std::log1p(s.gamma_d) - std::log1p(s.gamma_e)) * kInvLn2;
  return 0.5 * std::max(0.0, diff);
}

}  // namespace relaysec
