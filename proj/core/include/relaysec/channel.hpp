#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace relaysec {

/// (master_seed, realization_index) uniquely determines one realization.
/// The per-realization stream is derived by hashing the pair, so draws
/// are reproducible regardless of worker count or iteration order.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t realization_index = 0;
};

/// One block-fading draw of every channel in the network. Entries are
/// i.i.d. circularly symmetric complex Gaussian with zero mean and unit
/// variance (variance split equally between real and imaginary parts).
struct ChannelRealization {
  std::vector<std::complex<double>> h_sr;  // source -> relay, N entries
  std::vector<std::complex<double>> h_sj;  // source -> jammer, N entries
  std::complex<double> h_rd;               // relay -> destination
  std::complex<double> h_re;               // relay -> eavesdropper
  std::complex<double> h_je;               // jammer -> eavesdropper

  int n_antennas() const { return static_cast<int>(h_sr.size()); }

  double x_rd() const { return std::norm(h_rd); }
  double x_re() const { return std::norm(h_re); }
  double x_je() const { return std::norm(h_je); }
};

/// Pure function of (n_antennas, seed). Throws std::domain_error for
/// n_antennas < 1.
ChannelRealization draw_realization(int n_antennas, const SeedSpec& seed);

}  // namespace relaysec
