#include "relaysec/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace relaysec {

namespace {

// splitmix64 finalizer; decorrelates the per-realization engine seeds.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(const SeedSpec& seed) {
  return mix64(seed.master_seed ^ mix64(seed.realization_index));
}

}  // namespace

ChannelRealization draw_realization(int n_antennas, const SeedSpec& seed) {
  if (n_antennas < 1) throw std::domain_error("draw_realization: n_antennas must be >= 1");

  std::mt19937_64 engine(stream_seed(seed));
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  auto draw = [&] { return std::complex<double>(gauss(engine), gauss(engine)); };

  ChannelRealization real;
  real.h_sr.resize(n_antennas);
  real.h_sj.resize(n_antennas);
  for (auto& h : real.h_sr) h = draw();
  for (auto& h : real.h_sj) h = draw();
  real.h_rd = draw();
  real.h_re = draw();
  real.h_je = draw();
  return real;
}

}  // namespace relaysec
