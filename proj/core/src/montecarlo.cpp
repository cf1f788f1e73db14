#include "relaysec/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "relaysec/beamforming.hpp"
#include "relaysec/channel.hpp"

namespace relaysec {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;
constexpr std::int64_t kBlockSize = 4096;

int resolve_workers(int n_workers) {
  if (n_workers > 0) return n_workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 16));
}

struct BlockSums {
  double sum0 = 0.0, sumsq0 = 0.0;
  double sum1 = 0.0, sumsq1 = 0.0;
};

// Runs fn(trial_index, out[2]) for every trial. Trials are processed in
// fixed-size blocks; each block accumulates in index order and blocks are
// folded in index order, so the result does not depend on how blocks were
// assigned to threads.
template <typename Fn>
void run_trials(std::int64_t n_trials, int n_workers, const Fn& fn, McEstimate& est0,
                McEstimate* est1) {
  const std::int64_t n_blocks = (n_trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> partials(static_cast<std::size_t>(n_blocks));

  std::atomic<std::int64_t> next_block{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t b = next_block.fetch_add(1);
      if (b >= n_blocks) return;
      const std::int64_t begin = b * kBlockSize;
      const std::int64_t end = std::min(begin + kBlockSize, n_trials);
      BlockSums s;
      double out[2];
      for (std::int64_t i = begin; i < end; ++i) {
        fn(i, out);
        s.sum0 += out[0];
        s.sumsq0 += out[0] * out[0];
        s.sum1 += out[1];
        s.sumsq1 += out[1] * out[1];
      }
      partials[static_cast<std::size_t>(b)] = s;
    }
  };

  const int workers = std::min<std::int64_t>(resolve_workers(n_workers), n_blocks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BlockSums total;
  for (const BlockSums& s : partials) {
    total.sum0 += s.sum0;
    total.sumsq0 += s.sumsq0;
    total.sum1 += s.sum1;
    total.sumsq1 += s.sumsq1;
  }

  auto finish = [n_trials](double sum, double sumsq, McEstimate& est) {
    const double n = static_cast<double>(n_trials);
    est.mean = sum / n;
    est.n_trials = n_trials;
    if (n_trials > 1) {
      const double var = std::max(0.0, (sumsq - n * est.mean * est.mean) / (n - 1.0));
      est.std_error = std::sqrt(var / n);
    } else {
      est.std_error = 0.0;
    }
  };
  finish(total.sum0, total.sumsq0, est0);
  if (est1) finish(total.sum1, total.sumsq1, *est1);
}

BeamformerWeights scheme_weights(const Scheme& scheme, const ChannelRealization& real,
                                 const LinkConstants& k, int n_antennas) {
  switch (scheme.kind) {
    case Scheme::Kind::EnergyBeamforming:
      return eb_vector(real.h_sj);
    case Scheme::Kind::InformationBeamforming:
    case Scheme::Kind::NoJammer:
      return ib_vector(real.h_sr);
    case Scheme::Kind::FixedT:
      return combine(scheme.t, ib_vector(real.h_sr), eb_vector(real.h_sj));
    case Scheme::Kind::ProposedAdaptive: {
      const AsymptoticState st = make_asymptotic_state(k, n_antennas, real);
      return combine(optimal_t(st.b0), ib_vector(real.h_sr), eb_vector(real.h_sj));
    }
  }
  throw std::logic_error("scheme_weights: unknown scheme");
}

}  // namespace

Scheme Scheme::fixed_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("Scheme::fixed_t: t must be in [0, 1]");
  return {Kind::FixedT, t};
}

std::string Scheme::name() const {
  switch (kind) {
    case Kind::ProposedAdaptive:
      return "proposed";
    case Kind::FixedT:
      return "fixed_t";
    case Kind::EnergyBeamforming:
      return "eb";
    case Kind::InformationBeamforming:
      return "ib";
    case Kind::NoJammer:
      return "no_jammer";
  }
  return "unknown";
}

McEstimate simulate_ergodic(const SystemParams& params, const Scheme& scheme,
                            std::int64_t n_trials, std::uint64_t master_seed, int n_workers) {
  if (n_trials < 1) throw std::domain_error("simulate_ergodic: n_trials must be >= 1");
  const LinkConstants k = link_constants(params);
  const int n = params.n_antennas;

  McEstimate est;
  est.seed = master_seed;
  run_trials(
      n_trials, n_workers,
      [&](std::int64_t i, double out[2]) {
        const ChannelRealization real =
            draw_realization(n, {master_seed, static_cast<std::uint64_t>(i)});
        const BeamformerWeights w = scheme_weights(scheme, real, k, n);
        SnrSample s = snrs(real, w.vec, k);
        if (scheme.kind == Scheme::Kind::NoJammer) {
          s.gamma_je = 0.0;
          s.gamma_e = eavesdropper_snr(s.gamma_sr, s.gamma_re, 0.0);
        }
        out[0] = secrecy_capacity(s);
        out[1] = 0.0;
      },
      est, nullptr);
  return est;
}

BoundComponents simulate_bound_components(const SystemParams& params, double t,
                                          std::int64_t n_trials, std::uint64_t master_seed,
                                          int n_workers) {
  if (n_trials < 1)
    throw std::domain_error("simulate_bound_components: n_trials must be >= 1");
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("simulate_bound_components: t must be in [0, 1]");
  const LinkConstants k = link_constants(params);
  const int n = params.n_antennas;

  BoundComponents bc;
  bc.e_cd.seed = master_seed;
  bc.e_ce.seed = master_seed;
  run_trials(
      n_trials, n_workers,
      [&](std::int64_t i, double out[2]) {
        const ChannelRealization real =
            draw_realization(n, {master_seed, static_cast<std::uint64_t>(i)});
        const BeamformerWeights w = combine(t, ib_vector(real.h_sr), eb_vector(real.h_sj));
        const SnrSample s = snrs(real, w.vec, k);
        out[0] = std::log1p(s.gamma_d) * kInvLn2;
        out[1] = std::log1p(s.gamma_e) * kInvLn2;
      },
      bc.e_cd, &bc.e_ce);
  return bc;
}

}  // namespace relaysec
