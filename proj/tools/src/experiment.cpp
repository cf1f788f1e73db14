#include "experiment.hpp"

#include <cmath>

#include "relaysec/beamforming.hpp"
#include "relaysec/channel.hpp"
#include "relaysec/esr.hpp"
#include "relaysec/montecarlo.hpp"

namespace relaysec::cli {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;

// One fixed fading draw with the scalar links pinned to configured gains.
ChannelRealization pinned_realization(const ExperimentConfig& cfg, double x_re) {
  ChannelRealization real = draw_realization(cfg.params.n_antennas, {cfg.master_seed, 0});
  real.h_rd = std::sqrt(cfg.x_rd);
  real.h_re = std::sqrt(x_re);
  real.h_je = std::sqrt(cfg.x_je);
  return real;
}

// Instantaneous secrecy capacity versus t for a handful of eavesdropper
// channel qualities, with the closed-form t marked on each curve.
std::vector<ResultRow> run_fig1(const ExperimentConfig& cfg) {
  const LinkConstants k = link_constants(cfg.params);
  const std::vector<double> x_re_curves = {2.0, 1.0, 0.5, 0.01};
  std::vector<ResultRow> rows;

  for (double x_re : x_re_curves) {
    const ChannelRealization real = pinned_realization(cfg, x_re);
    const BeamformerWeights w_i = ib_vector(real.h_sr);
    const BeamformerWeights w_e = eb_vector(real.h_sj);
    char label[48];
    std::snprintf(label, sizeof(label), "secrecy_capacity[x_re=%g]", x_re);

    for (double t : cfg.sweep.values()) {
      const SnrSample s = snrs(real, combine(t, w_i, w_e).vec, k);
      rows.push_back({"t", t, "fixed_t", label, secrecy_capacity(s), 0.0, cfg.master_seed});
    }

    const AsymptoticState st = make_asymptotic_state(k, cfg.params.n_antennas, real);
    const double t_bar = optimal_t(st.b0);
    const SnrSample s = snrs(real, combine(t_bar, w_i, w_e).vec, k);
    rows.push_back({"t", t_bar, "proposed", label, secrecy_capacity(s), 0.0, cfg.master_seed});
    char t_label[32];
    std::snprintf(t_label, sizeof(t_label), "t_bar[x_re=%g]", x_re);
    rows.push_back({"t", t_bar, "proposed", t_label, t_bar, 0.0, cfg.master_seed});
  }
  return rows;
}

// Closed-form t and the capacities it achieves versus a power sweep, with
// the scalar channel gains pinned to the caption values.
std::vector<ResultRow> run_fig2(const ExperimentConfig& cfg) {
  std::vector<ResultRow> rows;
  const ChannelRealization real = pinned_realization(cfg, cfg.x_re);
  const BeamformerWeights w_i = ib_vector(real.h_sr);
  const BeamformerWeights w_e = eb_vector(real.h_sj);

  for (double v : cfg.sweep.values()) {
    SystemParams params = cfg.params;
    set_sweep_variable(params, cfg.sweep.var, v);
    const LinkConstants k = link_constants(params);
    const int n = params.n_antennas;

    AsymptoticState st;
    st.gamma_rd = k.k2 * cfg.x_rd;
    st.gamma_re = k.k4 * cfg.x_re;
    st.x_je = cfg.x_je;
    st.b0 = compute_b0(k, n, st.gamma_rd, st.gamma_re, st.x_je);
    const double t_bar = optimal_t(st.b0);

    const SnrSample s = snrs(real, combine(t_bar, w_i, w_e).vec, k);
    const ApproxSnrs a = approx_snrs(t_bar, st, k, n);
    const double c_approx =
        0.5 * std::max(0.0, std::log(a.gamma_d) * kInvLn2 - std::log1p(a.gamma_e) * kInvLn2);

    rows.push_back({cfg.sweep.var, v, "proposed", "t_bar", t_bar, 0.0, cfg.master_seed});
    rows.push_back({cfg.sweep.var, v, "proposed", "secrecy_capacity", secrecy_capacity(s), 0.0,
                    cfg.master_seed});
    rows.push_back(
        {cfg.sweep.var, v, "proposed", "secrecy_capacity_approx", c_approx, 0.0,
         cfg.master_seed});
  }
  return rows;
}

double scheme_fixed_mixing(const Scheme& s) {
  switch (s.kind) {
    case Scheme::Kind::FixedT:
      return s.t;
    case Scheme::Kind::EnergyBeamforming:
      return 0.0;
    case Scheme::Kind::InformationBeamforming:
      return 1.0;
    default:
      return -1.0;  // no single mixing coefficient
  }
}

// Monte Carlo ergodic secrecy capacity per scheme, with the closed-form
// ESR alongside wherever the scheme has a fixed mixing coefficient.
std::vector<ResultRow> run_mc_sweep(const ExperimentConfig& cfg) {
  if (!cfg.sweep.active())
    throw ConfigError("scenario requires sweep_var/sweep_from/sweep_to/sweep_step");
  std::vector<ResultRow> rows;

  const bool t_sweep = (cfg.sweep.var == "t");
  for (double v : cfg.sweep.values()) {
    SystemParams params = cfg.params;
    if (!t_sweep) set_sweep_variable(params, cfg.sweep.var, v);
    const LinkConstants k = link_constants(params);
    const int n = params.n_antennas;

    if (t_sweep) {
      const Scheme scheme = Scheme::fixed_t(v);
      const McEstimate est =
          simulate_ergodic(params, scheme, cfg.n_trials, cfg.master_seed, cfg.n_workers);
      rows.push_back({"t", v, scheme.name(), "ergodic_secrecy_capacity", est.mean,
                      est.std_error, cfg.master_seed});
      const EsrClosedForm cf = esr_closed_form(v, k, n);
      rows.push_back({"t", v, scheme.name(), "esr_closed_form", cf.esr, 0.0, cfg.master_seed});
      continue;
    }

    for (const Scheme& scheme : cfg.schemes) {
      const McEstimate est =
          simulate_ergodic(params, scheme, cfg.n_trials, cfg.master_seed, cfg.n_workers);
      rows.push_back({cfg.sweep.var, v, scheme.name(), "ergodic_secrecy_capacity", est.mean,
                      est.std_error, cfg.master_seed});
      const double t_fixed = scheme_fixed_mixing(scheme);
      if (t_fixed >= 0.0) {
        const EsrClosedForm cf = esr_closed_form(t_fixed, k, n);
        rows.push_back({cfg.sweep.var, v, scheme.name(), "esr_closed_form", cf.esr, 0.0,
                        cfg.master_seed});
      }
    }
    rows.push_back({cfg.sweep.var, v, "analysis", "t_statistical", statistical_t(k, n), 0.0,
                    cfg.master_seed});
  }
  return rows;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.params.validate();
  if (cfg.scenario == "fig1") return run_fig1(cfg);
  if (cfg.scenario == "fig2") return run_fig2(cfg);
  if (cfg.scenario == "fig3" || cfg.scenario == "custom") return run_mc_sweep(cfg);
  throw ConfigError("unknown scenario '" + cfg.scenario + "'");
}

}  // namespace relaysec::cli
