#include "relaysec/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "relaysec/beamforming.hpp"
#include "relaysec/channel.hpp"
#include "relaysec/esr.hpp"
#include "relaysec/model.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/quadrature.hpp"
#include "relaysec/specfun.hpp"

namespace relaysec {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t subseed(std::uint64_t master, std::uint64_t salt) {
  std::uint64_t z = master ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
  return g;
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

CheckResult make_check(std::string name, double measured, double tolerance, bool pass,
                       std::string detail = {}) {
  return {std::move(name), measured, tolerance, pass, std::move(detail)};
}

// Error-style check: pass iff measured <= tolerance.
CheckResult bound_check(std::string name, double measured, double tolerance,
                        std::string detail = {}) {
  return make_check(std::move(name), measured, tolerance, measured <= tolerance,
                    std::move(detail));
}

void finalize(CriterionResult& c, Clock::time_point t0) {
  c.seconds = seconds_since(t0);
  c.pass = std::all_of(c.checks.begin(), c.checks.end(),
                       [](const CheckResult& r) { return r.pass; });
  if (c.budget_seconds > 0.0 && c.seconds > c.budget_seconds) {
    c.checks.push_back(make_check(c.title + ": runtime budget", c.seconds, c.budget_seconds,
                                  false, "exceeded runtime budget"));
    c.pass = false;
  }
}

// Fig. 3 operating point; powers in watts.
SystemParams fig3_params(double p_s_watts = 1.0, double p_r_watts = 1.0) {
  SystemParams p;  // defaults are the Fig. 3 geometry
  p.p_s = p_s_watts;
  p.p_r = p_r_watts;
  return p;
}

// ---------------------------------------------------------------------------
// Criterion 1: special-function fidelity.
CriterionResult criterion_specfun(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{1, "special-function fidelity", false, 0.0, 1.0, {}};

  const QuadratureSpec oracle_spec{1e-13, 4000};
  double worst = 0.0;
  double worst_x = 0.0;
  for (double x : log_grid(1e-6, 1e6, 50)) {
    const double impl = exp_e1_scaled(x);
    const double oracle = expect_log1p_exponential_oracle(1.0 / x, oracle_spec);
    const double err = rel_err(impl, oracle);
    if (err > worst) {
      worst = err;
      worst_x = x;
    }
  }
  c.checks.push_back(bound_check("exp_e1_scaled vs quadrature oracle, 50 log points [1e-6,1e6]",
                                 worst, 1e-9 * opts.tolerance_scale,
                                 fmt("worst at x=%.3g", worst_x)));

  c.checks.push_back(bound_check("meijer_g_1323(1) = 1 (integration-by-parts identity)",
                                 std::abs(meijer_g_1323(1.0) - 1.0),
                                 1e-8 * opts.tolerance_scale));
  finalize(c, t0);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 2: Proposition-1 optimizer vs grid-search oracle.
CriterionResult criterion_optimizer(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{2, "mixing-coefficient optimizer vs grid search", false, 0.0, 10.0, {}};

  const SystemParams params = fig3_params();
  const LinkConstants k = link_constants(params);
  const int n = params.n_antennas;
  const double step = 1e-4;

  const std::uint64_t seed = subseed(opts.master_seed, 2);
  int agree = 0;
  const int cases = 1000;
  double worst_gap = 0.0;
  for (int i = 0; i < cases; ++i) {
    const ChannelRealization real = draw_realization(1, {seed, static_cast<std::uint64_t>(i)});
    AsymptoticState st;
    st.gamma_rd = k.k2 * real.x_rd();
    st.gamma_re = k.k4 * real.x_re();
    st.x_je = real.x_je();
    st.b0 = compute_b0(k, n, st.gamma_rd, st.gamma_re, st.x_je);
    const double gap = std::abs(optimal_t(st.b0) - grid_search_t(st, k, n, step));
    worst_gap = std::max(worst_gap, gap);
    if (gap <= step + 1e-12) ++agree;
  }
  const double fraction = static_cast<double>(agree) / cases;
  c.checks.push_back(make_check(
      "optimal_t equals grid_search_t (step 1e-4) within one step, 1000 states at N=300",
      fraction, 0.995, fraction >= 0.995, fmt("worst |t - t_grid| = %.3g", worst_gap)));

  c.checks.push_back(make_check("boundary identity optimal_t(0) = 1/sqrt(2)",
                                optimal_t(0.0), std::sqrt(0.5),
                                optimal_t(0.0) == std::sqrt(0.5)));
  c.checks.push_back(make_check("boundary identity optimal_t(-1) = 1", optimal_t(-1.0), 1.0,
                                optimal_t(-1.0) == 1.0));
  finalize(c, t0);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 3: closed forms vs Monte Carlo at the Fig. 3 point, t = 0.35.
CriterionResult criterion_closed_form_vs_mc(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{3, "closed-form rate components vs Monte Carlo", false, 0.0, 60.0, {}};

  const SystemParams params = fig3_params();
  const LinkConstants k = link_constants(params);
  const double t = 0.35;

  const BoundComponents bc = simulate_bound_components(params, t, opts.mc_trials,
                                                       subseed(opts.master_seed, 3),
                                                       opts.n_workers);
  const double ecd = ecd_closed_form(t, k, params.n_antennas);
  c.checks.push_back(bound_check("ecd_closed_form vs E(C_D) Monte Carlo, relative",
                                 rel_err(ecd, bc.e_cd.mean), 0.03 * opts.tolerance_scale,
                                 fmt("closed=%.6g mc=%.6g", ecd, bc.e_cd.mean)));

  const EsrClosedForm cf = esr_closed_form(t, k, params.n_antennas);
  const McEstimate erg = simulate_ergodic(params, Scheme::fixed_t(t), opts.mc_trials,
                                          subseed(opts.master_seed, 3), opts.n_workers);
  c.checks.push_back(bound_check(
      "lower-bound ordering: esr_closed_form - E(C) Monte Carlo",
      cf.esr - erg.mean, 2.0 * erg.std_error * opts.tolerance_scale,
      fmt("closed=%.6g mc=%.6g", cf.esr, erg.mean)));
  finalize(c, t0);
  return c;
}

// ---------------------------------------------------------------------------
// Criteria 4 and 5 share the scheme table at three source powers.
struct SchemeTable {
  // [power index][scheme index]; schemes: proposed, fixed(0.35), eb, ib, no_jammer
  McEstimate est[3][5];
};

SchemeTable run_scheme_table(const ValidationOptions& opts) {
  const double p_s_watts[3] = {0.1, 1.0, 10.0};  // 20, 30, 40 dBm
  const Scheme schemes[5] = {Scheme::proposed(), Scheme::fixed_t(0.35), Scheme::eb(),
                             Scheme::ib(), Scheme::no_jammer()};
  SchemeTable table;
  for (int pi = 0; pi < 3; ++pi) {
    const SystemParams params = fig3_params(p_s_watts[pi]);
    for (int si = 0; si < 5; ++si) {
      table.est[pi][si] = simulate_ergodic(params, schemes[si], opts.mc_trials,
                                           subseed(opts.master_seed, 4), opts.n_workers);
    }
  }
  return table;
}

CriterionResult criterion_scheme_ordering(const ValidationOptions& opts,
                                          const SchemeTable& table) {
  const auto t0 = Clock::now();
  CriterionResult c{4, "proposed scheme dominates the baselines", false, 0.0, 300.0, {}};

  const char* power_label[3] = {"P_S=20dBm", "P_S=30dBm", "P_S=40dBm"};
  const char* baseline_label[3] = {"eb", "ib", "no_jammer"};
  for (int pi = 0; pi < 3; ++pi) {
    const McEstimate& prop = table.est[pi][0];
    double min_margin = 1e300;
    std::string worst = "none";
    for (int bi = 0; bi < 3; ++bi) {
      const McEstimate& base = table.est[pi][bi + 2];
      const double combined_se =
          std::sqrt(prop.std_error * prop.std_error + base.std_error * base.std_error);
      const double margin = prop.mean - base.mean + 2.0 * combined_se * opts.tolerance_scale;
      if (margin < min_margin) {
        min_margin = margin;
        worst = baseline_label[bi];
      }
    }
    c.checks.push_back(make_check(
        std::string("proposed >= baselines - 2se at ") + power_label[pi], min_margin, 0.0,
        min_margin >= 0.0, "tightest baseline: " + worst));
  }
  finalize(c, t0);
  return c;
}

CriterionResult criterion_fixed_t(const ValidationOptions& opts, const SchemeTable& table) {
  const auto t0 = Clock::now();
  CriterionResult c{5, "fixed t = 0.35 near-optimality", false, 0.0, 0.0, {}};

  const McEstimate& prop = table.est[1][0];   // 30 dBm
  const McEstimate& fixed = table.est[1][1];
  c.checks.push_back(bound_check(
      "relative gap |fixed_t(0.35) - proposed| / proposed at Fig. 3 point",
      std::abs(fixed.mean - prop.mean) / std::max(prop.mean, 1e-300),
      0.03 * opts.tolerance_scale, fmt("fixed=%.6g proposed=%.6g", fixed.mean, prop.mean)));
  finalize(c, t0);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 6: degenerate-branch continuity of the closed forms.
CriterionResult criterion_branch_continuity(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{6, "degenerate-branch continuity", false, 0.0, 0.0, {}};

  const double eps = 1e-5;
  const double tol = 1e-4 * opts.tolerance_scale;
  const std::vector<double> scales = log_grid(1e-3, 1e3, 20);
  const int n = 300;
  const double t = 0.35;
  const double t2 = t * t;
  const double mu_e_factor = n * (1.0 - t2) + t2;

  // lambda_d = mu_d via t = 0 and k2 = k1.
  {
    double worst = 0.0;
    for (double x : scales) {
      LinkConstants k{x, x, 1.0, 1.0};
      const double degenerate = ecd_closed_form(0.0, k, n);
      k.k2 = x * (1.0 + eps);
      const double general = ecd_closed_form(0.0, k, n);
      worst = std::max(worst, rel_err(general, degenerate));
    }
    c.checks.push_back(
        bound_check("lambda_d = mu_d branch, perturbed by 1e-5, 20 scales", worst, tol));
  }
  // k4 = mu_e.
  {
    double worst = 0.0;
    for (double x : scales) {
      LinkConstants k{1.0, 1.0, x / mu_e_factor, x};
      const double degenerate = ece_closed_form(t, k, n);
      k.k4 = x * (1.0 + eps);
      const double general = ece_closed_form(t, k, n);
      worst = std::max(worst, rel_err(general, degenerate));
    }
    c.checks.push_back(
        bound_check("k4 = mu_e branch, perturbed by 1e-5, 20 scales", worst, tol));
  }
  // lambda_e = mu_e: k4 = x * (1 + k1 (n t^2 + 1 - t^2)).
  {
    double worst = 0.0;
    const double k1 = 1.0;
    const double gain = 1.0 + k1 * (n * t2 + (1.0 - t2));
    for (double x : scales) {
      LinkConstants k{k1, 1.0, x / mu_e_factor, x * gain};
      const double degenerate = ece_closed_form(t, k, n);
      k.k4 = x * gain * (1.0 + eps);
      const double general = ece_closed_form(t, k, n);
      worst = std::max(worst, rel_err(general, degenerate));
    }
    c.checks.push_back(
        bound_check("lambda_e = mu_e branch, perturbed by 1e-5, 20 scales", worst, tol));
  }
  finalize(c, t0);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 7: model invariants over random SNR tuples.
CriterionResult criterion_model_invariants(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{7, "SNR model invariants", false, 0.0, 0.0, {}};

  std::mt19937_64 engine(subseed(opts.master_seed, 7));
  std::uniform_real_distribution<double> log_unif(-6.0, 6.0);
  auto draw_snr = [&] { return std::pow(10.0, log_unif(engine)); };

  const int n_tuples = 100000;
  int violations_bound = 0;
  int violations_capacity = 0;
  int violations_monotone = 0;
  for (int i = 0; i < n_tuples; ++i) {
    SnrSample s;
    s.gamma_sr = draw_snr();
    s.gamma_rd = draw_snr();
    s.gamma_je = draw_snr();
    s.gamma_re = draw_snr();
    s.gamma_d = destination_snr(s.gamma_sr, s.gamma_rd);
    s.gamma_d_ub = destination_snr_upper(s.gamma_sr, s.gamma_rd);
    s.gamma_e = eavesdropper_snr(s.gamma_sr, s.gamma_re, s.gamma_je);

    if (!(s.gamma_d < s.gamma_d_ub)) ++violations_bound;

    const double cap = secrecy_capacity(s);
    const double cap_max = 0.5 * std::log2(1.0 + s.gamma_d);
    if (!(cap >= 0.0) || cap > cap_max * (1.0 + 1e-12)) ++violations_capacity;

    const double ge_more_jam = eavesdropper_snr(s.gamma_sr, s.gamma_re, s.gamma_je * 1.5);
    const double ge_more_tap = eavesdropper_snr(s.gamma_sr, s.gamma_re * 1.5, s.gamma_je);
    if (ge_more_jam > s.gamma_e * (1.0 + 1e-12)) ++violations_monotone;
    if (ge_more_tap < s.gamma_e * (1.0 - 1e-12)) ++violations_monotone;
  }
  c.checks.push_back(make_check("gamma_d < gamma_d_ub strictly, 1e5 tuples",
                                violations_bound, 0.0, violations_bound == 0));
  c.checks.push_back(make_check("0 <= secrecy_capacity <= (1/2)log2(1+gamma_d), 1e5 tuples",
                                violations_capacity, 0.0, violations_capacity == 0));
  c.checks.push_back(make_check("gamma_e monotone in gamma_je and gamma_re, 1e5 tuples",
                                violations_monotone, 0.0, violations_monotone == 0));

  // Phase invariance of the full snrs() path at N = 4.
  const SystemParams params = fig3_params();
  const LinkConstants k = link_constants(params);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::uint64_t seed = subseed(opts.master_seed, 77);
  int violations_phase = 0;
  for (int i = 0; i < 100000; ++i) {
    const ChannelRealization real = draw_realization(4, {seed, static_cast<std::uint64_t>(i)});
    std::vector<std::complex<double>> h(4);
    for (auto& v : h) v = std::complex<double>(gauss(engine), gauss(engine));
    const BeamformerWeights w = ib_vector(h);  // random unit vector
    const std::complex<double> phase = std::polar(1.0, angle(engine));
    std::vector<std::complex<double>> w2 = w.vec;
    for (auto& v : w2) v *= phase;

    const SnrSample a = snrs(real, w.vec, k);
    const SnrSample b = snrs(real, w2, k);
    const double worst = std::max(
        {rel_err(a.gamma_sr, b.gamma_sr), rel_err(a.gamma_je, b.gamma_je),
         rel_err(a.gamma_d, b.gamma_d), rel_err(a.gamma_e, b.gamma_e)});
    if (worst > 1e-9) ++violations_phase;
  }
  c.checks.push_back(make_check("snrs invariant under unit-modulus phase on w, 1e5 draws",
                                violations_phase, 0.0, violations_phase == 0));
  finalize(c, t0);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 8: determinism across worker counts.
CriterionResult criterion_determinism(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{8, "bit-identical Monte Carlo across 1/4/16 workers", false, 0.0, 0.0, {}};

  const SystemParams params = fig3_params();
  const std::int64_t trials = 66770;  // several blocks plus a ragged tail
  const std::uint64_t seed = subseed(opts.master_seed, 8);
  const McEstimate w1 = simulate_ergodic(params, Scheme::proposed(), trials, seed, 1);
  const McEstimate w4 = simulate_ergodic(params, Scheme::proposed(), trials, seed, 4);
  const McEstimate w16 = simulate_ergodic(params, Scheme::proposed(), trials, seed, 16);

  const bool identical = w1.mean == w4.mean && w4.mean == w16.mean &&
                         w1.std_error == w4.std_error && w4.std_error == w16.std_error;
  const double spread = std::max(std::abs(w1.mean - w4.mean), std::abs(w1.mean - w16.mean));
  c.checks.push_back(make_check("mean and std_error bit-identical for 1/4/16 workers", spread,
                                0.0, identical, fmt("mean=%.12g", w1.mean)));
  finalize(c, t0);
  return c;
}

// ---------------------------------------------------------------------------
// Supplementary suites (not release criteria, but part of validate()).

CriterionResult supplementary_specfun(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{9, "special-function invariants", false, 0.0, 0.0, {}};

  int bound_violations = 0;
  int monotone_violations = 0;
  double prev = 1e300;
  for (double x : log_grid(1e-8, 1e8, 200)) {
    const double g = exp_e1_scaled(x);
    if (!(1.0 / (x + 1.0) < g && g < 1.0 / x)) ++bound_violations;
    if (!(g < prev)) ++monotone_violations;
    prev = g;
  }
  c.checks.push_back(make_check("1/(x+1) < e^x E1(x) < 1/x on [1e-8,1e8]", bound_violations,
                                0.0, bound_violations == 0));
  c.checks.push_back(make_check("e^x E1(x) strictly decreasing", monotone_violations, 0.0,
                                monotone_violations == 0));

  {
    double worst = 0.0;
    const double eps = 1e-5;
    for (double x : log_grid(1e-3, 1e3, 25)) {
      const double limit = meijer_g_1323(x);
      const double general =
          expected_log1p_two_exponentials(x * (1.0 + eps), x * (1.0 - eps));
      worst = std::max(worst, std::abs(limit - general) / std::abs(limit));
    }
    c.checks.push_back(bound_check("meijer_g_1323 equals symmetric limit of two-scale moment",
                                   worst, 1e-4 * opts.tolerance_scale));
  }
  {
    const QuadratureSpec spec{1e-13, 4000};
    double worst = 0.0;
    for (double x : log_grid(1e-6, 1e6, 20))
      worst = std::max(worst, rel_err(meijer_g_1323(x), expect_log1p_gamma2_oracle(x, spec)));
    c.checks.push_back(bound_check("meijer_g_1323 vs gamma2 quadrature oracle", worst,
                                   1e-8 * opts.tolerance_scale));
  }
  {
    const QuadratureSpec spec{1e-13, 4000};
    double worst = 0.0;
    for (double s : log_grid(1e-6, 1e6, 20))
      worst = std::max(
          worst, rel_err(expect_log1p_exponential_oracle(s, spec), exp_e1_scaled(1.0 / s)));
    c.checks.push_back(bound_check("oracle(s) = exp_e1_scaled(1/s) identity", worst,
                                   1e-9 * opts.tolerance_scale));
  }
  c.checks.push_back(bound_check("frozen value e^1 E1(1)",
                                 std::abs(exp_e1_scaled(1.0) - 0.59634736232319407),
                                 1e-13 * opts.tolerance_scale));
  finalize(c, t0);
  return c;
}

CriterionResult supplementary_channel(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{10, "channel statistics", false, 0.0, 0.0, {}};
  const std::uint64_t seed = subseed(opts.master_seed, 10);

  {
    const int n_draws = 1000000;
    double sum = 0.0, sum_re = 0.0, sum_re2 = 0.0, sum_im = 0.0, sum_im2 = 0.0;
    double prev_x = 0.0, cross = 0.0, sum_x = 0.0, sum_x2 = 0.0;
    for (int i = 0; i < n_draws; ++i) {
      const ChannelRealization real =
          draw_realization(1, {seed, static_cast<std::uint64_t>(i)});
      const double x = real.x_rd();
      sum += x;
      sum_re += real.h_rd.real();
      sum_re2 += real.h_rd.real() * real.h_rd.real();
      sum_im += real.h_rd.imag();
      sum_im2 += real.h_rd.imag() * real.h_rd.imag();
      if (i > 0 && i <= 100000) cross += prev_x * x;
      if (i <= 100000) {
        sum_x += x;
        sum_x2 += x * x;
      }
      prev_x = x;
    }
    const double mean = sum / n_draws;
    c.checks.push_back(bound_check("mean |h_rd|^2 over 1e6 draws within 0.01 of 1",
                                   std::abs(mean - 1.0), 0.01));
    const double var_re = sum_re2 / n_draws - std::pow(sum_re / n_draws, 2);
    const double var_im = sum_im2 / n_draws - std::pow(sum_im / n_draws, 2);
    c.checks.push_back(bound_check("real/imag component variance within 0.005 of 0.5",
                                   std::max(std::abs(var_re - 0.5), std::abs(var_im - 0.5)),
                                   0.005));
    // Lag-1 sample correlation of |h_rd|^2 across realization indices.
    const int pairs = 100000;
    const double m = sum_x / (pairs + 1);
    const double v = sum_x2 / (pairs + 1) - m * m;
    const double corr = (cross / pairs - m * m) / v;
    c.checks.push_back(bound_check("|h_rd|^2 lag-1 correlation within 0.02 of 0 (1e5 pairs)",
                                   std::abs(corr), 0.02));
  }
  {
    const int n_draws = 10000;
    const int n = 300;
    double sum = 0.0;
    for (int i = 0; i < n_draws; ++i) {
      const ChannelRealization real =
          draw_realization(n, {seed ^ 0xabcdULL, static_cast<std::uint64_t>(i)});
      double norm2 = 0.0;
      for (const auto& h : real.h_sr) norm2 += std::norm(h);
      sum += norm2 / n;
    }
    c.checks.push_back(bound_check("mean ||h_sr||^2/N over 1e4 draws at N=300 within 0.02 of 1",
                                   std::abs(sum / n_draws - 1.0), 0.02));
  }
  {
    const ChannelRealization a = draw_realization(8, {seed, 5});
    const ChannelRealization b = draw_realization(8, {seed, 5});
    const bool identical = a.h_sr == b.h_sr && a.h_sj == b.h_sj && a.h_rd == b.h_rd &&
                           a.h_re == b.h_re && a.h_je == b.h_je;
    c.checks.push_back(
        make_check("same seed twice gives bit-identical realization", identical ? 0.0 : 1.0,
                   0.0, identical));
  }
  finalize(c, t0);
  return c;
}

CriterionResult supplementary_beamforming(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{11, "beamforming invariants", false, 0.0, 0.0, {}};

  {
    int violations = 0;
    double prev = 2.0;
    for (int i = 0; i <= 2000; ++i) {
      const double b0 = -1.0 + std::pow(10.0, -3.0 + 9.0 * i / 2000.0);  // (-1, 1e6]
      const double t = optimal_t(b0);
      if (!(t >= 0.0 && t <= 1.0)) ++violations;
      if (t > prev + 1e-15) ++violations;
      prev = t;
      if (b0 != 0.0) {
        const double y1 = (-1.0 - std::sqrt(1.0 + b0)) / b0;
        if (b0 < 0.0 && !(y1 >= 1.0)) ++violations;
        if (b0 > 0.0 && !(y1 < 0.0)) ++violations;
      }
    }
    c.checks.push_back(make_check(
        "optimal_t in [0,1], non-increasing; root y1 outside [0,1], 2001-point b0 grid",
        violations, 0.0, violations == 0));
  }
  c.checks.push_back(bound_check("continuity at b0 = 0: |optimal_t(+-1e-8) - 1/sqrt(2)|",
                                 std::max(std::abs(optimal_t(1e-8) - std::sqrt(0.5)),
                                          std::abs(optimal_t(-1e-8) - std::sqrt(0.5))),
                                 1e-6 * opts.tolerance_scale));
  {
    // Cross term before renormalization concentrates near zero at N = 300.
    const std::uint64_t seed = subseed(opts.master_seed, 11);
    const double t = std::sqrt(0.5);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const ChannelRealization real =
          draw_realization(300, {seed, static_cast<std::uint64_t>(i)});
      const BeamformerWeights wi = ib_vector(real.h_sr);
      const BeamformerWeights we = eb_vector(real.h_sj);
      std::complex<double> dot(0.0, 0.0);
      for (std::size_t j = 0; j < wi.vec.size(); ++j) dot += std::conj(wi.vec[j]) * we.vec[j];
      const double norm2 = 1.0 + 2.0 * t * std::sqrt(1.0 - t * t) * dot.real();
      worst = std::max(worst, std::abs(norm2 - 1.0));
    }
    c.checks.push_back(bound_check(
        "|combined norm^2 - 1| before renormalization, 100 draws at N=300", worst, 0.2));
  }
  {
    // combine(t=1) keeps gamma_sr = k1 ||h_sr||^2 exactly.
    const SystemParams params = fig3_params();
    const LinkConstants k = link_constants(params);
    const ChannelRealization real = draw_realization(64, {subseed(opts.master_seed, 12), 0});
    const BeamformerWeights w = combine(1.0, ib_vector(real.h_sr), eb_vector(real.h_sj));
    double norm2 = 0.0;
    for (const auto& h : real.h_sr) norm2 += std::norm(h);
    const SnrSample s = snrs(real, w.vec, k);
    c.checks.push_back(bound_check("snrs(combine(1)) gives gamma_sr = k1 ||h_sr||^2",
                                   rel_err(s.gamma_sr, k.k1 * norm2),
                                   1e-12 * opts.tolerance_scale));
  }
  finalize(c, t0);
  return c;
}

CriterionResult supplementary_esr(const ValidationOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult c{12, "closed-form rate invariants and oracles", false, 0.0, 0.0, {}};

  {
    const QuadratureSpec spec{1e-10, 4000};
    double worst = 0.0;
    for (double mu : log_grid(1e-2, 1e3, 5)) {
      for (double lambda : log_grid(1e-2, 1e3, 5)) {
        const double closed = expected_log1p_two_exponentials(mu, lambda);
        const double oracle = expect_log1p_two_exponentials_oracle(mu, lambda, spec);
        worst = std::max(worst, rel_err(closed, oracle));
      }
    }
    c.checks.push_back(bound_check(
        "two-scale log moment vs iterated quadrature, 5x5 grid [1e-2,1e3]^2", worst,
        1e-6 * opts.tolerance_scale));
  }
  {
    int violations = 0;
    const int n = 300;
    for (double t : {0.0, 0.35, 0.8, 1.0}) {
      double prev = -1e300;
      for (double k2 : log_grid(1e-2, 1e3, 15)) {
        const LinkConstants k{10.0, k2, 0.5, 20.0};
        const double v = ecd_closed_form(t, k, n);
        if (v < prev - 1e-9) ++violations;
        prev = v;
      }
      prev = 1e300;
      for (double k3 : log_grid(1e-4, 10.0, 15)) {
        const LinkConstants k{10.0, 5.0, k3, 20.0};
        const double v = ece_closed_form(t, k, n);
        if (v > prev + 1e-9) ++violations;
        prev = v;
      }
    }
    c.checks.push_back(make_check("E(C_D) non-decreasing in k2; E(C_E) non-increasing in k3",
                                  violations, 0.0, violations == 0));
  }
  {
    // The ESR bound is nonnegative by construction across a parameter sweep.
    int violations = 0;
    const SystemParams params = fig3_params();
    const LinkConstants k = link_constants(params);
    for (int i = 0; i <= 50; ++i) {
      const EsrClosedForm cf = esr_closed_form(i / 50.0, k, params.n_antennas);
      if (cf.esr < 0.0) ++violations;
      if (cf.esr > 0.0 && std::abs(cf.esr - 0.5 * (cf.e_cd - cf.e_ce)) > 1e-12) ++violations;
    }
    c.checks.push_back(
        make_check("esr = max(0,(e_cd-e_ce)/2) >= 0 across t sweep", violations, 0.0,
                   violations == 0));
  }
  finalize(c, t0);
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const ValidationOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_specfun(opts));
  out.push_back(criterion_optimizer(opts));
  out.push_back(criterion_closed_form_vs_mc(opts));
  {
    const auto t0 = Clock::now();
    const SchemeTable table = run_scheme_table(opts);
    CriterionResult c4 = criterion_scheme_ordering(opts, table);
    c4.seconds = seconds_since(t0);  // attribute the table runs to criterion 4
    if (c4.budget_seconds > 0.0 && c4.seconds > c4.budget_seconds) c4.pass = false;
    out.push_back(c4);
    out.push_back(criterion_fixed_t(opts, table));
  }
  out.push_back(criterion_branch_continuity(opts));
  out.push_back(criterion_model_invariants(opts));
  out.push_back(criterion_determinism(opts));
  return out;
}

std::vector<CriterionResult> run_validation(const ValidationOptions& opts) {
  std::vector<CriterionResult> out = run_acceptance(opts);
  out.push_back(supplementary_specfun(opts));
  out.push_back(supplementary_channel(opts));
  out.push_back(supplementary_beamforming(opts));
  out.push_back(supplementary_esr(opts));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& c) { return c.pass; });
}

}  // namespace relaysec
