#include "relaysec/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace relaysec {

namespace {

// 15-point Kronrod abscissae on [-1, 1]; odd indices are the embedded
// 7-point Gauss nodes (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526e+00, 0.949107912342758524526189684048e+00,
    0.864864423359769072789712788641e+00, 0.741531185599394439863864773281e+00,
    0.586087235467691130294144838259e+00, 0.405845151377397166906606412077e+00,
    0.207784955007898467600689403773e+00, 0.0e+00};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970e+00, 0.063092092629978553290700663189204e+00,
    0.104790010322250183839876322541518e+00, 0.140653259715525918745189590510238e+00,
    0.169004726639267902826583426598550e+00, 0.190350578064785409913256402421014e+00,
    0.204432940075298892414161999234649e+00, 0.209482141084727828012999174891714e+00};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082e+00, 0.279705391489276667901467771423780e+00,
    0.381830050505118944950369775488975e+00, 0.417959183673469387755102040816327e+00};

struct Segment {
  double a, b;
  double integral;
  double err;
};

struct WorseError {
  bool operator()(const Segment& x, const Segment& y) const { return x.err < y.err; }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    result_kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.integral = result_kronrod * half;
  s.err = std::abs((result_kronrod - result_gauss) * half);
  return s;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec) {
  spec.validate();
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw std::invalid_argument("integrate_adaptive: bounds must be finite");
  if (a == b) return 0.0;

  std::priority_queue<Segment, std::vector<Segment>, WorseError> segments;
  Segment whole = kronrod15(f, a, b);
  double total = whole.integral;
  double total_err = whole.err;
  segments.push(whole);

  int subdivisions = 0;
  while (total_err > spec.relative_tolerance * std::max(std::abs(total), 1e-300)) {
    if (++subdivisions > spec.max_subdivisions)
      throw ConvergenceError("integrate_adaptive: subdivision budget exhausted");
    Segment worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw ConvergenceError("integrate_adaptive: interval too small to bisect");
    Segment left = kronrod15(f, worst.a, mid);
    Segment right = kronrod15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.err + right.err - worst.err;
    segments.push(left);
    segments.push(right);
  }
  return total;
}

}  // namespace relaysec
