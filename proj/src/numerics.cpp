#include "rssikit/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "rssikit/errors.hpp"

namespace rssikit {

namespace {

constexpr double kBetaEps = 1e-12;
constexpr int kBetaMaxIter = 500;

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  const double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kBetaMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kBetaEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

double simpson(const std::function<double(double)>& fn, double a, double b,
               double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& fn, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = simpson(fn, a, m, fa, flm, fm);
  const double right = simpson(fn, m, b, fm, frm, fb);
  if (depth <= 0) return left + right;
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw InputError("incomplete beta requires positive shape parameters");
  if (x < 0.0 || x > 1.0) throw InputError("incomplete beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double f_distribution_sf(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0))
    throw InputError("F distribution requires positive degrees of freedom");
  if (std::isinf(f)) return 0.0;
  if (f <= 0.0) return 1.0;
  const double x = df2 / (df2 + df1 * f);
  return regularized_incomplete_beta(0.5 * df2, 0.5 * df1, x);
}

double integrate(const std::function<double(double)>& fn, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  const double fa = fn(a);
  const double m = 0.5 * (a + b);
  const double fm = fn(m);
  const double fb = fn(b);
  const double whole = simpson(fn, a, b, fa, fm, fb);
  return adaptive_simpson(fn, a, b, fa, fm, fb, whole, tol, 48);
}

double normal_pdf(double x, double mu, double var) {
  const double inv_sqrt_2pi = 0.3989422804014327;
  const double d = x - mu;
  return inv_sqrt_2pi / std::sqrt(var) * std::exp(-0.5 * d * d / var);
}

}  // namespace rssikit
