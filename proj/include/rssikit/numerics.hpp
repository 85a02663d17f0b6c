#pragma once

#include <functional>

namespace rssikit {

// Regularized incomplete beta I_x(a, b) via Lentz's continued fraction,
// converged to 1e-12. Self-contained so p-values do not depend on an
// external stats library.
double regularized_incomplete_beta(double a, double b, double x);

// Survival function of the F distribution with (df1, df2) degrees of
// freedom: P(F > f).
double f_distribution_sf(double f, double df1, double df2);

// Adaptive Simpson quadrature of fn over [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& fn, double a, double b,
                 double tol = 1e-10);

double normal_pdf(double x, double mu, double var);

}  // namespace rssikit
