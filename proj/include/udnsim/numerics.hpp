#pragma once

/**
 * Small numeric kernels shared by the simulator and its verification suites:
 * adaptive Gauss quadrature, regularized incomplete gamma functions, a
 * log-log slope fit, Kolmogorov-Smirnov statistics and a chi-square
 * goodness-of-fit p-value, plus the FNV-1a digest used for run provenance.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace udnsim::numerics {

// Adaptive quadrature of f over the finite interval [a, b] using embedded
// Gauss 7/15 rules and bisection. Throws NumericError if the interval budget
// is exhausted before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-9, int max_intervals = 4000);

// Quadrature of f over [a, inf) via the substitution u = 1/r. The integrand
// must decay faster than r^-2.
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double rel_tol = 1e-9, int max_intervals = 4000);

// Regularized lower/upper incomplete gamma functions P(a, x) and Q(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// OLS slope of log(y) against log(x); all inputs must be positive.
double loglog_slope(std::span<const double> x, std::span<const double> y);

// Coefficient of determination of the linear fit y ~ a + b x.
double linear_r_squared(std::span<const double> x, std::span<const double> y);

// One-sample KS statistic of samples (unsorted ok) against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Two-sample KS statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Pearson chi-square GOF p-value given observed counts and cell probabilities
// (dof = cells - 1).
double chi_square_gof_pvalue(std::span<const std::uint64_t> observed,
                             std::span<const double> probabilities);

// FNV-1a 64-bit over bytes, as a lowercase hex string.
std::string fnv1a_hex(std::span<const unsigned char> bytes);
std::string fnv1a_hex(const std::string& text);

// Half-width of the normal-approximation 95% confidence interval.
double ci95_halfwidth(double sample_sd, std::size_t n);

}  // namespace udnsim::numerics
