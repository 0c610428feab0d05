#pragma once

#include <vector>

namespace irsnoma {

/// Natural-log parameters of a log-normal distribution.
/// mu is the location and sigma2 the variance of ln X. Natural logs are used
/// everywhere; the moment-matching identities below only hold in natural log.
struct LogNormalParams {
  double mu = 0.0;
  double sigma2 = 1.0;
};

/// Regularized lower incomplete gamma P(shape, x) = gamma(shape, x) / Gamma(shape).
///
/// Series expansion for x < shape + 1, Lentz continued fraction otherwise,
/// iterated to ~1e-16 relative so the result is accurate to the last few ulps
/// across the wide threshold ranges the outage expressions sweep.
/// Throws std::domain_error for shape <= 0, x < 0, or non-finite input.
double reg_lower_gamma(double shape, double x);

/// Standard normal CDF via erfc; keeps full accuracy deep into both tails.
/// Throws std::domain_error on non-finite input.
double std_normal_cdf(double x);

/// Log-normal with the given first two moments (mean > 0, variance > 0):
///   sigma2 = ln(1 + v/m^2),  mu = ln m - sigma2/2  (= ln(m^2 / sqrt(m^2 + v))).
/// Throws std::domain_error on non-positive input.
LogNormalParams lognormal_from_moments(double mean, double variance);

/// Parameters of the product of independent log-normal factors: sums of
/// (mu, sigma2). Throws std::invalid_argument on an empty list.
LogNormalParams lognormal_product(const std::vector<LogNormalParams>& factors);

/// CDF of LogNormal(p) at x; 0 for x <= 0.
double lognormal_cdf(double x, const LogNormalParams& p);

/// First two moments implied by LogNormalParams (exact inverses of
/// lognormal_from_moments).
double lognormal_mean(const LogNormalParams& p);
double lognormal_variance(const LogNormalParams& p);

}  // namespace irsnoma
