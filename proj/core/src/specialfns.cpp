#include "irsnoma/specialfns.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace irsnoma {

namespace {

constexpr int kMaxIter = 2000;

double lower_gamma_series(double a, double x, double lg) {
  // P(a,x) = x^a e^-x / Gamma(a) * sum_{n>=0} x^n / (a (a+1) ... (a+n))
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x) - lg);
}

double upper_gamma_cf(double a, double x, double lg) {
  // Q(a,x) by modified Lentz continued fraction.
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace

double reg_lower_gamma(double shape, double x) {
  if (!std::isfinite(shape) || !std::isfinite(x) || shape <= 0.0 || x < 0.0) {
    throw std::domain_error("reg_lower_gamma: requires shape > 0 and x >= 0, got shape=" +
                            std::to_string(shape) + " x=" + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  const double lg = std::lgamma(shape);
  if (x < shape + 1.0) return lower_gamma_series(shape, x, lg);
  return 1.0 - upper_gamma_cf(shape, x, lg);
}

double std_normal_cdf(double x) {
  if (!std::isfinite(x)) throw std::domain_error("std_normal_cdf: non-finite input");
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

LogNormalParams lognormal_from_moments(double mean, double variance) {
  if (!std::isfinite(mean) || !std::isfinite(variance) || mean <= 0.0 || variance <= 0.0) {
    throw std::domain_error("lognormal_from_moments: requires mean > 0 and variance > 0");
  }
  const double sigma2 = std::log1p(variance / (mean * mean));
  return {std::log(mean) - 0.5 * sigma2, sigma2};
}

LogNormalParams lognormal_product(const std::vector<LogNormalParams>& factors) {
  if (factors.empty()) throw std::invalid_argument("lognormal_product: empty factor list");
  LogNormalParams out{0.0, 0.0};
  for (const auto& f : factors) {
    out.mu += f.mu;
    out.sigma2 += f.sigma2;
  }
  return out;
}

double lognormal_cdf(double x, const LogNormalParams& p) {
  if (!(x > 0.0)) return 0.0;
  return std_normal_cdf((std::log(x) - p.mu) / std::sqrt(p.sigma2));
}

double lognormal_mean(const LogNormalParams& p) { return std::exp(p.mu + 0.5 * p.sigma2); }

double lognormal_variance(const LogNormalParams& p) {
  return std::expm1(p.sigma2) * std::exp(2.0 * p.mu + p.sigma2);
}

}  // namespace irsnoma
