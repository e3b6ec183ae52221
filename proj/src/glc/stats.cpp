#include "glc/stats.hpp"

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "glc/lie.hpp"  // GlcError

namespace glc {

void LogAccumulator::add_log(double l) {
  if (l == -std::numeric_limits<double>::infinity()) return;
  if (empty_) {
    max_ = l;
    sum_ = 1.0;
    empty_ = false;
    return;
  }
  if (l <= max_) {
    sum_ += std::exp(l - max_);
  } else {
    sum_ = sum_ * std::exp(max_ - l) + 1.0;
    max_ = l;
  }
}

double LogAccumulator::log_sum() const {
  if (empty_) return -std::numeric_limits<double>::infinity();
  return max_ + std::log(sum_);
}

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

double gamma_cdf(double x, double shape) {
  if (x <= 0) return 0;
  return gsl_sf_gamma_inc_P(shape, x);
}
double gamma_cdf_upper(double x, double shape) {
  if (x <= 0) return 1;
  return gsl_sf_gamma_inc_Q(shape, x);
}

double bessel_k(double nu, double x) { return gsl_sf_bessel_Knu(std::abs(nu), x); }
double lgamma_fn(double x) { return gsl_sf_lngamma(x); }

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  double n = static_cast<double>(sample.size());
  double d = 0;
  for (size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

double ks_statistic_2(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    double fa = static_cast<double>(i) / static_cast<double>(a.size());
    double fb = static_cast<double>(j) / static_cast<double>(b.size());
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

double chi_square_pvalue(const std::vector<long>& observed, const std::vector<double>& expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw GlcError("InvalidState", "chi-square size mismatch");
  long total = 0;
  for (long c : observed) total += c;
  double stat = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    double e = expected[i] * static_cast<double>(total);
    if (e <= 0) throw GlcError("InvalidState", "zero expected cell");
    double diff = static_cast<double>(observed[i]) - e;
    stat += diff * diff / e;
  }
  double df = static_cast<double>(observed.size()) - 1.0;
  return gsl_cdf_chisq_Q(stat, df);
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace glc
