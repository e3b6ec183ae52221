#pragma once
// Distributional test statistics and the few special functions the samplers
// and checks need (normal/gamma CDFs via GSL, chi-square p-values, stable
// log-sum accumulation).

#include <functional>
#include <vector>

namespace glc {

// Running log-sum-exp accumulator for sums of positive terms given by logs.
class LogAccumulator {
 public:
  void add_log(double l);
  double log_sum() const;  // -inf when empty
  bool empty() const { return empty_; }

 private:
  double max_ = 0, sum_ = 0;
  bool empty_ = true;
};

double log_add_exp(double a, double b);

double normal_cdf(double x);                    // standard normal
double gamma_cdf(double x, double shape);       // regularized lower incomplete gamma
double gamma_cdf_upper(double x, double shape); // regularized upper
double bessel_k(double nu, double x);           // modified Bessel K_nu (oracle use)
double lgamma_fn(double x);

// One-sample Kolmogorov-Smirnov statistic against a CDF (sorts a copy).
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
// Two-sample KS statistic.
double ks_statistic_2(std::vector<double> a, std::vector<double> b);

// Pearson chi-square p-value for observed counts vs expected proportions.
double chi_square_pvalue(const std::vector<long>& observed, const std::vector<double>& expected);

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace glc
