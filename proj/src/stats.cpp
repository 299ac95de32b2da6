#include "rhydro/stats.hpp"

#include <algorithm>
#include <cmath>

namespace rhydro {

std::vector<double> poisson_pmf_folded(double mean, int cap) {
  if (cap < 1) throw InputError("poisson_pmf_folded: cap must be >= 1");
  std::vector<double> pmf(static_cast<std::size_t>(cap) + 1, 0.0);
  double cum = 0.0;
  for (int k = 0; k < cap; ++k) {
    const double lp = mean > 0.0 ? -mean + k * std::log(mean) - std::lgamma(k + 1.0)
                                 : (k == 0 ? 0.0 : -1e30);
    const double p = std::exp(lp);
    pmf[static_cast<std::size_t>(k)] = p;
    cum += p;
  }
  pmf[static_cast<std::size_t>(cap)] = std::max(0.0, 1.0 - cum);
  return pmf;
}

double tv_distance_hist(const std::vector<std::int64_t>& histogram, double n_samples,
                        const std::vector<double>& pmf) {
  if (histogram.size() != pmf.size()) throw InputError("tv_distance: size mismatch");
  double tv = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i)
    tv += std::abs(static_cast<double>(histogram[i]) / n_samples - pmf[i]);
  return 0.5 * tv;
}

double tv_distance(const std::vector<std::int64_t>& values, const std::vector<double>& pmf) {
  if (values.empty()) throw InputError("tv_distance: no samples");
  const int cap = static_cast<int>(pmf.size()) - 1;
  std::vector<std::int64_t> hist(pmf.size(), 0);
  for (std::int64_t v : values) {
    const int cell = static_cast<int>(std::min<std::int64_t>(std::max<std::int64_t>(v, 0), cap));
    ++hist[static_cast<std::size_t>(cell)];
  }
  return tv_distance_hist(hist, static_cast<double>(values.size()), pmf);
}

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

double batch_standard_error(const std::vector<double>& xs, int batches) {
  if (static_cast<int>(xs.size()) < batches) batches = static_cast<int>(xs.size());
  if (batches < 2) return 0.0;
  std::vector<double> bm;
  bm.reserve(static_cast<std::size_t>(batches));
  const std::size_t per = xs.size() / static_cast<std::size_t>(batches);
  for (int b = 0; b < batches; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < per; ++i) s += xs[static_cast<std::size_t>(b) * per + i];
    bm.push_back(s / static_cast<double>(per));
  }
  return std::sqrt(variance(bm) / static_cast<double>(batches));
}

double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw InputError("pearson_correlation: need paired samples");
  const double mx = mean(xs), my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace rhydro
