#ifndef RHYDRO_STATS_HPP
#define RHYDRO_STATS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "rhydro/errors.hpp"

namespace rhydro {

// Truncated support for distribution comparisons: cap at mean + 10 sqrt(mean),
// with a small floor so short-support cases keep a few cells.
inline int support_cap(double mean) {
  return std::max(8, static_cast<int>(std::ceil(mean + 10.0 * std::sqrt(std::max(mean, 1.0)))));
}

// Poisson pmf on {0..cap} with the upper tail folded into the last cell.
std::vector<double> poisson_pmf_folded(double mean, int cap);

// Bernoulli pmf {1-p, p}.
inline std::vector<double> bernoulli_pmf(double p) { return {1.0 - p, p}; }

// Total variation distance between sample values (folded at the pmf cap) and
// a reference pmf.
double tv_distance(const std::vector<std::int64_t>& values, const std::vector<double>& pmf);

// TV from a prebuilt histogram over {0..cap}.
double tv_distance_hist(const std::vector<std::int64_t>& histogram, double n_samples,
                        const std::vector<double>& pmf);

double mean(const std::vector<double>& xs);
double variance(const std::vector<double>& xs);  // unbiased

// Standard error from 10 consecutive batches.
double batch_standard_error(const std::vector<double>& xs, int batches = 10);

double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace rhydro

#endif
