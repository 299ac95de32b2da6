#ifndef RHYDRO_MEASURES_HPP
#define RHYDRO_MEASURES_HPP

#include <cstdint>
#include <vector>

#include "rhydro/model.hpp"
#include "rhydro/profile.hpp"

namespace rhydro {

// Product measure over the lattice: Poisson at the reservoir, and per-site
// Poisson means (RW) or Bernoulli probabilities (SEP) on the bulk.
struct ProductMeasure {
  ModelKind model = ModelKind::RW;
  double site0 = 0.0;               // Poisson mean of the reservoir
  std::vector<double> bulk;         // parameters for sites 1..N

  int N() const { return static_cast<int>(bulk.size()); }
};

// Slowly varying measure associated with gamma: reservoir mean
// (N^theta/alpha)*gamma(0), bulk parameter gamma(x/N).
ProductMeasure initial_measure(const Profile& profile, const ModelParams& p);

// Reversible measure. For RW, level = lambda > 0 (Poisson everywhere, the
// reservoir scaled by N^theta/alpha). For SEP, level = p in (0,1):
// Bernoulli(p) bulk and Poisson((N^theta/alpha)*p/(1-p)) reservoir.
ProductMeasure reversible_measure(double level, const ModelParams& p);

Configuration sample(const ProductMeasure& measure, std::uint64_t seed);

// Max relative detailed-balance defect of the unnormalized product weights
// over the mass-truncated state space. Exact reversible measures give
// ~1e-15; a 1% perturbation of any parameter pushes it above 1e-3.
double detailed_balance_residual(const ModelParams& p, const ProductMeasure& measure,
                                 std::int64_t mass_cap);

// Convenience: residual of the paper-form reversible measure at `level`.
double detailed_balance_residual(const ModelParams& p, double level,
                                 std::int64_t mass_cap);

// Closed-form sum over bulk sites of Bernoulli KL divergences
// KL(gamma(x/N) || p_ref). SEP only. It equals the relative entropy
// H(mu_N | nu_{p_ref}) exactly when p_ref/(1-p_ref) = gamma(0), which makes
// the reservoir marginals identical; choose p_ref that way.
double relative_entropy(const Profile& profile, double p_ref, const ModelParams& params);

// Total macroscopic mass gamma(0)/alpha + int_0^1 gamma.
double conserved_mass_M(const Profile& profile, double alpha);

}  // namespace rhydro

#endif
