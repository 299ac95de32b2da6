#ifndef RHYDRO_RW_ORACLE_HPP
#define RHYDRO_RW_ORACLE_HPP

#include <vector>

#include "rhydro/linalg.hpp"
#include "rhydro/model.hpp"
#include "rhydro/profile.hpp"

namespace rhydro {

// Generator of the single tagged walk on {0,...,N}, diffusively scaled.
// Tridiagonal: Q(0,1) = alpha*N^(2-theta), Q(N,N-1) = N^2, interior
// off-diagonals N^2, rows sum to zero.
struct WalkGenerator {
  int N = 0;
  std::vector<double> lower, diag, upper;  // lower[0] and upper[N] unused

  Mat dense() const;
};

struct WalkLaw {
  double t = 0.0;
  Mat P;  // row-stochastic p_t(x,y)
};

WalkGenerator walk_generator(const ModelParams& p);

// Reversible probability of the single walk:
// pi(0) = (N^theta/alpha) / (N^theta/alpha + N), pi(x) = 1/(N^theta/alpha + N).
std::vector<double> stationary_pi(const ModelParams& p);

// exp(tQ) by uniformization: Poisson-weighted powers of the kernel
// I + Q/Lambda, truncated when the Poisson tail drops below 1e-12. Preserves
// nonnegativity and stochasticity exactly, which the distribution-level
// tests depend on. Dense guard at N = 2048.
WalkLaw transition_matrix(const ModelParams& p, double t);

// Exact time-t Poisson parameter field of the particle system started from
// the slowly varying measure of `profile`:
//   psi_t(x) = sum_y p_t(x,y) gamma(y/N)        for x >= 1,
//   psi_t(0) = (N^theta/alpha) * sum_y p_t(0,y) gamma(y/N).
// Uses the same uniformization applied matrix-free to the profile vector.
std::vector<double> poisson_field(const Profile& profile, double t, const ModelParams& p);

// Joint Laplace transform E[exp(-sum_x zeta(x) eta_t(x))] under the slowly
// varying initial measure: exp(sum_x (e^{-zeta(x)} - 1) psi_t(x)), the
// product-Poisson transform with the field above (site 0 included).
double joint_laplace(const Profile& profile, double t, const std::vector<double>& zeta,
                     const ModelParams& p);

}  // namespace rhydro

#endif
