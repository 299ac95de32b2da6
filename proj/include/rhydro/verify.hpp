#ifndef RHYDRO_VERIFY_HPP
#define RHYDRO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rhydro/kmc.hpp"
#include "rhydro/measures.hpp"
#include "rhydro/model.hpp"
#include "rhydro/pde.hpp"
#include "rhydro/profile.hpp"

namespace rhydro {

struct ReportRow {
  std::string label;
  int N = 0;
  double theta = 0.0;
  double t = 0.0;
  double u = 0.0;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct StatReport {
  std::string test;
  std::size_t samples = 0;
  std::vector<ReportRow> rows;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

// The limiting PDE of a (model, theta) pair, with M derived from gamma where
// the boundary couples to the total mass.
PdeProblem limiting_problem(const ModelParams& p, const Profile& gamma, double T);

// rho(t_index, u) with linear interpolation on the solution grid.
double eval_solution(const PdeSolution& sol, int t_index, double u);

// Window-marginal comparison against product Poisson laws: per-site TV
// against Poisson(psi[x]) (the verdict) and against Poisson(rho) (reported),
// plus pairwise correlations within the window. Separated from the sampler
// so the null behavior of the test itself can be calibrated synthetically.
StatReport window_marginal_report(const std::vector<std::vector<std::int64_t>>& windows,
                                  const std::vector<double>& psi_means, double rho_mean,
                                  double tv_threshold, const std::string& label,
                                  int N, double theta, double t, double u);

// Propagation of local equilibrium (RW): windows of width 2k+1 around
// floor(uN) for every u in `us`, one simulation batch shared across windows.
StatReport local_equilibrium_test(const ModelParams& p, const Profile& profile, double t,
                                  const std::vector<double>& us, int k, int replicas,
                                  std::uint64_t seed, double tv_threshold = 0.03);

// Hydrodynamic ladder: mean over replicas of
// |(1/N) sum H(x/N) eta_t(x) - int H rho(t,.)| for each H and each N in the
// ladder. `replicas` applies to the largest N and is scaled up proportionally
// for the smaller ones (they are cheap and the scaling equalizes the noise).
// Verdict per H: deviation decreasing along the ladder and final < threshold.
StatReport hydro_test(const ModelParams& p, const Profile& profile, double t,
                      const std::vector<Profile>& H_set, const std::vector<int>& ladder,
                      int replicas, std::uint64_t seed, double threshold = 0.02);

// Mean block average at the reservoir edge over replicas.
double boundary_density_probe(const ModelParams& p, const Profile& profile, double t,
                              double eps, int replicas, std::uint64_t seed);

// Regime-dependent SEP boundary report: theta < 1 compares the bulk mass to
// int gamma (Neumann conservation); theta = 1 compares the probe to
// alpha m(t)/(1 + alpha m(t)); theta > 1 runs a ladder of probes that must
// stay small and decrease with N.
StatReport boundary_probe_report(const ModelParams& p, const Profile& profile, double t,
                                 double eps, const std::vector<int>& ladder, int replicas,
                                 std::uint64_t seed);

// Start from the reversible measure and compare marginals at time t: bulk
// law pooled over sites and replicas, reservoir law over replicas.
StatReport stationarity_test(const ModelParams& p, double level, double t, int replicas,
                             std::uint64_t seed, double tv_threshold = 0.02);

// Time series of spatial L2 distance between two solutions on a common grid;
// verdict: max over t in [0.01, T] below tol.
StatReport equivalence_report(const PdeSolution& A, const PdeSolution& B, double tol);

}  // namespace rhydro

#endif
