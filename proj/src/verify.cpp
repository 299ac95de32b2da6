#include "rhydro/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rhydro/parallel.hpp"
#include "rhydro/quadrature.hpp"
#include "rhydro/rng.hpp"
#include "rhydro/rw_oracle.hpp"
#include "rhydro/stats.hpp"

namespace rhydro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// spectral resolution used whenever the harness needs the limiting density
constexpr int kModes = 128;
constexpr int kGrid = 1024;
// RK4 stability for the nonlinear mode system needs dt * lambda_max < 2.8
constexpr double kNonlinearDt = 1.25e-5;

double solver_dt(Bc bc) { return bc == Bc::SepNonlinear ? kNonlinearDt : 1e-3; }

// Runs `replicas` independent trajectories from the product measure and
// hands the configuration at time t to `sink(replica, cfg)`.
template <class Sink>
void run_replicas(const ModelParams& p, const ProductMeasure& measure, double t,
                  int replicas, std::uint64_t seed, const Sink& sink) {
  const std::vector<double> times = t > 0.0 ? std::vector<double>{t}
                                            : std::vector<double>{0.0};
  parallel_for(static_cast<std::size_t>(replicas), [&](std::size_t r) {
    const Configuration init = sample(measure, derive_seed(seed, 2 * r));
    const Trajectory traj = simulate(init, p, times, derive_seed(seed, 2 * r + 1));
    sink(r, traj.states.back());
  });
}

}  // namespace

PdeProblem limiting_problem(const ModelParams& p, const Profile& gamma, double T) {
  PdeProblem prob;
  prob.gamma = gamma;
  prob.alpha = p.alpha;
  prob.T = T;
  switch (p.regime()) {
    case Regime::Sub:
      prob.bc = Bc::Neumann;
      break;
    case Regime::Critical:
      prob.bc = p.model == ModelKind::RW ? Bc::NonlocalDirichlet : Bc::SepNonlinear;
      break;
    case Regime::Super:
      prob.bc = p.model == ModelKind::RW ? Bc::DirichletFixed : Bc::HomDirichlet;
      break;
  }
  return prob;
}

double eval_solution(const PdeSolution& sol, int t_index, double u) {
  const int n = sol.nu();
  const double h = sol.u_grid[1] - sol.u_grid[0];
  if (u <= sol.u_grid.front()) return sol.value_traced(t_index, 0);
  if (u >= sol.u_grid.back()) return sol.value_traced(t_index, n - 1);
  const int j = std::min(n - 2, static_cast<int>(u / h));
  const double w = (u - sol.u_grid[static_cast<std::size_t>(j)]) / h;
  return (1.0 - w) * sol.value_traced(t_index, j) + w * sol.value_traced(t_index, j + 1);
}

StatReport window_marginal_report(const std::vector<std::vector<std::int64_t>>& windows,
                                  const std::vector<double>& psi_means, double rho_mean,
                                  double tv_threshold, const std::string& label,
                                  int N, double theta, double t, double u) {
  if (windows.empty()) throw InputError("window_marginal_report: no samples");
  const std::size_t width = psi_means.size();
  for (const auto& w : windows)
    if (w.size() != width) throw InputError("window_marginal_report: width mismatch");

  StatReport rep;
  rep.test = label;
  rep.samples = windows.size();

  const double corr_bound = 4.0 / std::sqrt(static_cast<double>(windows.size()));

  std::vector<std::int64_t> col(windows.size());
  for (std::size_t s = 0; s < width; ++s) {
    for (std::size_t r = 0; r < windows.size(); ++r) col[r] = windows[r][s];
    const double psi = psi_means[s];

    const int cap = support_cap(std::max(psi, rho_mean));
    const double tv_psi = tv_distance(col, poisson_pmf_folded(psi, cap));
    rep.rows.push_back({"tv-psi[" + std::to_string(s) + "]", N, theta, t, u, tv_psi,
                        tv_threshold, tv_psi < tv_threshold});
    const double tv_rho = tv_distance(col, poisson_pmf_folded(rho_mean, cap));
    // diagnostic: carries the finite-N gap |psi - rho|, not gated
    rep.rows.push_back({"tv-rho[" + std::to_string(s) + "]", N, theta, t, u, tv_rho,
                        kInf, true});
  }

  std::vector<double> a(windows.size()), b(windows.size());
  for (std::size_t i = 0; i < width; ++i) {
    for (std::size_t j = i + 1; j < width; ++j) {
      for (std::size_t r = 0; r < windows.size(); ++r) {
        a[r] = static_cast<double>(windows[r][i]);
        b[r] = static_cast<double>(windows[r][j]);
      }
      const double c = std::abs(pearson_correlation(a, b));
      rep.rows.push_back({"corr[" + std::to_string(i) + "," + std::to_string(j) + "]", N,
                          theta, t, u, c, corr_bound, c < corr_bound});
    }
  }
  return rep;
}

StatReport local_equilibrium_test(const ModelParams& p, const Profile& profile, double t,
                                  const std::vector<double>& us, int k, int replicas,
                                  std::uint64_t seed, double tv_threshold) {
  if (p.model != ModelKind::RW)
    throw InputError("local_equilibrium_test targets the RW model (Poisson windows)");
  if (us.empty()) throw InputError("local_equilibrium_test: no window positions");
  if (replicas < 100) throw InputError("local_equilibrium_test: too few replicas");

  const ProductMeasure measure = initial_measure(profile, p);
  const std::vector<double> psi = poisson_field(profile, t, p);

  PdeProblem prob = limiting_problem(p, profile, t);
  prob.record_dt = t;
  const PdeSolution sol = solve_spectral(prob, kModes, solver_dt(prob.bc), kGrid);
  const int ti = sol.time_index(t);

  // window geometry per u
  struct Win {
    double u;
    int center;
  };
  std::vector<Win> wins;
  for (double u : us) {
    const int center = static_cast<int>(std::floor(u * p.N));
    if (center - k < 1 || center + k > p.N)
      throw InputError("local_equilibrium_test: window leaves the bulk");
    wins.push_back({u, center});
  }

  const std::size_t width = 2 * static_cast<std::size_t>(k) + 1;
  std::vector<std::vector<std::vector<std::int64_t>>> collected(
      wins.size(), std::vector<std::vector<std::int64_t>>(
                       static_cast<std::size_t>(replicas), std::vector<std::int64_t>(width)));

  run_replicas(p, measure, t, replicas, seed, [&](std::size_t r, const Configuration& cfg) {
    for (std::size_t wi = 0; wi < wins.size(); ++wi) {
      const auto counts = window_counts(cfg, wins[wi].u, k);
      collected[wi][r] = counts;
    }
  });

  StatReport rep;
  rep.test = "local-equilibrium";
  rep.samples = static_cast<std::size_t>(replicas);
  for (std::size_t wi = 0; wi < wins.size(); ++wi) {
    std::vector<double> psi_means(width);
    for (std::size_t s = 0; s < width; ++s)
      psi_means[s] = psi[static_cast<std::size_t>(wins[wi].center - k) + s];
    const double rho = eval_solution(sol, ti, wins[wi].u);
    StatReport sub = window_marginal_report(collected[wi], psi_means, rho, tv_threshold,
                                            "local-equilibrium", p.N, p.theta, t, wins[wi].u);
    rep.rows.insert(rep.rows.end(), sub.rows.begin(), sub.rows.end());
  }
  return rep;
}

StatReport hydro_test(const ModelParams& p, const Profile& profile, double t,
                      const std::vector<Profile>& H_set, const std::vector<int>& ladder,
                      int replicas, std::uint64_t seed, double threshold) {
  if (H_set.empty()) throw InputError("hydro_test: no test functions");
  if (ladder.empty()) throw InputError("hydro_test: empty ladder");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1]) throw InputError("hydro_test: ladder must increase");

  PdeProblem prob = limiting_problem(p, profile, t);
  prob.record_dt = t;
  const PdeSolution sol = solve_spectral(prob, kModes, solver_dt(prob.bc), kGrid);
  const int ti = sol.time_index(t);

  // int H rho(t,.) by trapezoid on the solver grid
  std::vector<double> target(H_set.size());
  for (std::size_t hi = 0; hi < H_set.size(); ++hi) {
    const double h = sol.u_grid[1] - sol.u_grid[0];
    double s = 0.5 * (H_set[hi](0.0) * sol.value_traced(ti, 0) +
                      H_set[hi](1.0) * sol.value_traced(ti, sol.nu() - 1));
    for (int j = 1; j + 1 < sol.nu(); ++j)
      s += H_set[hi](sol.u_grid[static_cast<std::size_t>(j)]) * sol.value_traced(ti, j);
    target[hi] = s * h;
  }

  const int n_max = ladder.back();
  StatReport rep;
  rep.test = "hydro";
  std::vector<std::vector<double>> devs(H_set.size());          // per H: stat per N
  std::vector<std::vector<double>> ses(H_set.size());

  std::uint64_t batch = 0;
  for (int N : ladder) {
    const ModelParams pn(p.model, N, p.theta, p.alpha);
    const ProductMeasure measure = initial_measure(profile, pn);
    const int reps = replicas * (n_max / N);
    rep.samples += static_cast<std::size_t>(reps);

    std::vector<std::vector<double>> Hgrid(H_set.size(), std::vector<double>(static_cast<std::size_t>(N)));
    for (std::size_t hi = 0; hi < H_set.size(); ++hi)
      for (int x = 1; x <= N; ++x)
        Hgrid[hi][static_cast<std::size_t>(x - 1)] = H_set[hi](static_cast<double>(x) / N);

    std::vector<std::vector<double>> dev(H_set.size(), std::vector<double>(static_cast<std::size_t>(reps)));
    run_replicas(pn, measure, t, reps, seed + 7919 * batch,
                 [&](std::size_t r, const Configuration& cfg) {
                   for (std::size_t hi = 0; hi < H_set.size(); ++hi)
                     dev[hi][r] = std::abs(empirical_pairing(cfg, Hgrid[hi]) - target[hi]);
                 });
    for (std::size_t hi = 0; hi < H_set.size(); ++hi) {
      devs[hi].push_back(mean(dev[hi]));
      ses[hi].push_back(batch_standard_error(dev[hi]));
    }
    ++batch;
  }

  for (std::size_t hi = 0; hi < H_set.size(); ++hi) {
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      const std::string tag = "H" + std::to_string(hi);
      rep.rows.push_back({tag + "-dev", ladder[i], p.theta, t, 0.0, devs[hi][i],
                          i == 0 ? kInf : devs[hi][i - 1],
                          i == 0 ? true : devs[hi][i] < devs[hi][i - 1]});
      rep.rows.push_back({tag + "-se", ladder[i], p.theta, t, 0.0, ses[hi][i], kInf, true});
    }
    const double final_dev = devs[hi].back();
    rep.rows.push_back({"H" + std::to_string(hi) + "-final", ladder.back(), p.theta, t, 0.0,
                        final_dev, threshold, final_dev < threshold});
  }
  return rep;
}

double boundary_density_probe(const ModelParams& p, const Profile& profile, double t,
                              double eps, int replicas, std::uint64_t seed) {
  if (p.model != ModelKind::SEP)
    throw InputError("boundary_density_probe is defined for the SEP model");
  const ProductMeasure measure = initial_measure(profile, p);
  std::vector<double> vals(static_cast<std::size_t>(replicas));
  run_replicas(p, measure, t, replicas, seed, [&](std::size_t r, const Configuration& cfg) {
    vals[r] = block_average(cfg, 0, eps);
  });
  return mean(vals);
}

StatReport boundary_probe_report(const ModelParams& p, const Profile& profile, double t,
                                 double eps, const std::vector<int>& ladder, int replicas,
                                 std::uint64_t seed) {
  if (p.model != ModelKind::SEP)
    throw InputError("boundary_probe_report is defined for the SEP model");
  StatReport rep;
  rep.test = "boundary-probe";
  rep.samples = static_cast<std::size_t>(replicas);

  switch (p.regime()) {
    case Regime::Sub: {
      // Neumann regime: the reservoir holds o(N) particles, so the bulk mass
      // stays at int gamma.
      const double gint = integrate([&](double u) { return profile(u); }, 0.0, 1.0, 1e-10);
      const ProductMeasure measure = initial_measure(profile, p);
      std::vector<double> masses(static_cast<std::size_t>(replicas));
      run_replicas(p, measure, t, replicas, seed, [&](std::size_t r, const Configuration& cfg) {
        masses[r] = static_cast<double>(total_mass(cfg) - cfg(0)) / p.N;
      });
      const double dev = std::abs(mean(masses) - gint);
      rep.rows.push_back({"bulk-mass", p.N, p.theta, t, 0.0, dev, 0.02, dev < 0.02});
      return rep;
    }
    case Regime::Critical: {
      PdeProblem prob = limiting_problem(p, profile, t);
      prob.record_dt = t;
      const PdeSolution sol = solve_spectral(prob, kModes, kNonlinearDt, kGrid);
      const double m = reservoir_mass(sol, t);
      const double target = p.alpha * m / (1.0 + p.alpha * m);
      const double probe = boundary_density_probe(p, profile, t, eps, replicas, seed);
      const double dev = std::abs(probe - target);
      rep.rows.push_back({"probe-vs-m", p.N, p.theta, t, 0.0, dev, 0.05, dev < 0.05});
      return rep;
    }
    case Regime::Super: {
      std::vector<double> probes;
      std::uint64_t batch = 0;
      const int n_max = ladder.empty() ? p.N : ladder.back();
      std::vector<int> ns = ladder.empty() ? std::vector<int>{p.N} : ladder;
      for (int N : ns) {
        const ModelParams pn(p.model, N, p.theta, p.alpha);
        const int reps = replicas * (n_max / N);
        probes.push_back(
            boundary_density_probe(pn, profile, t, eps, reps, seed + 104729 * batch));
        ++batch;
      }
      for (std::size_t i = 0; i < ns.size(); ++i) {
        rep.rows.push_back({"probe", ns[i], p.theta, t, 0.0, probes[i],
                            i == 0 ? kInf : probes[i - 1],
                            i == 0 ? true : probes[i] < probes[i - 1]});
      }
      rep.rows.push_back({"probe-final", ns.back(), p.theta, t, 0.0, probes.back(), 0.1,
                          probes.back() < 0.1});
      return rep;
    }
  }
  throw InputError("boundary_probe_report: unreachable");
}

StatReport stationarity_test(const ModelParams& p, double level, double t, int replicas,
                             std::uint64_t seed, double tv_threshold) {
  const ProductMeasure measure = reversible_measure(level, p);

  std::vector<std::int64_t> bulk(static_cast<std::size_t>(replicas) *
                                 static_cast<std::size_t>(p.N));
  std::vector<std::int64_t> res(static_cast<std::size_t>(replicas));
  run_replicas(p, measure, t, replicas, seed, [&](std::size_t r, const Configuration& cfg) {
    for (int x = 1; x <= p.N; ++x)
      bulk[r * static_cast<std::size_t>(p.N) + static_cast<std::size_t>(x - 1)] = cfg(x);
    res[r] = cfg(0);
  });

  StatReport rep;
  rep.test = "stationarity";
  rep.samples = static_cast<std::size_t>(replicas);

  double tv_bulk;
  if (p.model == ModelKind::RW) {
    tv_bulk = tv_distance(bulk, poisson_pmf_folded(level, support_cap(level)));
  } else {
    tv_bulk = tv_distance(bulk, bernoulli_pmf(level));
  }
  rep.rows.push_back({"bulk-tv", p.N, p.theta, t, 0.0, tv_bulk, tv_threshold,
                      tv_bulk < tv_threshold});

  const double tv_res =
      tv_distance(res, poisson_pmf_folded(measure.site0, support_cap(measure.site0)));
  rep.rows.push_back({"reservoir-tv", p.N, p.theta, t, 0.0, tv_res, tv_threshold,
                      tv_res < tv_threshold});
  return rep;
}

StatReport equivalence_report(const PdeSolution& A, const PdeSolution& B, double tol) {
  StatReport rep;
  rep.test = "equivalence";

  std::vector<std::pair<int, int>> common;
  for (int i = 0; i < A.nt(); ++i) {
    for (int j = 0; j < B.nt(); ++j) {
      if (std::abs(A.t_grid[static_cast<std::size_t>(i)] -
                   B.t_grid[static_cast<std::size_t>(j)]) < 1e-9) {
        common.emplace_back(i, j);
        break;
      }
    }
  }
  if (common.size() < 2)
    throw InputError("equivalence_report: solutions share no comparable times");

  const double h = A.u_grid[1] - A.u_grid[0];
  for (const auto& [ia, ib] : common) {
    const double t = A.t_grid[static_cast<std::size_t>(ia)];
    if (t < 0.01 - 1e-12) continue;
    std::vector<double> sq(static_cast<std::size_t>(A.nu()));
    for (int j = 0; j < A.nu(); ++j) {
      const double d =
          A.value_traced(ia, j) - eval_solution(B, ib, A.u_grid[static_cast<std::size_t>(j)]);
      sq[static_cast<std::size_t>(j)] = d * d;
    }
    double s = 0.5 * (sq.front() + sq.back());
    for (std::size_t j = 1; j + 1 < sq.size(); ++j) s += sq[j];
    const double l2 = std::sqrt(s * h);
    rep.rows.push_back({"l2", 0, 0.0, t, 0.0, l2, tol, l2 < tol});
  }
  if (rep.rows.empty())
    throw InputError("equivalence_report: no times at or after 0.01");
  return rep;
}

}  // namespace rhydro
