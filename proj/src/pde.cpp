#include "rhydro/pde.hpp"

#include <algorithm>
#include <cmath>

#include "rhydro/linalg.hpp"
#include "rhydro/measures.hpp"
#include "rhydro/quadrature.hpp"

namespace rhydro {

std::string to_string(Bc bc) {
  switch (bc) {
    case Bc::Neumann: return "neumann";
    case Bc::Wentzell: return "wentzell";
    case Bc::HomWentzell: return "hom-wentzell";
    case Bc::NonlocalDirichlet: return "nonlocal";
    case Bc::DirichletFixed: return "dirichlet";
    case Bc::SepNonlinear: return "sep-nonlinear";
    case Bc::HomDirichlet: return "hom-dirichlet";
  }
  return "?";
}

Bc bc_from_string(const std::string& name) {
  if (name == "neumann") return Bc::Neumann;
  if (name == "wentzell") return Bc::Wentzell;
  if (name == "hom-wentzell") return Bc::HomWentzell;
  if (name == "nonlocal") return Bc::NonlocalDirichlet;
  if (name == "dirichlet") return Bc::DirichletFixed;
  if (name == "sep-nonlinear") return Bc::SepNonlinear;
  if (name == "hom-dirichlet") return Bc::HomDirichlet;
  throw InputError("unknown boundary condition: " + name);
}

bool bc_uses_mass(Bc bc) {
  return bc == Bc::Wentzell || bc == Bc::NonlocalDirichlet || bc == Bc::SepNonlinear;
}

double PdeProblem::resolved_mass() const {
  if (!bc_uses_mass(bc)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isnan(M)) return conserved_mass_M(gamma, alpha);
  return M;
}

void PdeProblem::validate() const {
  if (gamma.empty()) throw InputError("pde: no initial profile");
  if (!(alpha > 0.0)) throw InputError("pde: alpha must be > 0");
  if (!(T > 0.0)) throw InputError("pde: horizon must be positive");
  if (!(record_dt > 0.0)) throw InputError("pde: record_dt must be positive");
  if (bc == Bc::SepNonlinear && gamma.max_value() > 1.0 + 1e-12)
    throw InputError("pde: exclusion boundary needs initial data in [0,1]");
  if (bc == Bc::NonlocalDirichlet || bc == Bc::SepNonlinear) {
    const double bulk = integrate([this](double u) { return gamma(u); }, 0.0, 1.0, 1e-10);
    if (resolved_mass() < bulk - 1e-12)
      throw InputError("pde: M smaller than the bulk mass; reservoir would be negative");
  }
}

int PdeSolution::time_index(double t) const {
  for (int i = 0; i < nt(); ++i)
    if (std::abs(t_grid[static_cast<std::size_t>(i)] - t) < 1e-9) return i;
  throw InputError("solution not recorded at requested time");
}

double PdeSolution::bulk_integral(int i) const {
  const int n = nu();
  const double h = u_grid[1] - u_grid[0];
  double s = 0.5 * (value(i, 0) + value(i, n - 1));
  for (int j = 1; j < n - 1; ++j) s += value(i, j);
  return s * h;
}

namespace {

struct RecordPlan {
  double dt = 0.0;          // adjusted so records land on step boundaries
  int steps_per_record = 1;
  int records = 0;          // record count past t=0
};

RecordPlan plan_steps(const PdeProblem& pr, double dt) {
  if (!(dt > 0.0)) throw InputError("pde: dt must be positive");
  RecordPlan plan;
  plan.steps_per_record = std::max(1, static_cast<int>(std::lround(pr.record_dt / dt)));
  plan.dt = pr.record_dt / plan.steps_per_record;
  plan.records = static_cast<int>(std::lround(pr.T / pr.record_dt));
  if (plan.records < 1) throw InputError("pde: horizon shorter than record_dt");
  return plan;
}

void guard_blowup(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x) || std::abs(x) > 1e6)
      throw NumericError("pde: solution blew up; reduce dt");
}

double trapz(const std::vector<double>& v, double h) {
  double s = 0.5 * (v.front() + v.back());
  for (std::size_t j = 1; j + 1 < v.size(); ++j) s += v[j];
  return s * h;
}

}  // namespace

PdeSolution solve_fd(const PdeProblem& problem, int nx, double dt) {
  problem.validate();
  if (nx < 16) throw InputError("solve_fd: nx must be >= 16");
  const RecordPlan plan = plan_steps(problem, dt);
  const double h = 1.0 / nx;
  const double r = plan.dt / (h * h);
  const int n = nx + 1;
  const double mass = problem.resolved_mass();
  const double g0 = problem.gamma(0.0);

  // constant-coefficient Crank-Nicolson system; row 0 per boundary type
  const bool dirichlet_row =
      problem.bc == Bc::DirichletFixed || problem.bc == Bc::HomDirichlet ||
      problem.bc == Bc::NonlocalDirichlet || problem.bc == Bc::SepNonlinear ||
      problem.bc == Bc::HomWentzell;

  BandedLU lhs(n, 1, 2);
  for (int i = 1; i < n - 1; ++i) {
    lhs.at(i, i - 1) = -0.5 * r;
    lhs.at(i, i) = 1.0 + r;
    lhs.at(i, i + 1) = -0.5 * r;
  }
  lhs.at(n - 1, n - 2) = -r;
  lhs.at(n - 1, n - 1) = 1.0 + r;
  const double c = problem.alpha * plan.dt / (4.0 * h);
  if (problem.bc == Bc::Neumann) {
    lhs.at(0, 0) = 1.0 + r;
    lhs.at(0, 1) = -r;
  } else if (problem.bc == Bc::Wentzell) {
    lhs.at(0, 0) = 1.0 + 3.0 * c;
    lhs.at(0, 1) = -4.0 * c;
    lhs.at(0, 2) = c;
  } else {
    lhs.at(0, 0) = 1.0;
  }
  lhs.factor();

  std::vector<double> rho(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) rho[static_cast<std::size_t>(j)] = problem.gamma(j * h);

  PdeSolution sol;
  sol.bc = problem.bc;
  sol.alpha = problem.alpha;
  sol.M = mass;
  sol.u_grid.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) sol.u_grid[static_cast<std::size_t>(j)] = j * h;

  auto record = [&](double t) {
    sol.t_grid.push_back(t);
    sol.values.insert(sol.values.end(), rho.begin(), rho.end());
    sol.boundary_trace.push_back(rho[0]);
  };
  record(0.0);

  std::vector<double> rhs(static_cast<std::size_t>(n));
  for (int rec = 1; rec <= plan.records; ++rec) {
    for (int s = 0; s < plan.steps_per_record; ++s) {
      for (int i = 1; i < n - 1; ++i)
        rhs[static_cast<std::size_t>(i)] =
            rho[static_cast<std::size_t>(i)] +
            0.5 * r * (rho[static_cast<std::size_t>(i - 1)] - 2.0 * rho[static_cast<std::size_t>(i)] +
                       rho[static_cast<std::size_t>(i + 1)]);
      rhs[static_cast<std::size_t>(n - 1)] =
          rho[static_cast<std::size_t>(n - 1)] +
          r * (rho[static_cast<std::size_t>(n - 2)] - rho[static_cast<std::size_t>(n - 1)]);

      switch (problem.bc) {
        case Bc::Neumann:
          rhs[0] = rho[0] + r * (rho[1] - rho[0]);
          break;
        case Bc::Wentzell:
          rhs[0] = (1.0 - 3.0 * c) * rho[0] + 4.0 * c * rho[1] - c * rho[2];
          break;
        case Bc::HomWentzell:
          rhs[0] = rho[0];  // d_t rho(t,0) = d_uu rho(t,0) = 0
          break;
        case Bc::DirichletFixed:
          rhs[0] = g0;
          break;
        case Bc::HomDirichlet:
          rhs[0] = 0.0;
          break;
        case Bc::NonlocalDirichlet: {
          const double m = mass - trapz(rho, h);
          rhs[0] = problem.alpha * m;
          break;
        }
        case Bc::SepNonlinear: {
          const double m = mass - trapz(rho, h);
          rhs[0] = problem.alpha * m / (1.0 + problem.alpha * m);
          break;
        }
      }
      lhs.solve(rhs);
      rho.swap(rhs);
    }
    guard_blowup(rho);
    record(rec * problem.record_dt);
  }
  return sol;
}

std::vector<double> project(const Profile& profile, const Eigenbasis& basis,
                            double abs_tol) {
  std::vector<double> c(static_cast<std::size_t>(basis.K));
  for (int k = 0; k < basis.K; ++k) {
    c[static_cast<std::size_t>(k)] = integrate(
        [&](double u) { return profile(u) * basis.eval(k, u); }, 0.0, 1.0, abs_tol);
  }
  return c;
}

namespace {

// coefficients of a grid function by composite Simpson (odd point count)
std::vector<double> grid_coefficients(const std::vector<double>& xi,
                                      const Eigenbasis& basis) {
  const std::size_t n = xi.size();
  if (n < 3 || n % 2 == 0)
    throw InputError("energy_functional: need a uniform grid with an odd point count");
  const double h = 1.0 / static_cast<double>(n - 1);
  std::vector<double> c(static_cast<std::size_t>(basis.K), 0.0);
  for (int k = 0; k < basis.K; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j + 2 < n; j += 2) {
      const double u0 = h * static_cast<double>(j);
      const double u1 = u0 + h;
      const double u2 = u0 + 2 * h;
      s += xi[j] * basis.eval(k, u0) + 4.0 * xi[j + 1] * basis.eval(k, u1) +
           xi[j + 2] * basis.eval(k, u2);
    }
    c[static_cast<std::size_t>(k)] = s * h / 3.0;
  }
  return c;
}

struct SpectralSystem {
  const PdeProblem& pr;
  Eigenbasis basis;
  double mass = 0.0;
  std::vector<double> v;  // Psi_k'(0)
  std::vector<double> w;  // <1, Psi_k> = 2 / Psi_k'(0)

  explicit SpectralSystem(const PdeProblem& p, int K)
      : pr(p), basis(p.bc == Bc::Neumann ? Eigenbasis::Kind::NN : Eigenbasis::Kind::DN, K) {
    mass = pr.resolved_mass();
    v.resize(static_cast<std::size_t>(K));
    w.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
      v[static_cast<std::size_t>(k)] = basis.dpsi0(k);
      w[static_cast<std::size_t>(k)] =
          basis.kind == Eigenbasis::Kind::DN ? 2.0 / basis.dpsi0(k) : (k == 0 ? 1.0 : 0.0);
    }
  }

  double bulk_from_coeffs(const std::vector<double>& c) const {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += w[k] * c[k];
    return s;
  }
};

}  // namespace

PdeSolution solve_spectral(const PdeProblem& problem, int K, double dt, int nx_out) {
  problem.validate();
  if (K < 8) throw InputError("solve_spectral: K must be >= 8");
  if (nx_out < 16) throw InputError("solve_spectral: output grid too coarse");
  const RecordPlan plan = plan_steps(problem, dt);

  SpectralSystem sys(problem, K);
  std::vector<double> coeff = project(problem.gamma, sys.basis);

  // Effective boundary family: the Wentzell conditions integrate in time to
  // the mass-coupled (resp. fixed) Dirichlet data, and that is the form the
  // mode system uses.
  Bc eff = problem.bc;
  if (eff == Bc::Wentzell) eff = Bc::NonlocalDirichlet;
  if (eff == Bc::HomWentzell) eff = Bc::DirichletFixed;

  const double g0 = problem.gamma(0.0);
  const double mass = sys.mass;
  const double alpha = problem.alpha;

  // per-record advance for the linear variants (exact for any step size);
  // the augmented row keeps the affine drive inside one exponential
  Mat E;
  if (eff == Bc::NonlocalDirichlet) {
    Mat G(K + 1, K + 1);
    for (int k = 0; k < K; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      for (int l = 0; l < K; ++l)
        G(k, l) = -alpha * sys.v[ks] * sys.w[static_cast<std::size_t>(l)];
      G(k, k) += -sys.basis.eigenvalue(k);
      G(k, K) = alpha * mass * sys.v[ks];
    }
    for (int i = 0; i <= K; ++i)
      for (int j = 0; j <= K; ++j) G(i, j) *= problem.record_dt;
    E = matexp(G);
  }

  auto bulk = [&](const std::vector<double>& c) { return sys.bulk_from_coeffs(c); };

  auto boundary_value = [&](const std::vector<double>& c) -> double {
    switch (eff) {
      case Bc::NonlocalDirichlet:
        return alpha * (mass - bulk(c));
      case Bc::SepNonlinear: {
        const double m = mass - bulk(c);
        return alpha * m / (1.0 + alpha * m);
      }
      case Bc::DirichletFixed:
        return g0;
      case Bc::HomDirichlet:
        return 0.0;
      case Bc::Neumann: {
        double s = 0.0;
        for (int k = 0; k < K; ++k) s += c[static_cast<std::size_t>(k)] * sys.basis.eval(k, 0.0);
        return s;
      }
      default:
        return 0.0;
    }
  };

  // mode derivative for the nonlinear exclusion boundary
  auto deriv = [&](const std::vector<double>& c, std::vector<double>& out) {
    const double rho0 = boundary_value(c);
    for (int k = 0; k < K; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      out[ks] = -sys.basis.eigenvalue(k) * c[ks] + rho0 * sys.v[ks];
    }
  };

  PdeSolution sol;
  sol.bc = problem.bc;
  sol.alpha = alpha;
  sol.M = mass;
  sol.n_modes = K;
  const int nu = nx_out + 1;
  sol.u_grid.resize(static_cast<std::size_t>(nu));
  for (int j = 0; j < nu; ++j)
    sol.u_grid[static_cast<std::size_t>(j)] = static_cast<double>(j) / nx_out;

  // basis values on the output grid
  std::vector<double> B(static_cast<std::size_t>(K) * nu);
  for (int k = 0; k < K; ++k)
    for (int j = 0; j < nu; ++j)
      B[static_cast<std::size_t>(k) * nu + j] =
          sys.basis.eval(k, sol.u_grid[static_cast<std::size_t>(j)]);

  double tail_num = coeff.back() * coeff.back();
  double tail_den = 0.0;
  for (double ck : coeff) tail_den += ck * ck;
  sol.tail_energy_ratio = tail_den > 0.0 ? tail_num / tail_den : 0.0;
  sol.tail_warning = sol.tail_energy_ratio > 1e-6;

  // Values are reconstructed as b + sum (c_k - b w_k) Psi_k: the boundary
  // value plus a remainder that vanishes at u = 0, so the slowly converging
  // constant part of the sine expansion never touches the grid. The reported
  // boundary trace is the bc relation applied to the reported bulk mass,
  // which keeps trace, mass and M coherent in the output.
  const bool dn = sys.basis.kind == Eigenbasis::Kind::DN;
  auto record = [&](double t, const std::vector<double>& c, bool initial) {
    sol.t_grid.push_back(t);
    const std::size_t base = sol.values.size();
    sol.values.resize(base + static_cast<std::size_t>(nu));
    if (initial) {
      for (int j = 0; j < nu; ++j)
        sol.values[base + static_cast<std::size_t>(j)] =
            problem.gamma(sol.u_grid[static_cast<std::size_t>(j)]);
    } else {
      const double b = dn ? boundary_value(c) : 0.0;
      for (int j = 0; j < nu; ++j) {
        double s = b;
        for (int k = 0; k < K; ++k)
          s += (c[static_cast<std::size_t>(k)] - b * sys.w[static_cast<std::size_t>(k)]) *
               B[static_cast<std::size_t>(k) * nu + j];
        sol.values[base + static_cast<std::size_t>(j)] = s;
      }
    }
    double trace;
    switch (eff) {
      case Bc::NonlocalDirichlet: {
        const double m = mass - sol.bulk_integral(static_cast<int>(sol.t_grid.size()) - 1);
        trace = alpha * m;
        break;
      }
      case Bc::SepNonlinear: {
        const double m = mass - sol.bulk_integral(static_cast<int>(sol.t_grid.size()) - 1);
        trace = alpha * m / (1.0 + alpha * m);
        break;
      }
      default:
        trace = initial ? problem.gamma(0.0)
                        : sol.values[base];
        break;
    }
    sol.boundary_trace.push_back(trace);
    sol.coeffs.insert(sol.coeffs.end(), c.begin(), c.end());
  };
  record(0.0, coeff, true);

  const std::size_t Ks = static_cast<std::size_t>(K);
  std::vector<double> k1(Ks), k2(Ks), k3(Ks), k4(Ks), tmp(Ks);

  for (int rec = 1; rec <= plan.records; ++rec) {
    switch (eff) {
      case Bc::Neumann:
      case Bc::HomDirichlet: {
        for (int k = 0; k < K; ++k)
          coeff[static_cast<std::size_t>(k)] *=
              std::exp(-sys.basis.eigenvalue(k) * problem.record_dt);
        break;
      }
      case Bc::DirichletFixed: {
        for (int k = 0; k < K; ++k) {
          const auto ks = static_cast<std::size_t>(k);
          const double lam = sys.basis.eigenvalue(k);
          const double decay = std::exp(-lam * problem.record_dt);
          coeff[ks] = decay * coeff[ks] + g0 * sys.v[ks] * (1.0 - decay) / lam;
        }
        break;
      }
      case Bc::NonlocalDirichlet: {
        std::vector<double> next(Ks, 0.0);
        for (int k = 0; k < K; ++k) {
          double s = E(k, K);  // affine part
          for (int l = 0; l < K; ++l) s += E(k, l) * coeff[static_cast<std::size_t>(l)];
          next[static_cast<std::size_t>(k)] = s;
        }
        coeff.swap(next);
        break;
      }
      case Bc::SepNonlinear: {
        for (int s = 0; s < plan.steps_per_record; ++s) {
          deriv(coeff, k1);
          for (std::size_t i = 0; i < Ks; ++i) tmp[i] = coeff[i] + 0.5 * plan.dt * k1[i];
          deriv(tmp, k2);
          for (std::size_t i = 0; i < Ks; ++i) tmp[i] = coeff[i] + 0.5 * plan.dt * k2[i];
          deriv(tmp, k3);
          for (std::size_t i = 0; i < Ks; ++i) tmp[i] = coeff[i] + plan.dt * k3[i];
          deriv(tmp, k4);
          for (std::size_t i = 0; i < Ks; ++i)
            coeff[i] += plan.dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        break;
      }
      default:
        break;
    }
    guard_blowup(coeff);
    record(rec * problem.record_dt, coeff, false);
  }
  return sol;
}

double energy_functional(const std::vector<double>& xi, const Eigenbasis& basis) {
  return energy_from_coefficients(grid_coefficients(xi, basis), basis);
}

double energy_from_coefficients(const std::vector<double>& coeffs, const Eigenbasis& basis) {
  double e = 0.0;
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    const double lam = basis.eigenvalue(k);
    if (lam <= 0.0) continue;  // NN constant mode: callers pass mean-free data
    const double ck = coeffs[static_cast<std::size_t>(k)];
    e += ck * ck / (2.0 * lam);
  }
  return e;
}

double reservoir_mass(const PdeSolution& sol, double t) {
  if (!bc_uses_mass(sol.bc))
    throw InputError("reservoir_mass: boundary condition carries no reservoir");
  const int i = sol.time_index(t);
  return sol.M - sol.bulk_integral(i);
}

double wentzell_conserved(const PdeSolution& sol, double t) {
  if (!bc_uses_mass(sol.bc))
    throw InputError("wentzell_conserved: boundary condition carries no reservoir");
  const int i = sol.time_index(t);
  return sol.boundary_trace[static_cast<std::size_t>(i)] / sol.alpha + sol.bulk_integral(i);
}

}  // namespace rhydro
