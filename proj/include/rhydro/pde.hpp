#ifndef RHYDRO_PDE_HPP
#define RHYDRO_PDE_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rhydro/profile.hpp"

namespace rhydro {

// Left-boundary variants of the heat equation on [0,1]; the right boundary
// is homogeneous Neumann in every case.
enum class Bc {
  Neumann,           // d_u rho(t,0) = 0
  Wentzell,          // d_uu rho(t,0) = alpha d_u rho(t,0)
  HomWentzell,       // d_uu rho(t,0) = 0
  NonlocalDirichlet, // rho(t,0) = alpha (M - int rho)
  DirichletFixed,    // rho(t,0) = gamma(0)
  SepNonlinear,      // rho(t,0)/(1-rho(t,0)) = alpha (M - int rho)
  HomDirichlet       // rho(t,0) = 0
};

std::string to_string(Bc bc);
Bc bc_from_string(const std::string& name);

bool bc_uses_mass(Bc bc);  // true for Wentzell / NonlocalDirichlet / SepNonlinear

struct PdeProblem {
  Bc bc = Bc::Neumann;
  double alpha = 1.0;
  // Conserved total mass for the mass-coupled variants; NaN means "derive
  // gamma(0)/alpha + int gamma from the initial profile".
  double M = std::numeric_limits<double>::quiet_NaN();
  Profile gamma;
  double T = 1.0;
  double record_dt = 0.01;  // output cadence (both backends)

  // Resolves M (auto if NaN) and checks the range/mass invariants.
  double resolved_mass() const;
  void validate() const;
};

struct PdeSolution {
  Bc bc = Bc::Neumann;
  double alpha = 0.0;
  double M = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> t_grid;
  std::vector<double> u_grid;
  // values[i*u_grid.size() + j] = rho(t_i, u_j)
  std::vector<double> values;
  // rho(t,0) in the sense of the boundary relation (the sine basis vanishes
  // at u = 0, so the spectral grid value alone would not carry the trace)
  std::vector<double> boundary_trace;
  // coefficient history when produced by the spectral backend (row-major,
  // one row of K coefficients per recorded time); empty for FD solutions
  std::vector<double> coeffs;
  int n_modes = 0;
  double tail_energy_ratio = 0.0;
  bool tail_warning = false;

  int nt() const { return static_cast<int>(t_grid.size()); }
  int nu() const { return static_cast<int>(u_grid.size()); }
  double value(int i, int j) const {
    return values[static_cast<std::size_t>(i) * u_grid.size() + static_cast<std::size_t>(j)];
  }
  // grid value with the boundary trace substituted at u = 0; use this when
  // comparing solutions pointwise
  double value_traced(int i, int j) const {
    return j == 0 ? boundary_trace[static_cast<std::size_t>(i)] : value(i, j);
  }
  int time_index(double t) const;
  // trapezoid of rho(t_i, .) over [0,1], in the solution's own grid
  // convention (mass identities are self-consistent against it)
  double bulk_integral(int i) const;
};

// Sturm-Liouville eigenbasis on [0,1]: DN (Dirichlet left / Neumann right,
// sqrt(2) sin(pi(k+1/2)u)) or NN (Neumann both sides, 1 and sqrt(2) cos(pi k u)).
struct Eigenbasis {
  enum class Kind { DN, NN };
  Kind kind = Kind::DN;
  int K = 0;

  Eigenbasis(Kind k, int modes) : kind(k), K(modes) {}

  double eigenvalue(int k) const {
    const double pi = 3.14159265358979323846;
    if (kind == Kind::DN) return pi * pi * (k + 0.5) * (k + 0.5);
    return pi * pi * k * k;
  }
  double eval(int k, double u) const {
    const double pi = 3.14159265358979323846;
    const double s = 1.4142135623730950488;
    if (kind == Kind::DN) return s * std::sin(pi * (k + 0.5) * u);
    return k == 0 ? 1.0 : s * std::cos(pi * k * u);
  }
  // derivative at the left boundary
  double dpsi0(int k) const {
    const double pi = 3.14159265358979323846;
    const double s = 1.4142135623730950488;
    return kind == Kind::DN ? s * pi * (k + 0.5) : 0.0;
  }
};

// Crank-Nicolson finite differences: 3-point interior Laplacian, mirrored
// ghost point on the right, boundary row per bc (the Wentzell condition in
// its dynamic form d_t rho(t,0) = alpha d_u rho(t,0) with the second-order
// one-sided stencil; mass-coupled Dirichlet values lagged by one step).
PdeSolution solve_fd(const PdeProblem& problem, int nx, double dt);

// Eigenfunction expansion. Linear variants advance with one reusable matrix
// exponential per uniform step (exact for any dt); the nonlinear exclusion
// boundary integrates the mode system with classical RK4. Output values are
// reconstructed on a uniform grid with nx_out intervals.
PdeSolution solve_spectral(const PdeProblem& problem, int K, double dt, int nx_out = 512);

// Coefficients <gamma, Psi_k> by adaptive quadrature.
std::vector<double> project(const Profile& profile, const Eigenbasis& basis,
                            double abs_tol = 1e-10);

// Energy sum_k <xi,Psi_k>^2 / (2 lambda_k) of a grid function (uniform grid,
// odd point count; composite Simpson per coefficient). Zero modes (the NN
// constant) are excluded: callers pass mean-free differences.
double energy_functional(const std::vector<double>& xi, const Eigenbasis& basis);

// Same energy evaluated directly from expansion coefficients.
double energy_from_coefficients(const std::vector<double>& coeffs, const Eigenbasis& basis);

// m(t) = M - int rho(t,.) by trapezoid; only mass-coupled variants carry a
// reservoir. Throws InputError for other boundary conditions.
double reservoir_mass(const PdeSolution& sol, double t);

// rho(t,0)/alpha + int rho(t,.), the quantity the Wentzell flow conserves.
double wentzell_conserved(const PdeSolution& sol, double t);

}  // namespace rhydro

#endif
