#include <doctest.h>

#include <cmath>
#include <vector>

#include "rhydro/measures.hpp"
#include "rhydro/pde.hpp"
#include "rhydro/rng.hpp"
#include "rhydro/verify.hpp"

using namespace rhydro;

namespace {

constexpr double kPi = 3.14159265358979323846;

PdeProblem make_problem(Bc bc, const std::string& gamma, double alpha = 1.0,
                        double T = 0.25) {
  PdeProblem prob;
  prob.bc = bc;
  prob.alpha = alpha;
  prob.gamma = Profile::parse(gamma);
  prob.T = T;
  return prob;
}

double max_abs_row_diff(const PdeSolution& sol, int ti, const std::vector<double>& ref) {
  double worst = 0.0;
  for (int j = 0; j < sol.nu(); ++j)
    worst = std::max(worst, std::abs(sol.value(ti, j) - ref[static_cast<std::size_t>(j)]));
  return worst;
}

}  // namespace

TEST_CASE("eigenbasis orthonormality on a fine grid") {
  for (auto kind : {Eigenbasis::Kind::DN, Eigenbasis::Kind::NN}) {
    Eigenbasis basis(kind, 6);
    const int n = 4096;
    for (int a = 0; a < basis.K; ++a) {
      for (int b = a; b < basis.K; ++b) {
        // composite Simpson
        double s = 0.0;
        const double h = 1.0 / n;
        for (int j = 0; j + 2 <= n; j += 2) {
          const double u0 = j * h, u1 = u0 + h, u2 = u0 + 2 * h;
          s += basis.eval(a, u0) * basis.eval(b, u0) +
               4.0 * basis.eval(a, u1) * basis.eval(b, u1) +
               basis.eval(a, u2) * basis.eval(b, u2);
        }
        s *= h / 3.0;
        CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("projection identities") {
  Eigenbasis dn(Eigenbasis::Kind::DN, 12);
  const auto c = project(Profile::parse("const(1)"), dn);
  for (int k = 0; k < dn.K; ++k) {
    const double expect = std::sqrt(2.0) / (kPi * (k + 0.5));
    CHECK(c[static_cast<std::size_t>(k)] == doctest::Approx(expect).epsilon(1e-9));
    CHECK(c[static_cast<std::size_t>(k)] == doctest::Approx(2.0 / dn.dpsi0(k)).epsilon(1e-9));
  }

  // a pure mode projects to a unit vector; Psi_3 is not a grammar form, so
  // check with the NN constant instead plus orthogonality of DN modes
  Eigenbasis nn(Eigenbasis::Kind::NN, 6);
  const auto cn = project(Profile::parse("const(1)"), nn);
  CHECK(cn[0] == doctest::Approx(1.0).epsilon(1e-10));
  for (int k = 1; k < nn.K; ++k)
    CHECK(std::abs(cn[static_cast<std::size_t>(k)]) <= 1e-9);

  // gamma = 1 + 0.5 cos(2 pi u): <gamma, Phi_2> = 0.5 * sqrt(2)/2
  const auto c2 = project(Profile::parse("sum(const(1),cos(0,0.5,2))"), nn);
  CHECK(c2[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c2[2] == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(std::abs(c2[1]) <= 1e-9);
}

TEST_CASE("energy functional") {
  Eigenbasis dn(Eigenbasis::Kind::DN, 16);
  std::vector<double> zero(513, 0.0);
  CHECK(energy_functional(zero, dn) == 0.0);

  // xi = Psi_0: energy 1/(2 lambda_0) = 2/pi^2
  std::vector<double> psi0(513);
  for (int j = 0; j < 513; ++j) psi0[static_cast<std::size_t>(j)] = dn.eval(0, j / 512.0);
  CHECK(energy_functional(psi0, dn) == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-8));

  // quadrature route vs coefficient route for a smooth profile
  Profile xi = Profile::parse("cos(0.3,0.2,2)");
  std::vector<double> grid(2049);
  for (int j = 0; j < 2049; ++j) grid[static_cast<std::size_t>(j)] = xi(j / 2048.0);
  const double via_grid = energy_functional(grid, dn);
  const double via_coeff = energy_from_coefficients(project(xi, dn), dn);
  CHECK(via_grid == doctest::Approx(via_coeff).epsilon(1e-8));

  CHECK_THROWS_AS(energy_functional(std::vector<double>(10, 0.0), dn), InputError);
}

TEST_CASE("fd: constants are stationary for Neumann") {
  PdeSolution sol = solve_fd(make_problem(Bc::Neumann, "const(0.7)"), 64, 1e-4);
  std::vector<double> ref(static_cast<std::size_t>(sol.nu()), 0.7);
  CHECK(max_abs_row_diff(sol, sol.nt() - 1, ref) <= 1e-12);
}

TEST_CASE("fd: Neumann cosine eigenmode decays exactly") {
  PdeProblem prob = make_problem(Bc::Neumann, "sum(const(1),cos(0,1,1))", 1.0, 0.1);
  // gamma = 1 + cos(pi u); the cosine mode decays like exp(-pi^2 t)
  PdeSolution sol = solve_fd(prob, 256, 1e-5);
  const int ti = sol.time_index(0.1);
  double worst = 0.0;
  for (int j = 0; j < sol.nu(); ++j) {
    const double u = sol.u_grid[static_cast<std::size_t>(j)];
    const double exact = 1.0 + std::exp(-kPi * kPi * 0.1) * std::cos(kPi * u);
    worst = std::max(worst, std::abs(sol.value(ti, j) - exact));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("fd: stationary fixed points of the coupled boundaries") {
  // Wentzell/nonlocal: gamma = c with M = c/alpha + c stays put
  {
    PdeProblem prob = make_problem(Bc::Wentzell, "const(0.5)", 2.0, 0.2);
    PdeSolution sol = solve_fd(prob, 64, 1e-4);
    std::vector<double> ref(static_cast<std::size_t>(sol.nu()), 0.5);
    CHECK(max_abs_row_diff(sol, sol.nt() - 1, ref) <= 1e-10);
  }
  {
    PdeProblem prob = make_problem(Bc::NonlocalDirichlet, "const(0.5)", 2.0, 0.2);
    PdeSolution sol = solve_fd(prob, 64, 1e-4);
    std::vector<double> ref(static_cast<std::size_t>(sol.nu()), 0.5);
    CHECK(max_abs_row_diff(sol, sol.nt() - 1, ref) <= 1e-8);
  }
  // Dirichlet with constant data
  {
    PdeProblem prob = make_problem(Bc::DirichletFixed, "const(0.4)", 1.0, 0.2);
    PdeSolution sol = solve_fd(prob, 64, 1e-4);
    std::vector<double> ref(static_cast<std::size_t>(sol.nu()), 0.4);
    CHECK(max_abs_row_diff(sol, sol.nt() - 1, ref) <= 1e-12);
  }
  // exclusion boundary: gamma = p with M = p/(alpha(1-p)) + p
  {
    PdeProblem prob = make_problem(Bc::SepNonlinear, "const(0.5)", 2.0, 0.2);
    prob.M = 0.5 / (2.0 * 0.5) + 0.5;
    PdeSolution sol = solve_fd(prob, 64, 1e-4);
    std::vector<double> ref(static_cast<std::size_t>(sol.nu()), 0.5);
    CHECK(max_abs_row_diff(sol, sol.nt() - 1, ref) <= 1e-8);
  }
}

TEST_CASE("fd: nonlocal boundary relaxes to alpha M / (1 + alpha)") {
  PdeProblem prob = make_problem(Bc::NonlocalDirichlet, "cos(0.5,0.25,1)", 1.0, 3.0);
  prob.record_dt = 0.05;
  PdeSolution sol = solve_fd(prob, 128, 5e-5);
  const double target = prob.alpha * sol.M / (1.0 + prob.alpha);
  const int ti = sol.time_index(3.0);
  std::vector<double> ref(static_cast<std::size_t>(sol.nu()), target);
  CHECK(max_abs_row_diff(sol, ti, ref) <= 1e-4);
}

TEST_CASE("fd guards") {
  CHECK_THROWS_AS(solve_fd(make_problem(Bc::Neumann, "const(1)"), 8, 1e-4), InputError);
  PdeProblem bad = make_problem(Bc::SepNonlinear, "const(0.5)");
  bad.M = 0.1;  // below the bulk mass
  CHECK_THROWS_AS(solve_fd(bad, 64, 1e-4), InputError);
}

TEST_CASE("spectral: pure decay and the Dirichlet closed form") {
  // homogeneous Dirichlet with a single-mode start: only c_0 decays
  Eigenbasis dn(Eigenbasis::Kind::DN, 16);
  {
    PdeProblem prob = make_problem(Bc::HomDirichlet, "clamp01(sum(const(0),affine(0,1)))");
    // use a generic profile; closed form checked per mode below
    PdeSolution sol = solve_spectral(prob, 16, 1e-3, 64);
    const auto c0 = project(prob.gamma, dn);
    const int ti = sol.time_index(0.25);
    for (int k = 0; k < 16; ++k) {
      const double expect =
          c0[static_cast<std::size_t>(k)] * std::exp(-dn.eigenvalue(k) * 0.25);
      CHECK(sol.coeffs[static_cast<std::size_t>(ti) * 16 + static_cast<std::size_t>(k)] ==
            doctest::Approx(expect).epsilon(1e-10));
    }
  }

  // fixed Dirichlet closed form: exponential relaxation toward gamma(0)/lambda
  {
    PdeProblem prob = make_problem(Bc::DirichletFixed, "cos(0.5,0.2,1)", 1.0, 6.0);
    prob.record_dt = 0.5;
    PdeSolution sol = solve_spectral(prob, 64, 1e-3, 128);
    const auto c0 = project(prob.gamma, dn);
    const double g0 = prob.gamma(0.0);
    const int ti = sol.time_index(0.5);
    Eigenbasis dn64(Eigenbasis::Kind::DN, 64);
    for (int k = 0; k < 16; ++k) {
      const double lam = dn64.eigenvalue(k);
      const double decay = std::exp(-lam * 0.5);
      const double expect = c0[static_cast<std::size_t>(k)] * decay +
                            g0 * dn64.dpsi0(k) * (1.0 - decay) / lam;
      CHECK(sol.coeffs[static_cast<std::size_t>(ti) * 64 + static_cast<std::size_t>(k)] ==
            doctest::Approx(expect).epsilon(1e-9));
    }
    // long-time limit is gamma(0): exact in L2 up to the truncation tail,
    // pointwise away from the Gibbs layer at the pinned boundary
    const int tend = sol.time_index(6.0);
    double l2 = 0.0;
    const double h = sol.u_grid[1] - sol.u_grid[0];
    for (int j = 0; j < sol.nu(); ++j) {
      const double d = sol.value(tend, j) - g0;
      l2 += d * d * (j == 0 || j == sol.nu() - 1 ? 0.5 : 1.0) * h;
    }
    CHECK(std::sqrt(l2) < 3.0 * g0 / std::sqrt(64.0));
    CHECK(sol.value_traced(tend, 0) == doctest::Approx(g0).epsilon(1e-9));
    CHECK(eval_solution(sol, tend, 0.5) == doctest::Approx(g0).epsilon(0.03));
  }

  // nonlocal with the matched constant: the mode system's fixed point sits
  // within the truncation tail of the exact one
  {
    PdeProblem prob = make_problem(Bc::NonlocalDirichlet, "const(0.5)", 2.0, 0.5);
    PdeSolution sol = solve_spectral(prob, 96, 1e-3, 128);
    const auto cref = project(prob.gamma, Eigenbasis(Eigenbasis::Kind::DN, 96));
    const int ti = sol.time_index(0.5);
    for (int k = 0; k < 96; ++k)
      CHECK(sol.coeffs[static_cast<std::size_t>(ti) * 96 + static_cast<std::size_t>(k)] ==
            doctest::Approx(cref[static_cast<std::size_t>(k)]).epsilon(3e-3));
  }
}

TEST_CASE("spectral: Neumann basis keeps constants exactly") {
  PdeProblem prob = make_problem(Bc::Neumann, "const(0.3)", 1.0, 0.5);
  PdeSolution sol = solve_spectral(prob, 16, 1e-3, 64);
  const int ti = sol.time_index(0.5);
  for (int j = 0; j < sol.nu(); ++j)
    CHECK(sol.value(ti, j) == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("reservoir mass and conserved quantity") {
  PdeProblem prob = make_problem(Bc::Wentzell, "cos(0.5,0.25,1)", 1.0, 0.5);
  PdeSolution fd = solve_fd(prob, 256, 2e-5);
  const double M = fd.M;
  CHECK(M == doctest::Approx(1.25).epsilon(1e-9));
  for (double t : {0.1, 0.3, 0.5})
    CHECK(std::abs(wentzell_conserved(fd, t) - M) < 1e-4);

  // stationary constant: m(t) constant in time
  PdeProblem flat = make_problem(Bc::NonlocalDirichlet, "const(0.5)", 2.0, 0.3);
  PdeSolution sol = solve_fd(flat, 64, 1e-4);
  const double m0 = reservoir_mass(sol, 0.0);
  CHECK(m0 == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(reservoir_mass(sol, 0.3) == doctest::Approx(m0).epsilon(1e-6));

  // exclusion boundary identity along a spectral solution
  PdeProblem sep = make_problem(Bc::SepNonlinear, "cos(0.5,-0.2,1)", 1.0, 0.3);
  sep.M = 0.9;
  PdeSolution ss = solve_spectral(sep, 64, 1.25e-5, 512);
  for (double t : {0.05, 0.15, 0.3}) {
    const double m = reservoir_mass(ss, t);
    const double rho0 = ss.boundary_trace[static_cast<std::size_t>(ss.time_index(t))];
    CHECK(std::abs(rho0 / (1.0 - rho0) - sep.alpha * m) < 1e-6);
  }

  PdeSolution neumann = solve_fd(make_problem(Bc::Neumann, "const(0.5)"), 64, 1e-4);
  CHECK_THROWS_AS(reservoir_mass(neumann, 0.1), InputError);
}

TEST_CASE("solutions satisfy the right-boundary Neumann condition") {
  for (Bc bc : {Bc::Neumann, Bc::Wentzell, Bc::NonlocalDirichlet, Bc::DirichletFixed,
                Bc::HomDirichlet}) {
    PdeProblem prob = make_problem(bc, "cos(0.5,0.25,2)", 1.0, 0.2);
    PdeSolution sol = solve_fd(prob, 512, 2e-5);
    const int ti = sol.time_index(0.2);
    const double h = 1.0 / 512;
    const double flux = std::abs(sol.value(ti, 512) - sol.value(ti, 511)) / h;
    CHECK(flux < 1e-2);
  }
}

TEST_CASE("exclusion solutions stay in [0,1]") {
  PdeProblem prob = make_problem(Bc::SepNonlinear, "clamp01(cos(0.5,0.5,1))", 1.0, 0.3);
  prob.M = 1.0;

  PdeSolution fd = solve_fd(prob, 256, 2e-5);
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < fd.nt(); ++i)
    for (int j = 0; j < fd.nu(); ++j) {
      lo = std::min(lo, fd.value(i, j));
      hi = std::max(hi, fd.value(i, j));
    }
  CHECK(lo >= -1e-8);
  CHECK(hi <= 1.0 + 1e-8);

  // spectral reconstruction: range holds outside the truncation layer at the
  // left edge; the boundary trace itself is a proper density
  PdeSolution sp = solve_spectral(prob, 64, 1.25e-5, 256);
  for (int i = 1; i < sp.nt(); ++i) {
    CHECK(sp.boundary_trace[static_cast<std::size_t>(i)] >= -1e-8);
    CHECK(sp.boundary_trace[static_cast<std::size_t>(i)] <= 1.0 + 1e-8);
    for (int j = 0; j < sp.nu(); ++j) {
      if (sp.u_grid[static_cast<std::size_t>(j)] < 0.05) continue;
      CHECK(sp.value(i, j) >= -1e-2);
      CHECK(sp.value(i, j) <= 1.0 + 1e-2);
    }
  }
}

TEST_CASE("two-backend agreement on a smooth Wentzell problem") {
  PdeProblem prob = make_problem(Bc::Wentzell, "cos(0.5,0.25,1)", 1.0, 0.25);
  PdeSolution fd = solve_fd(prob, 256, 2e-5);
  PdeProblem nl = prob;
  nl.bc = Bc::NonlocalDirichlet;
  PdeSolution sp = solve_spectral(nl, 96, 1e-3, 512);
  StatReport rep = equivalence_report(fd, sp, 2e-3);
  CHECK(rep.pass());
}

TEST_CASE("energy of solution differences decays") {
  // nonlocal: two profiles with the same total mass M
  PdeProblem a = make_problem(Bc::NonlocalDirichlet, "const(0.5)", 1.0, 0.5);
  PdeProblem b = make_problem(Bc::NonlocalDirichlet,
                              "sum(cos(0.5,0.2,2),cos(0,-0.2,4))", 1.0, 0.5);
  a.M = 1.0;
  b.M = 1.0;
  PdeSolution sa = solve_spectral(a, 64, 1e-3, 128);
  PdeSolution sb = solve_spectral(b, 64, 1e-3, 128);
  Eigenbasis dn(Eigenbasis::Kind::DN, 64);
  double prev = -1.0;
  for (int i = 0; i < sa.nt(); ++i) {
    std::vector<double> diff(64);
    for (int k = 0; k < 64; ++k)
      diff[static_cast<std::size_t>(k)] =
          sa.coeffs[static_cast<std::size_t>(i) * 64 + static_cast<std::size_t>(k)] -
          sb.coeffs[static_cast<std::size_t>(i) * 64 + static_cast<std::size_t>(k)];
    const double e = energy_from_coefficients(diff, dn);
    if (prev >= 0.0) CHECK(e <= prev + 1e-10);
    prev = e;
  }
}
