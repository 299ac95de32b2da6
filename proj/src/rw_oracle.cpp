#include "rhydro/rw_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace rhydro {

namespace {

void require_rw(const ModelParams& p, const char* what) {
  if (p.model != ModelKind::RW)
    throw InputError(std::string(what) + " is defined for the RW model");
}

// Uniformized kernel I + Q/Lambda stored by diagonals.
struct UnifKernel {
  int N;
  double lambda;
  std::vector<double> lower, diag, upper;

  explicit UnifKernel(const WalkGenerator& Q) : N(Q.N) {
    lambda = 0.0;
    for (int i = 0; i <= N; ++i) lambda = std::max(lambda, -Q.diag[static_cast<std::size_t>(i)]);
    if (lambda <= 0.0) lambda = 1.0;
    lower.resize(static_cast<std::size_t>(N) + 1, 0.0);
    diag.resize(static_cast<std::size_t>(N) + 1, 0.0);
    upper.resize(static_cast<std::size_t>(N) + 1, 0.0);
    for (int i = 0; i <= N; ++i) {
      const auto s = static_cast<std::size_t>(i);
      lower[s] = Q.lower[s] / lambda;
      upper[s] = Q.upper[s] / lambda;
      diag[s] = 1.0 + Q.diag[s] / lambda;
    }
  }

  // y = x * K (row vector times kernel), i.e. y[j] = sum_i x[i] K(i,j)
  void apply_left(const double* x, double* y) const {
    for (int j = 0; j <= N; ++j) {
      const auto s = static_cast<std::size_t>(j);
      double v = x[s] * diag[s];
      if (j > 0) v += x[s - 1] * upper[s - 1];
      if (j < N) v += x[s + 1] * lower[s + 1];
      y[s] = v;
    }
  }

  // y = K x (kernel applied to a function)
  void apply_right(const std::vector<double>& x, std::vector<double>& y) const {
    for (int i = 0; i <= N; ++i) {
      const auto s = static_cast<std::size_t>(i);
      double v = diag[s] * x[s];
      if (i > 0) v += lower[s] * x[s - 1];
      if (i < N) v += upper[s] * x[s + 1];
      y[s] = v;
    }
  }
};

// Poisson(mu) weights visited in order; log-space so large mu is safe.
struct PoissonWeights {
  double mu;
  explicit PoissonWeights(double m) : mu(m) {}
  double operator()(int n) const {
    if (mu == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(-mu + n * std::log(mu) - std::lgamma(n + 1.0));
  }
  int cutoff() const {
    return static_cast<int>(std::ceil(mu + 12.0 * std::sqrt(mu + 1.0) + 40.0));
  }
};

}  // namespace

Mat WalkGenerator::dense() const {
  Mat Q(N + 1, N + 1);
  for (int i = 0; i <= N; ++i) {
    const auto s = static_cast<std::size_t>(i);
    Q(i, i) = diag[s];
    if (i > 0) Q(i, i - 1) = lower[s];
    if (i < N) Q(i, i + 1) = upper[s];
  }
  return Q;
}

WalkGenerator walk_generator(const ModelParams& p) {
  require_rw(p, "walk_generator");
  p.validate();
  WalkGenerator Q;
  Q.N = p.N;
  const auto n = static_cast<std::size_t>(p.N);
  Q.lower.assign(n + 1, 0.0);
  Q.diag.assign(n + 1, 0.0);
  Q.upper.assign(n + 1, 0.0);
  const double n2 = p.n2();
  Q.upper[0] = p.reservoir_unit_rate();
  Q.diag[0] = -Q.upper[0];
  for (int x = 1; x < p.N; ++x) {
    const auto s = static_cast<std::size_t>(x);
    Q.lower[s] = n2;
    Q.upper[s] = n2;
    Q.diag[s] = -2.0 * n2;
  }
  Q.lower[n] = n2;
  Q.diag[n] = -n2;
  return Q;
}

std::vector<double> stationary_pi(const ModelParams& p) {
  require_rw(p, "stationary_pi");
  p.validate();
  const double w0 = std::pow(static_cast<double>(p.N), p.theta) / p.alpha;
  const double z = w0 + p.N;
  std::vector<double> pi(static_cast<std::size_t>(p.N) + 1, 1.0 / z);
  pi[0] = w0 / z;
  return pi;
}

WalkLaw transition_matrix(const ModelParams& p, double t) {
  require_rw(p, "transition_matrix");
  if (t < 0.0) throw InputError("transition_matrix: t must be >= 0");
  if (p.N > 2048) throw ResourceError("transition_matrix: dense law limited to N <= 2048");

  const WalkGenerator Q = walk_generator(p);
  const UnifKernel K(Q);
  const int n = p.N + 1;

  WalkLaw law;
  law.t = t;
  law.P = Mat(n, n);

  const PoissonWeights w(K.lambda * t);
  const int cutoff = w.cutoff();

  Mat power = Mat::identity(n);
  Mat next(n, n);
  double cum = 0.0;
  for (int k = 0; k <= cutoff; ++k) {
    const double wk = w(k);
    if (wk > 1e-22) {
      for (std::size_t idx = 0; idx < power.a.size(); ++idx)
        law.P.a[idx] += wk * power.a[idx];
      cum += wk;
      if (cum >= 1.0 - 1e-12) break;
    }
    if (k == cutoff) break;
    // power <- power * K, exploiting the tridiagonal kernel
    for (int i = 0; i < n; ++i)
      K.apply_left(&power.a[static_cast<std::size_t>(i) * n],
                   &next.a[static_cast<std::size_t>(i) * n]);
    std::swap(power.a, next.a);
  }

  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += law.P(i, j);
    worst = std::max(worst, std::abs(s - 1.0));
  }
  if (worst > 1e-9)
    throw NumericError("transition_matrix: uniformization failed stochasticity check");
  return law;
}

std::vector<double> poisson_field(const Profile& profile, double t, const ModelParams& p) {
  require_rw(p, "poisson_field");
  if (t < 0.0) throw InputError("poisson_field: t must be >= 0");
  const WalkGenerator Q = walk_generator(p);
  const UnifKernel K(Q);
  const auto n = static_cast<std::size_t>(p.N) + 1;

  std::vector<double> g(n);
  for (int y = 0; y <= p.N; ++y)
    g[static_cast<std::size_t>(y)] = profile(static_cast<double>(y) / p.N);

  const PoissonWeights w(K.lambda * t);
  const int cutoff = w.cutoff();
  std::vector<double> acc(n, 0.0), cur = g, tmp(n);
  double cum = 0.0;
  for (int k = 0; k <= cutoff; ++k) {
    const double wk = w(k);
    if (wk > 1e-22) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += wk * cur[i];
      cum += wk;
      if (cum >= 1.0 - 1e-12) break;
    }
    if (k == cutoff) break;
    K.apply_right(cur, tmp);
    cur.swap(tmp);
  }
  acc[0] *= std::pow(static_cast<double>(p.N), p.theta) / p.alpha;
  return acc;
}

double joint_laplace(const Profile& profile, double t, const std::vector<double>& zeta,
                     const ModelParams& p) {
  require_rw(p, "joint_laplace");
  if (static_cast<int>(zeta.size()) != p.N + 1)
    throw InputError("joint_laplace: zeta must cover sites 0..N");
  for (double z : zeta)
    if (z < 0.0) throw InputError("joint_laplace: zeta must be nonnegative");
  const std::vector<double> psi = poisson_field(profile, t, p);
  double expo = 0.0;
  for (std::size_t x = 0; x < zeta.size(); ++x)
    expo += std::expm1(-zeta[x]) * psi[x];
  return std::exp(expo);
}

}  // namespace rhydro
