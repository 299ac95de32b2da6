#include "rhydro/linalg.hpp"

#include <algorithm>

namespace rhydro {

Mat matmul(const Mat& A, const Mat& B) {
  if (A.m != B.n) throw InputError("matmul: shape mismatch");
  Mat C(A.n, B.m);
  for (int i = 0; i < A.n; ++i) {
    for (int k = 0; k < A.m; ++k) {
      const double aik = A(i, k);
      if (aik == 0.0) continue;
      const double* brow = &B.a[static_cast<std::size_t>(k) * B.m];
      double* crow = &C.a[static_cast<std::size_t>(i) * C.m];
      for (int j = 0; j < B.m; ++j) crow[j] += aik * brow[j];
    }
  }
  return C;
}

std::vector<double> matvec(const Mat& A, const std::vector<double>& x) {
  if (A.m != static_cast<int>(x.size())) throw InputError("matvec: shape mismatch");
  std::vector<double> y(static_cast<std::size_t>(A.n), 0.0);
  for (int i = 0; i < A.n; ++i) {
    double s = 0.0;
    const double* row = &A.a[static_cast<std::size_t>(i) * A.m];
    for (int j = 0; j < A.m; ++j) s += row[j] * x[j];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

Mat matexp(const Mat& A) {
  if (A.n != A.m) throw InputError("matexp: matrix must be square");
  double norm = 0.0;  // max row sum
  for (int i = 0; i < A.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < A.m; ++j) s += std::abs(A(i, j));
    norm = std::max(norm, s);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }

  Mat X(A.n, A.n);
  for (std::size_t idx = 0; idx < A.a.size(); ++idx) X.a[idx] = A.a[idx] * scale;

  // Taylor series; with ||X|| <= 1/2 about 20 terms reach machine precision
  Mat result = Mat::identity(A.n);
  Mat term = Mat::identity(A.n);
  for (int k = 1; k <= 24; ++k) {
    term = matmul(term, X);
    const double inv = 1.0 / k;
    for (double& v : term.a) v *= inv;
    double tnorm = 0.0;
    for (double v : term.a) tnorm = std::max(tnorm, std::abs(v));
    for (std::size_t idx = 0; idx < result.a.size(); ++idx) result.a[idx] += term.a[idx];
    if (tnorm < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);
  return result;
}

BandedLU::BandedLU(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku),
      band_(static_cast<std::size_t>(n) * (kl + ku + 1), 0.0) {}

double& BandedLU::at(int i, int j) {
  const int d = j - i + kl_;
  if (i < 0 || i >= n_ || d < 0 || d > kl_ + ku_)
    throw InputError("BandedLU: entry outside band");
  return band_[static_cast<std::size_t>(i) * (kl_ + ku_ + 1) + d];
}

void BandedLU::factor() {
  // in-place LU, no pivoting
  const int w = kl_ + ku_ + 1;
  for (int k = 0; k < n_ - 1; ++k) {
    const double piv = band_[static_cast<std::size_t>(k) * w + kl_];
    if (piv == 0.0) throw NumericError("BandedLU: zero pivot");
    for (int i = k + 1; i <= std::min(k + kl_, n_ - 1); ++i) {
      const int di = k - i + kl_;
      double& lik = band_[static_cast<std::size_t>(i) * w + di];
      lik /= piv;
      const double l = lik;
      for (int j = k + 1; j <= std::min(k + ku_, n_ - 1); ++j) {
        const int dkj = j - k + kl_;
        const int dij = j - i + kl_;
        band_[static_cast<std::size_t>(i) * w + dij] -=
            l * band_[static_cast<std::size_t>(k) * w + dkj];
      }
    }
  }
  factored_ = true;
}

void BandedLU::solve(std::vector<double>& rhs) const {
  if (!factored_) throw InputError("BandedLU: factor() not called");
  const int w = kl_ + ku_ + 1;
  // forward
  for (int i = 0; i < n_; ++i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int j = std::max(0, i - kl_); j < i; ++j)
      s -= band_[static_cast<std::size_t>(i) * w + (j - i + kl_)] * rhs[static_cast<std::size_t>(j)];
    rhs[static_cast<std::size_t>(i)] = s;
  }
  // back substitution
  for (int i = n_ - 1; i >= 0; --i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= std::min(n_ - 1, i + ku_); ++j)
      s -= band_[static_cast<std::size_t>(i) * w + (j - i + kl_)] * rhs[static_cast<std::size_t>(j)];
    rhs[static_cast<std::size_t>(i)] = s / band_[static_cast<std::size_t>(i) * w + kl_];
  }
}

}  // namespace rhydro
