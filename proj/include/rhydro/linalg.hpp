#ifndef RHYDRO_LINALG_HPP
#define RHYDRO_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "rhydro/errors.hpp"

namespace rhydro {

// Dense row-major matrix. All sizes in this project are small (mode systems,
// walk laws up to a few thousand states), so nothing fancy is needed.
struct Mat {
  int n = 0, m = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int rows, int cols) : n(rows), m(cols), a(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static Mat identity(int k) {
    Mat I(k, k);
    for (int i = 0; i < k; ++i) I(i, i) = 1.0;
    return I;
  }

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }
};

Mat matmul(const Mat& A, const Mat& B);
std::vector<double> matvec(const Mat& A, const std::vector<double>& x);

// exp(A) by scaling-and-squaring with a machine-precision Taylor kernel.
Mat matexp(const Mat& A);

// Solves the banded system (kl sub-, ku super-diagonals) in place by LU
// without pivoting; fine for the diagonally dominant systems used here.
// Band storage: band(i, d) holds A(i, i+d-kl) for d = 0..kl+ku.
class BandedLU {
 public:
  BandedLU(int n, int kl, int ku);

  double& at(int i, int j);
  void factor();
  void solve(std::vector<double>& rhs) const;

 private:
  int n_, kl_, ku_;
  bool factored_ = false;
  std::vector<double> band_;
};

}  // namespace rhydro

#endif
