#ifndef RHYDRO_QUADRATURE_HPP
#define RHYDRO_QUADRATURE_HPP

#include <cmath>
#include <functional>

#include "rhydro/errors.hpp"

namespace rhydro {

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw NumericError("adaptive quadrature: max depth reached");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with absolute tolerance.
template <class F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-10,
                 int max_depth = 48) {
  if (a == b) return 0.0;
  // seed the recursion on a few panels so oscillatory integrands are not
  // mistaken for converged on the first split
  const int panels = 8;
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h;
    const double x1 = x0 + h;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = f(x0), fm = f(xm), f1 = f(x1);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    sum += detail::adaptive_simpson_rec(f, x0, x1, f0, fm, f1, whole,
                                        abs_tol / panels, max_depth);
  }
  return sum;
}

}  // namespace rhydro

#endif
