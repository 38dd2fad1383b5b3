#pragma once

#include <functional>
#include <vector>

namespace qumetrics {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Roots of P_n are refined by Newton's method
/// from the Chebyshev-like initial guesses cos(pi (i - 1/4) / (n + 1/2)).
QuadratureRule gauss_legendre(int n);

/// Integral of f over [a, b] with the n-point Gauss-Legendre rule.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int n = 64);

struct BisectionResult {
  double root = 0.0;
  double value = 0.0;  // f(root)
  int iterations = 0;
  bool converged = false;
};

/// Bisection on [lo, hi] where f(lo) and f(hi) bracket a sign change. Stops as soon as
/// |f(mid)| <= tol or after max_iterations halvings.
BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
                       int max_iterations = 200);

}  // namespace qumetrics
