#include "qumetrics/numerics.hpp"

#include <cmath>
#include <numbers>

#include "qumetrics/error.hpp"

namespace qumetrics {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // three-term recurrence for P_n(z) and P_{n-1}(z)
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const auto lo = static_cast<std::size_t>(i - 1);
    const auto hi = static_cast<std::size_t>(n - i);
    rule.nodes[lo] = -z;
    rule.nodes[hi] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int n) {
  const QuadratureRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    sum += rule.weights[j] * f(mid + half * rule.nodes[j]);
  }
  return half * sum;
}

BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
                       int max_iterations) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (std::abs(f_lo) <= tol) return {lo, f_lo, 0, true};
  if (std::abs(f_hi) <= tol) return {hi, f_hi, 0, true};
  if ((f_lo < 0.0) == (f_hi < 0.0)) throw InvalidArgument("bisect: interval does not bracket a root");

  BisectionResult result;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    result = {mid, f_mid, iter, std::abs(f_mid) <= tol};
    if (result.converged) return result;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return result;
}

}  // namespace qumetrics
