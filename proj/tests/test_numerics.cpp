#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "qumetrics/error.hpp"
#include "qumetrics/numerics.hpp"

using namespace qumetrics;

TEST_CASE("gauss_legendre rule") {
  for (int n : {1, 2, 5, 16, 64}) {
    const QuadratureRule r = gauss_legendre(n);
    CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      CHECK(r.nodes[i] == doctest::Approx(-r.nodes[r.nodes.size() - 1 - i]));
    }
    // exact for x^(2n-2) (even power): integral over [-1, 1] is 2 / (2n - 1)
    const int deg = 2 * n - 2;
    double sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], deg);
    CHECK(sum == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(0), InvalidArgument);
}

TEST_CASE("64-point integration matches adaptive Simpson on smooth integrands") {
  const auto f = [](double t) { return std::pow(0.01, t) + std::exp(-3.0 * t) * std::cos(5.0 * t); };
  CHECK(std::abs(integrate_gauss_legendre(f, 0.0, 1.0, 64) - oracle::simpson(f, 0.0, 1.0, 1e-14)) < 1e-12);
}

TEST_CASE("bisect") {
  const auto f = [](double x) { return x * x - 2.0; };
  const BisectionResult r = bisect(f, 0.0, 2.0, 1e-14);
  CHECK(r.converged);
  CHECK(r.root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  const BisectionResult capped = bisect(f, 0.0, 2.0, 0.0, 10);
  CHECK_FALSE(capped.converged);
  CHECK(capped.iterations == 10);

  CHECK_THROWS_AS(bisect(f, 2.0, 3.0, 1e-10), InvalidArgument);
  CHECK(bisect(f, std::sqrt(2.0), 3.0, 1e-12).iterations == 0);
}
