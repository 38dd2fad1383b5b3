#include "qumetrics/random.hpp"

#include <cmath>

#include "qumetrics/error.hpp"

namespace qumetrics {

namespace {

void require_positive(Eigen::Index n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + ": dimension must be positive");
}

}  // namespace

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, k) = Complex(re, im);
    }
  }
  return g;
}

DensityMatrix random_density_of_rank(Eigen::Index n, Eigen::Index rank, Rng& rng) {
  require_positive(n, "random_density_of_rank");
  if (rank < 1 || rank > n) throw InvalidArgument("random_density_of_rank: rank must be in [1, n]");
  const ComplexMatrix g = ginibre(n, rank, rng);
  const ComplexMatrix w = g * g.adjoint();
  return validate(HermitianMatrix::from_upper(w / w.trace().real()));
}

DensityMatrix random_ginibre_density(Eigen::Index n, Rng& rng) {
  return random_density_of_rank(n, n, rng);
}

DensityMatrix random_ginibre_density(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_ginibre_density(n, rng);
}

UnitaryMatrix random_unitary(Eigen::Index n, Rng& rng) {
  require_positive(n, "random_unitary");
  const ComplexMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return UnitaryMatrix::from_matrix(std::move(q));
}

UnitaryMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

Observable random_observable(Eigen::Index n, Rng& rng) {
  require_positive(n, "random_observable");
  const ComplexMatrix a = ginibre(n, n, rng);
  return Observable(HermitianMatrix::from_upper(0.5 * (a + a.adjoint())));
}

Observable random_observable(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_observable(n, rng);
}

ComplexVector random_state_vector(Eigen::Index n, Rng& rng) {
  require_positive(n, "random_state_vector");
  ComplexVector v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

RealMatrix random_orthogonal(Eigen::Index n, Rng& rng) {
  require_positive(n, "random_orthogonal");
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) g(i, k) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (qr.matrixQR()(k, k) < 0.0) q.col(k) *= -1.0;
  }
  return q;
}

}  // namespace qumetrics
