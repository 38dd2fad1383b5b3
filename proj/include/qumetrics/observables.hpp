#pragma once

#include <optional>
#include <vector>

#include "qumetrics/matrix.hpp"

namespace qumetrics {

/// A Hermitian operator with no trace or positivity constraint.
class Observable {
 public:
  Observable() = default;
  explicit Observable(HermitianMatrix m) : m_(std::move(m)) {}

  Eigen::Index dim() const noexcept { return m_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return m_; }
  const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }
  Complex operator()(Eigen::Index i, Eigen::Index k) const { return m_(i, k); }

 private:
  HermitianMatrix m_;
};

Observable pauli_x();
Observable pauli_y();
Observable pauli_z();

/// n^2 observables orthonormal under <X, Y> = Tr(XY).
class ObservableBasis {
 public:
  /// Throws InvalidArgument unless there are exactly dim^2 elements of matching dimension
  /// whose Gram matrix is the identity within `tol`.
  static ObservableBasis create(std::vector<Observable> elements, double tol = 1e-10);

  Eigen::Index dim() const noexcept { return dim_; }
  const std::vector<Observable>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Observable& operator[](std::size_t j) const { return elements_[j]; }

  /// G_jk = Tr(H_j H_k).
  RealMatrix gram() const;

 private:
  ObservableBasis(Eigen::Index dim, std::vector<Observable> elements)
      : dim_(dim), elements_(std::move(elements)) {}

  Eigen::Index dim_ = 0;
  std::vector<Observable> elements_;
};

/// Diagonal projectors |i><i| first, then (|i><k| + |k><i|)/sqrt2 for i < k in
/// lexicographic order, then (-i|i><k| + i|k><i|)/sqrt2 in the same order.
ObservableBasis standard_basis(Eigen::Index n);

/// H'_j = sum_k O_jk H_k for a real orthogonal n^2 x n^2 matrix O.
ObservableBasis rotate_basis(const ObservableBasis& basis, const RealMatrix& rotation);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||AB - BA||_max <= tol; the default tolerance is 1e-10 * max(1, ||A||_max ||B||_max).
bool commutes(const ComplexMatrix& a, const ComplexMatrix& b,
              std::optional<double> tol = std::nullopt);

}  // namespace qumetrics
