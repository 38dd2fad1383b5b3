#include "qumetrics/observables.hpp"

#include <cmath>
#include <sstream>

#include "qumetrics/error.hpp"

namespace qumetrics {

namespace {

Observable from_entries(std::initializer_list<Complex> row_major) {
  ComplexMatrix m(2, 2);
  auto it = row_major.begin();
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index k = 0; k < 2; ++k) m(i, k) = *it++;
  return Observable(HermitianMatrix::from_upper(m));
}

}  // namespace

Observable pauli_x() { return from_entries({0.0, 1.0, 1.0, 0.0}); }
Observable pauli_y() { return from_entries({0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
Observable pauli_z() { return from_entries({1.0, 0.0, 0.0, -1.0}); }

RealMatrix ObservableBasis::gram() const {
  const auto count = static_cast<Eigen::Index>(elements_.size());
  RealMatrix g(count, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    for (Eigen::Index k = j; k < count; ++k) {
      const double v = trace_product(elements_[static_cast<std::size_t>(j)].matrix(),
                                     elements_[static_cast<std::size_t>(k)].matrix())
                           .real();
      g(j, k) = v;
      g(k, j) = v;
    }
  }
  return g;
}

ObservableBasis ObservableBasis::create(std::vector<Observable> elements, double tol) {
  if (elements.empty()) throw InvalidArgument("ObservableBasis: no elements");
  const Eigen::Index n = elements.front().dim();
  if (static_cast<Eigen::Index>(elements.size()) != n * n) {
    std::ostringstream os;
    os << "ObservableBasis: " << elements.size() << " elements for dimension " << n
       << " (expected " << n * n << ")";
    throw InvalidArgument(os.str());
  }
  for (const auto& e : elements) {
    if (e.dim() != n) throw DimensionMismatch("ObservableBasis: elements differ in dimension");
  }
  ObservableBasis basis(n, std::move(elements));
  const RealMatrix g = basis.gram();
  const double residual = (g - RealMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  if (residual > tol) {
    std::ostringstream os;
    os << "ObservableBasis: Gram matrix deviates from identity by " << residual;
    throw InvalidArgument(os.str());
  }
  return basis;
}

ObservableBasis standard_basis(Eigen::Index n) {
  if (n < 1) throw InvalidArgument("standard_basis: dimension must be positive");
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  std::vector<Observable> out;
  out.reserve(static_cast<std::size_t>(n * n));

  for (Eigen::Index i = 0; i < n; ++i) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    m(i, i) = 1.0;
    out.emplace_back(HermitianMatrix::from_upper(m));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(i, k) = s;
      m(k, i) = s;
      out.emplace_back(HermitianMatrix::from_upper(m));
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(i, k) = -i_unit * s;
      m(k, i) = i_unit * s;
      out.emplace_back(HermitianMatrix::from_upper(m));
    }
  }
  return ObservableBasis::create(std::move(out), 1e-12);
}

ObservableBasis rotate_basis(const ObservableBasis& basis, const RealMatrix& rotation) {
  const auto count = static_cast<Eigen::Index>(basis.size());
  if (rotation.rows() != count || rotation.cols() != count) {
    throw DimensionMismatch("rotate_basis: rotation must be n^2 x n^2");
  }
  const double residual =
      (rotation.transpose() * rotation - RealMatrix::Identity(count, count)).cwiseAbs().maxCoeff();
  if (residual > 1e-10) {
    std::ostringstream os;
    os << "rotate_basis: matrix is not orthogonal (residual " << residual << ")";
    throw InvalidArgument(os.str());
  }
  const Eigen::Index n = basis.dim();
  std::vector<Observable> out;
  out.reserve(basis.size());
  for (Eigen::Index j = 0; j < count; ++j) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < count; ++k) {
      if (rotation(j, k) != 0.0) m += rotation(j, k) * basis[static_cast<std::size_t>(k)].matrix();
    }
    out.emplace_back(HermitianMatrix::from_upper(m));
  }
  return ObservableBasis::create(std::move(out), 1e-10);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("commutator: operands must be square of equal dimension");
  }
  return a * b - b * a;
}

bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, std::optional<double> tol) {
  const double bound = tol.value_or(1e-10 * std::max(1.0, max_abs(a) * max_abs(b)));
  return max_abs(commutator(a, b)) <= bound;
}

}  // namespace qumetrics
