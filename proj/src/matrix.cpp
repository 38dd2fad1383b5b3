#include "qumetrics/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "qumetrics/error.hpp"

namespace qumetrics {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw DimensionMismatch(os.str());
  }
}

// Columns whose leading component is below this are skipped when fixing the phase.
constexpr double kPhaseThreshold = 1e-12;

void fix_column_phases(ComplexMatrix& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      const double mag = std::abs(v(r, c));
      if (mag > kPhaseThreshold) {
        v.col(c) *= std::conj(v(r, c)) / mag;
        v(r, c) = Complex(std::abs(v(r, c)), 0.0);
        break;
      }
    }
  }
}

}  // namespace

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

HermitianMatrix HermitianMatrix::from_upper(const ComplexMatrix& source) {
  require_square(source, "HermitianMatrix");
  const Eigen::Index n = source.rows();
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = Complex(source(i, i).real(), 0.0);
    for (Eigen::Index k = i + 1; k < n; ++k) {
      m(i, k) = source(i, k);
      m(k, i) = std::conj(source(i, k));
    }
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::from_matrix(const ComplexMatrix& source, double tol) {
  require_square(source, "HermitianMatrix");
  const double residual = max_abs(source - source.adjoint());
  const double bound = tol * std::max(1.0, max_abs(source));
  if (residual > bound) {
    std::ostringstream os;
    os << "max|A - A^dagger| = " << residual << " exceeds " << bound;
    throw ValidationError(Violation::kNotHermitian, residual, os.str());
  }
  return from_upper(source);
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
  if (n < 1) throw InvalidArgument("identity: dimension must be positive");
  return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  if (d.size() < 1) throw InvalidArgument("diagonal: dimension must be positive");
  return HermitianMatrix(d.cast<Complex>().asDiagonal());
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

EigenDecomposition eig_hermitian(const HermitianMatrix& a) {
  const Eigen::Index n = a.dim();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::ComputeEigenvectors);

  if (solver.info() != Eigen::Success) {
    // Eigen caps the implicit QL sweep at 30 iterations per eigenvalue.
    const ComplexMatrix& v = solver.eigenvectors();
    const double residual =
        max_abs(a.matrix() - v * solver.eigenvalues().cast<Complex>().asDiagonal() * v.adjoint());
    std::ostringstream os;
    os << "Hermitian eigensolver did not converge (n = " << n << ", residual " << residual << ")";
    throw SolverFailure(os.str(), residual);
  }

  // Eigen returns ascending order; the stable reverse keeps ties in solver order.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const RealVector& values = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index l, Eigen::Index r) { return values(l) > values(r); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    out.eigenvalues(c) = values(order[static_cast<std::size_t>(c)]);
    out.eigenvectors.col(c) = solver.eigenvectors().col(order[static_cast<std::size_t>(c)]);
  }
  fix_column_phases(out.eigenvectors);
  return out;
}

double psd_tolerance(double largest_eigenvalue) noexcept {
  return 1e-10 * std::max(1.0, largest_eigenvalue);
}

HermitianMatrix spectral_function(const EigenDecomposition& eig,
                                  const std::function<double(double)>& f) {
  RealVector mapped(eig.dim());
  for (Eigen::Index i = 0; i < eig.dim(); ++i) mapped(i) = f(eig.eigenvalues(i));
  return HermitianMatrix::from_upper(eig.eigenvectors * mapped.cast<Complex>().asDiagonal() *
                                     eig.eigenvectors.adjoint());
}

double spectral_power(double eigenvalue, double alpha) noexcept {
  return eigenvalue > 0.0 ? std::pow(eigenvalue, alpha) : 0.0;
}

HermitianMatrix matrix_power(const EigenDecomposition& eig, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("matrix_power: exponent must lie in [0, 1]");
  }
  const double largest = eig.eigenvalues.size() ? eig.eigenvalues.maxCoeff() : 0.0;
  const double tol = psd_tolerance(largest);
  for (Eigen::Index i = 0; i < eig.dim(); ++i) {
    const double lambda = eig.eigenvalues(i);
    if (lambda < -tol) {
      std::ostringstream os;
      os << "matrix_power: eigenvalue " << lambda << " is below -" << tol;
      throw NotPositiveSemidefinite(os.str(), lambda);
    }
  }
  return spectral_function(eig, [tol, alpha](double lambda) {
    return lambda <= tol ? 0.0 : std::pow(lambda, alpha);
  });
}

HermitianMatrix matrix_power(const HermitianMatrix& a, double alpha) {
  return matrix_power(eig_hermitian(a), alpha);
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionMismatch("trace_product: operands are not conformable");
  }
  // Tr(AB) = sum_ij A_ij B_ji
  return (a.array() * b.transpose().array()).sum();
}

Complex trace_quad(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b,
                   const ComplexMatrix& y) {
  if (a.cols() != x.rows() || x.cols() != b.rows() || b.cols() != y.rows() ||
      y.cols() != a.rows()) {
    throw DimensionMismatch("trace_quad: operands are not conformable");
  }
  const ComplexMatrix ax = a * x;
  const ComplexMatrix by = b * y;
  return trace_product(ax, by);
}

double real_part_checked(Complex z) {
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z))) {
    std::ostringstream os;
    os << "expected a real trace, imaginary part is " << z.imag();
    throw Error(os.str());
  }
  return z.real();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix::from_upper(tensor(a.matrix(), b.matrix()));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem traced_out, BipartiteDims dims) {
  require_square(rho, "partial_trace");
  if (dims.first < 1 || dims.second < 1 || dims.first * dims.second != rho.rows()) {
    std::ostringstream os;
    os << "partial_trace: dims (" << dims.first << ", " << dims.second
       << ") do not factor dimension " << rho.rows();
    throw DimensionMismatch(os.str());
  }
  const Eigen::Index m1 = dims.first;
  const Eigen::Index m2 = dims.second;
  if (traced_out == Subsystem::kSecond) {
    ComplexMatrix out = ComplexMatrix::Zero(m1, m1);
    for (Eigen::Index i = 0; i < m1; ++i)
      for (Eigen::Index k = 0; k < m1; ++k)
        for (Eigen::Index j = 0; j < m2; ++j) out(i, k) += rho(i * m2 + j, k * m2 + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(m2, m2);
  for (Eigen::Index i = 0; i < m2; ++i)
    for (Eigen::Index k = 0; k < m2; ++k)
      for (Eigen::Index j = 0; j < m1; ++j) out(i, k) += rho(j * m2 + i, j * m2 + k);
  return out;
}

UnitaryMatrix UnitaryMatrix::from_matrix(ComplexMatrix u, double tol) {
  require_square(u, "UnitaryMatrix");
  const double residual =
      max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
  if (residual > tol) {
    std::ostringstream os;
    os << "UnitaryMatrix: max|U^dagger U - I| = " << residual << " exceeds " << tol;
    throw InvalidArgument(os.str());
  }
  return UnitaryMatrix(std::move(u));
}

HermitianMatrix UnitaryMatrix::conjugate(const HermitianMatrix& a) const {
  if (a.dim() != dim()) throw DimensionMismatch("UnitaryMatrix::conjugate: dimension mismatch");
  return HermitianMatrix::from_upper(u_ * a.matrix() * u_.adjoint());
}

}  // namespace qumetrics
