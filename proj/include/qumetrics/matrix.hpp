#pragma once

#include <complex>
#include <functional>
#include <utility>

#include <Eigen/Dense>

namespace qumetrics {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Largest entry modulus, max_ij |a_ij|.
double max_abs(const ComplexMatrix& a);

/// Dense n x n matrix that is Hermitian by construction: only the upper triangle of the
/// source is read, the lower triangle is its conjugate mirror and the diagonal is real.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Rebuilds the matrix from the upper triangle of `source`.
  static HermitianMatrix from_upper(const ComplexMatrix& source);

  /// Like from_upper, but first rejects `source` with a ValidationError when
  /// max|A - A^dagger| exceeds `tol * max(1, max|A|)`.
  static HermitianMatrix from_matrix(const ComplexMatrix& source, double tol = 1e-10);

  static HermitianMatrix identity(Eigen::Index n);
  static HermitianMatrix diagonal(const RealVector& d);

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index k) const { return m_(i, k); }

 private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Eigenvalues in descending order with orthonormal eigenvector columns. Each column is
/// phase-fixed so that its first non-negligible component is real and positive.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  Eigen::Index dim() const noexcept { return eigenvalues.size(); }
  /// V diag(eigenvalues) V^dagger.
  ComplexMatrix reconstruct() const;
};

/// Hermitian eigensolver: Householder tridiagonalisation followed by implicit symmetric QL
/// (Eigen::SelfAdjointEigenSolver). Throws SolverFailure with the reconstruction residual
/// if the iteration cap is hit.
EigenDecomposition eig_hermitian(const HermitianMatrix& a);

/// Eigenvalues within +-psd_tolerance of zero are treated as exact zeros by the spectral
/// calculus below.
double psd_tolerance(double largest_eigenvalue) noexcept;

/// Applies `f` to each eigenvalue: V diag(f(lambda_i)) V^dagger.
HermitianMatrix spectral_function(const EigenDecomposition& eig,
                                  const std::function<double(double)>& f);

/// A^alpha for positive-semidefinite A and alpha in [0, 1], with 0^alpha = 0 on the null
/// space (including alpha = 0). Eigenvalues in [-psd_tol, psd_tol] count as zero; anything
/// more negative throws NotPositiveSemidefinite.
HermitianMatrix matrix_power(const HermitianMatrix& a, double alpha);
HermitianMatrix matrix_power(const EigenDecomposition& eig, double alpha);

/// Scalar power with the same zero convention as matrix_power.
double spectral_power(double eigenvalue, double alpha) noexcept;

Complex trace(const ComplexMatrix& a);
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
/// Tr(A X B Y), contracting (AX) against (BY) without forming the full chain.
Complex trace_quad(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b,
                   const ComplexMatrix& y);

/// Real part of a trace that must be real up to roundoff; throws if the imaginary part
/// exceeds 1e-10 * max(1, |z|).
double real_part_checked(Complex z);

/// Kronecker product; composite index i = i1 * dim(B) + i2.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b);

/// Which factor of a bipartite space is traced out.
enum class Subsystem { kFirst, kSecond };

struct BipartiteDims {
  Eigen::Index first;
  Eigen::Index second;
};

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem traced_out, BipartiteDims dims);

/// Square matrix with U^dagger U = I to 1e-10 (max-entry norm).
class UnitaryMatrix {
 public:
  static UnitaryMatrix from_matrix(ComplexMatrix u, double tol = 1e-10);

  Eigen::Index dim() const noexcept { return u_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return u_; }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(u_.adjoint()); }

  /// U A U^dagger.
  HermitianMatrix conjugate(const HermitianMatrix& a) const;

 private:
  explicit UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {}
  ComplexMatrix u_;
};

}  // namespace qumetrics
