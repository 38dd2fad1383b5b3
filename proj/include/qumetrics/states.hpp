#pragma once

#include <memory>
#include <string>

#include "qumetrics/matrix.hpp"

namespace qumetrics {

/// Hermitian, positive-semidefinite, unit-trace matrix together with its spectrum.
///
/// The only way to obtain one is through validate() (or a named constructor that calls
/// it). Validation diagonalises the matrix once; the spectrum is stored with eigenvalues
/// inside the psd tolerance band snapped to zero and renormalised to sum to one, and is
/// shared immutably between copies. The stored matrix itself is kept as supplied.
class DensityMatrix {
 public:
  Eigen::Index dim() const noexcept { return matrix_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return matrix_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_.matrix(); }

  const EigenDecomposition& spectrum() const noexcept { return *spectrum_; }
  const RealVector& eigenvalues() const noexcept { return spectrum_->eigenvalues; }

  /// rho^alpha built from the cached spectrum.
  HermitianMatrix power(double alpha) const { return matrix_power(*spectrum_, alpha); }

  /// Number of strictly positive eigenvalues after snapping.
  Eigen::Index rank() const noexcept;

  friend DensityMatrix validate(const HermitianMatrix& raw);

 private:
  DensityMatrix(HermitianMatrix m, std::shared_ptr<const EigenDecomposition> s)
      : matrix_(std::move(m)), spectrum_(std::move(s)) {}

  HermitianMatrix matrix_;
  std::shared_ptr<const EigenDecomposition> spectrum_;
};

/// Budget for the trace change caused by snapping near-zero eigenvalues.
inline constexpr double kClampTraceBudget = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

/// Accepts `raw` as a density matrix or throws ValidationError naming the broken
/// invariant (non-unit trace, negative eigenvalue) and the measured residual.
DensityMatrix validate(const HermitianMatrix& raw);

/// |psi><psi| after normalising psi. Throws InvalidArgument for the zero vector.
DensityMatrix pure(const ComplexVector& psi);

/// I / n.
DensityMatrix maximally_mixed(Eigen::Index n);

/// (|01> - |10>) / sqrt(2).
ComplexVector singlet();

/// Two-qubit Werner family ((4l - 1)/3) |Psi-><Psi-| + ((1 - l)/3) I_4, which has
/// spectrum (l, (1-l)/3, (1-l)/3, (1-l)/3). Defined for l in [0, 1].
DensityMatrix werner(double lambda);

/// Hansen's unnormalised 4x4 integer matrix (trace 26).
HermitianMatrix hansen_unnormalized();
/// hansen_unnormalized() / 26.
DensityMatrix hansen();

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced_out, BipartiteDims dims);
/// U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u);
/// weight * a + (1 - weight) * b for weight in [0, 1].
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight);

}  // namespace qumetrics
