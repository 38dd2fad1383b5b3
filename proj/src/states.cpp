#include "qumetrics/states.hpp"

#include <cmath>
#include <sstream>

#include "qumetrics/error.hpp"

namespace qumetrics {

Eigen::Index DensityMatrix::rank() const noexcept {
  return (spectrum_->eigenvalues.array() > 0.0).count();
}

DensityMatrix validate(const HermitianMatrix& raw) {
  if (raw.dim() < 1) {
    throw ValidationError(Violation::kMalformed, 0.0, "empty matrix");
  }
  const double tr = raw.matrix().trace().real();
  if (!std::isfinite(tr) || std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream os;
    os << "trace = " << tr << ", |trace - 1| = " << std::abs(tr - 1.0) << " exceeds "
       << kTraceTolerance;
    throw ValidationError(Violation::kNonUnitTrace, tr, os.str());
  }

  auto eig = std::make_shared<EigenDecomposition>(eig_hermitian(raw));
  RealVector& lambda = eig->eigenvalues;
  const double tol = psd_tolerance(lambda.maxCoeff());
  const double smallest = lambda.minCoeff();
  if (smallest < -tol) {
    std::ostringstream os;
    os << "eigenvalue " << smallest << " is below -" << tol;
    throw ValidationError(Violation::kNotPositiveSemidefinite, smallest, os.str());
  }

  double removed = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) <= tol) {
      removed += std::abs(lambda(i));
      lambda(i) = 0.0;
    }
  }
  if (removed > kClampTraceBudget) {
    std::ostringstream os;
    os << "clamping near-zero eigenvalues changes the trace by " << removed;
    throw ValidationError(Violation::kNotPositiveSemidefinite, -removed, os.str());
  }
  lambda /= lambda.sum();

  return DensityMatrix(raw, std::move(eig));
}

DensityMatrix pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (psi.size() == 0 || !(norm > 0.0)) {
    throw InvalidArgument("pure: state vector must be non-zero");
  }
  const ComplexVector unit = psi / norm;
  return validate(HermitianMatrix::from_upper(unit * unit.adjoint()));
}

DensityMatrix maximally_mixed(Eigen::Index n) {
  if (n < 1) throw InvalidArgument("maximally_mixed: dimension must be positive");
  return validate(HermitianMatrix::diagonal(RealVector::Constant(n, 1.0 / static_cast<double>(n))));
}

ComplexVector singlet() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  return psi;
}

DensityMatrix werner(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "werner: lambda = " << lambda << " lies outside [0, 1]";
    throw InvalidArgument(os.str());
  }
  const ComplexVector psi = singlet();
  const ComplexMatrix projector = psi * psi.adjoint();
  const ComplexMatrix rho = ((4.0 * lambda - 1.0) / 3.0) * projector +
                            ((1.0 - lambda) / 3.0) * ComplexMatrix::Identity(4, 4);
  return validate(HermitianMatrix::from_upper(rho));
}

HermitianMatrix hansen_unnormalized() {
  RealMatrix m(4, 4);
  m << 7, 5, 5, 6,
       5, 6, 2, 5,
       5, 2, 6, 5,
       6, 5, 5, 7;
  return HermitianMatrix::from_upper(m.cast<Complex>());
}

DensityMatrix hansen() {
  return validate(HermitianMatrix::from_upper(hansen_unnormalized().matrix() / 26.0));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return validate(tensor(a.hermitian(), b.hermitian()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced_out, BipartiteDims dims) {
  return validate(HermitianMatrix::from_upper(partial_trace(rho.matrix(), traced_out, dims)));
}

DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u) {
  return validate(u.conjugate(rho.hermitian()));
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight) {
  if (a.dim() != b.dim()) throw DimensionMismatch("mix: states have different dimensions");
  if (!(weight >= 0.0 && weight <= 1.0)) throw InvalidArgument("mix: weight must lie in [0, 1]");
  return validate(
      HermitianMatrix::from_upper(weight * a.matrix() + (1.0 - weight) * b.matrix()));
}

}  // namespace qumetrics
