#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qumetrics/error.hpp"
#include "qumetrics/matrix.hpp"
#include "qumetrics/observables.hpp"
#include "qumetrics/states.hpp"

namespace qumetrics {

/// Wigner-Yanase-Dyson exponent, restricted to the open interval (0, 1). Converts
/// implicitly from double and throws InvalidArgument at or beyond the endpoints.
class AlphaParameter {
 public:
  AlphaParameter(double alpha);  // NOLINT(google-explicit-constructor)
  double value() const noexcept { return alpha_; }
  operator double() const noexcept { return alpha_; }  // NOLINT(google-explicit-constructor)

 private:
  double alpha_;
};

// ---------------------------------------------------------------------------
// Observable-dependent measures
// ---------------------------------------------------------------------------

/// V(rho, X) = Tr(rho X^2) - Tr(rho X)^2.
double variance(const DensityMatrix& rho, const Observable& x);

/// I_alpha(rho, X) = Tr(rho X^2) - Tr(rho^alpha X rho^(1-alpha) X), clamped at zero when
/// roundoff pushes it slightly negative. alpha = 1/2 is the Wigner-Yanase skew information.
double wyd_info(const DensityMatrix& rho, const Observable& x, AlphaParameter alpha);

/// The same quantity through -1/2 Tr([rho^alpha, X][rho^(1-alpha), X]). Unclamped.
double wyd_info_commutator(const DensityMatrix& rho, const Observable& x, AlphaParameter alpha);

/// Pair-sum form: sum_{i<j} (l_i + l_j - l_i^a l_j^(1-a) - l_i^(1-a) l_j^a) |h_ij|^2,
/// where h is the observable written in the eigenbasis belonging to `eigenvalues`.
double wyd_info_spectral(const RealVector& eigenvalues, const Observable& h_in_eigenbasis,
                         AlphaParameter alpha);

/// V^dagger X V for the eigenvectors V of rho.
Observable to_eigenbasis(const DensityMatrix& rho, const Observable& x);

// ---------------------------------------------------------------------------
// State-only measures
// ---------------------------------------------------------------------------

/// L(rho) = n - (Tr sqrt(rho))^2.
double luo_uncertainty(const DensityMatrix& rho);
/// sum_{i<k} (sqrt(l_i) - sqrt(l_k))^2.
double luo_uncertainty_pairwise(const DensityMatrix& rho);

/// Q_alpha(rho) = n - Tr rho^alpha Tr rho^(1-alpha).
double q_alpha(const DensityMatrix& rho, AlphaParameter alpha);
double q_alpha(const RealVector& eigenvalues, AlphaParameter alpha);
/// n - 1 - sum_{i<k} (l_i^a l_k^(1-a) + l_i^(1-a) l_k^a).
double q_alpha_pairwise(const DensityMatrix& rho, AlphaParameter alpha);
/// n - Tr(rho^alpha) Tr(rho^(1-alpha)) with both traces taken of matrix powers.
double q_alpha_matrix_form(const DensityMatrix& rho, AlphaParameter alpha);

/// sum_j I_alpha(rho, H_j) over an orthonormal observable basis.
double q_alpha_via_basis_sum(const DensityMatrix& rho, const ObservableBasis& basis,
                             AlphaParameter alpha);

/// Twice the logarithmic mean: 0 if l1 l2 = 0, 2 l1 if l1 = l2, otherwise
/// 2 (l2 - l1) / (ln l2 - ln l1). Equals the alpha-integral of l1^a l2^(1-a) + l1^(1-a) l2^a.
double delta(double l1, double l2);

/// Q*(rho) = n - 1 - sum_{i<k} delta(l_i, l_k), the average of Q_alpha over alpha.
double q_star(const DensityMatrix& rho);
double q_star(const RealVector& eigenvalues);
/// Integral of Q_alpha over (0, 1) with an n-point Gauss-Legendre rule.
double q_star_quadrature(const DensityMatrix& rho, int points = 64);

struct CriticalAlpha {
  /// Empty when Q_alpha is constant in alpha (pure or maximally mixed states).
  std::optional<double> alpha;
  double residual = 0.0;  // Q_{alpha_c} - Q*
  int iterations = 0;

  bool degenerate() const noexcept { return !alpha.has_value(); }
};

inline constexpr double kCriticalAlphaLowerBracket = 1e-6;

/// Root of g(alpha) = Q_alpha(rho) - Q*(rho) on [1e-6, 1/2] by bisection (200 halvings at
/// most). Throws BracketFailure when g has no sign change and the state is not
/// degenerate.
CriticalAlpha critical_alpha(const DensityMatrix& rho, double tol = 1e-10);

class BracketFailure : public Error {
 public:
  BracketFailure(const std::string& what, double g_low, double g_high)
      : Error(what), g_low_(g_low), g_high_(g_high) {}
  double g_low() const noexcept { return g_low_; }
  double g_high() const noexcept { return g_high_; }

 private:
  double g_low_;
  double g_high_;
};

struct Entropies {
  double von_neumann = 0.0;  // nats
  double renyi = 0.0;
  double tsallis = 0.0;
  double brukner_zeilinger = 0.0;  // normalised to [0, 1]
  double purity = 0.0;
};

/// von Neumann (0 ln 0 = 0), Renyi ln(Tr rho^q)/(1 - q), Tsallis (1 - Tr rho^q)/(q - 1),
/// normalised Brukner-Zeilinger n/(n-1) (Tr rho^2 - 1/n) and purity. q > 0, q != 1.
Entropies entropies(const DensityMatrix& rho, double q = 2.0);

/// Every scalar measure for one state, optionally against one observable.
struct MeasureReport {
  Eigen::Index n = 0;
  double q = 2.0;
  Entropies entropy;
  double luo = 0.0;
  double q_star = 0.0;
  std::vector<std::pair<double, double>> q_alpha;  // (alpha, Q_alpha)

  struct ObservableTerms {
    double variance = 0.0;
    std::vector<std::pair<double, double>> wyd;  // (alpha, I_alpha)
  };
  std::optional<ObservableTerms> observable;
};

MeasureReport measure_report(const DensityMatrix& rho, const std::vector<double>& alphas,
                             double q = 2.0, const Observable* x = nullptr);

}  // namespace qumetrics
