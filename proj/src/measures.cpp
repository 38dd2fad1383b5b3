#include "qumetrics/measures.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qumetrics/numerics.hpp"

namespace qumetrics {

namespace {

void require_same_dim(const DensityMatrix& rho, const Observable& x, const char* what) {
  if (rho.dim() != x.dim()) {
    std::ostringstream os;
    os << what << ": state has dimension " << rho.dim() << ", observable " << x.dim();
    throw DimensionMismatch(os.str());
  }
}

// Clamp small negative roundoff at zero; genuine negatives are left visible.
double clamp_roundoff(double value, double scale, double rel_tol) {
  if (value < 0.0 && value >= -rel_tol * std::max(1.0, scale)) return 0.0;
  return value;
}

double power_trace(const RealVector& eigenvalues, double alpha) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) sum += spectral_power(eigenvalues(i), alpha);
  return sum;
}

// Tr(rho X^2) - Tr(rho^a X rho^(1-a) X) with precomputed powers.
double wyd_from_powers(const DensityMatrix& rho, const ComplexMatrix& x,
                       const ComplexMatrix& rho_a, const ComplexMatrix& rho_b) {
  const ComplexMatrix x2 = x * x;
  const double second_moment = real_part_checked(trace_product(rho.matrix(), x2));
  const double overlap = real_part_checked(trace_quad(rho_a, x, rho_b, x));
  return clamp_roundoff(second_moment - overlap, second_moment, 1e-10);
}

}  // namespace

AlphaParameter::AlphaParameter(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream os;
    os << "alpha = " << alpha << " must lie strictly between 0 and 1";
    throw InvalidArgument(os.str());
  }
}

double variance(const DensityMatrix& rho, const Observable& x) {
  require_same_dim(rho, x, "variance");
  const double mean = real_part_checked(trace_product(rho.matrix(), x.matrix()));
  const double second = real_part_checked(trace_product(rho.matrix(), x.matrix() * x.matrix()));
  return clamp_roundoff(second - mean * mean, second, 1e-12);
}

double wyd_info(const DensityMatrix& rho, const Observable& x, AlphaParameter alpha) {
  require_same_dim(rho, x, "wyd_info");
  const HermitianMatrix rho_a = rho.power(alpha);
  const HermitianMatrix rho_b = rho.power(1.0 - alpha);
  return wyd_from_powers(rho, x.matrix(), rho_a.matrix(), rho_b.matrix());
}

double wyd_info_commutator(const DensityMatrix& rho, const Observable& x, AlphaParameter alpha) {
  require_same_dim(rho, x, "wyd_info_commutator");
  const ComplexMatrix c_a = commutator(rho.power(alpha).matrix(), x.matrix());
  const ComplexMatrix c_b = commutator(rho.power(1.0 - alpha).matrix(), x.matrix());
  return -0.5 * real_part_checked(trace_product(c_a, c_b));
}

double wyd_info_spectral(const RealVector& eigenvalues, const Observable& h, AlphaParameter alpha) {
  const Eigen::Index n = eigenvalues.size();
  if (h.dim() != n) {
    throw DimensionMismatch("wyd_info_spectral: eigenvalue count differs from observable dimension");
  }
  const double a = alpha;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double li = eigenvalues(i);
      const double lj = eigenvalues(j);
      const double weight = li + lj - spectral_power(li, a) * spectral_power(lj, 1.0 - a) -
                            spectral_power(li, 1.0 - a) * spectral_power(lj, a);
      sum += weight * std::norm(h(i, j));
    }
  }
  return sum;
}

Observable to_eigenbasis(const DensityMatrix& rho, const Observable& x) {
  require_same_dim(rho, x, "to_eigenbasis");
  const ComplexMatrix& v = rho.spectrum().eigenvectors;
  return Observable(HermitianMatrix::from_upper(v.adjoint() * x.matrix() * v));
}

double luo_uncertainty(const DensityMatrix& rho) {
  const double root_trace = power_trace(rho.eigenvalues(), 0.5);
  return static_cast<double>(rho.dim()) - root_trace * root_trace;
}

double luo_uncertainty_pairwise(const DensityMatrix& rho) {
  const RealVector& l = rho.eigenvalues();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < l.size(); ++i) {
    for (Eigen::Index k = i + 1; k < l.size(); ++k) {
      const double d = std::sqrt(l(i)) - std::sqrt(l(k));
      sum += d * d;
    }
  }
  return sum;
}

double q_alpha(const RealVector& eigenvalues, AlphaParameter alpha) {
  return static_cast<double>(eigenvalues.size()) -
         power_trace(eigenvalues, alpha) * power_trace(eigenvalues, 1.0 - alpha);
}

double q_alpha(const DensityMatrix& rho, AlphaParameter alpha) {
  return q_alpha(rho.eigenvalues(), alpha);
}

double q_alpha_pairwise(const DensityMatrix& rho, AlphaParameter alpha) {
  const RealVector& l = rho.eigenvalues();
  const double a = alpha;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < l.size(); ++i) {
    for (Eigen::Index k = i + 1; k < l.size(); ++k) {
      sum += spectral_power(l(i), a) * spectral_power(l(k), 1.0 - a) +
             spectral_power(l(i), 1.0 - a) * spectral_power(l(k), a);
    }
  }
  return static_cast<double>(l.size()) - 1.0 - sum;
}

double q_alpha_matrix_form(const DensityMatrix& rho, AlphaParameter alpha) {
  const double ta = real_part_checked(trace(rho.power(alpha).matrix()));
  const double tb = real_part_checked(trace(rho.power(1.0 - alpha).matrix()));
  return static_cast<double>(rho.dim()) - ta * tb;
}

double q_alpha_via_basis_sum(const DensityMatrix& rho, const ObservableBasis& basis,
                             AlphaParameter alpha) {
  if (basis.dim() != rho.dim()) {
    throw DimensionMismatch("q_alpha_via_basis_sum: basis dimension differs from state");
  }
  const ComplexMatrix rho_a = rho.power(alpha).matrix();
  const ComplexMatrix rho_b = rho.power(1.0 - alpha).matrix();
  double sum = 0.0;
  for (const Observable& h : basis.elements()) sum += wyd_from_powers(rho, h.matrix(), rho_a, rho_b);
  return sum;
}

double delta(double l1, double l2) {
  if (!(l1 >= 0.0) || !(l2 >= 0.0)) {
    std::ostringstream os;
    os << "delta: arguments must be non-negative (got " << l1 << ", " << l2 << ")";
    throw InvalidArgument(os.str());
  }
  if (l1 == 0.0 || l2 == 0.0) return 0.0;
  if (l1 == l2) return 2.0 * l1;
  if (l1 > l2) std::swap(l1, l2);
  // (l2 - l1) / ln(l2 / l1) written with log1p so that nearly equal arguments keep full
  // relative precision.
  const double diff = l2 - l1;
  return 2.0 * diff / std::log1p(diff / l1);
}

double q_star(const RealVector& l) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < l.size(); ++i)
    for (Eigen::Index k = i + 1; k < l.size(); ++k) sum += delta(l(i), l(k));
  return static_cast<double>(l.size()) - 1.0 - sum;
}

double q_star(const DensityMatrix& rho) { return q_star(rho.eigenvalues()); }

double q_star_quadrature(const DensityMatrix& rho, int points) {
  const RealVector& l = rho.eigenvalues();
  return integrate_gauss_legendre([&l](double a) { return q_alpha(l, a); }, 0.0, 1.0, points);
}

CriticalAlpha critical_alpha(const DensityMatrix& rho, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("critical_alpha: tolerance must be positive");
  const RealVector& l = rho.eigenvalues();
  const double target = q_star(l);
  const auto g = [&](double a) { return q_alpha(l, a) - target; };

  const double lo = kCriticalAlphaLowerBracket;
  const double hi = 0.5;
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (std::abs(g_lo) <= tol && std::abs(g_hi) <= tol) return {};

  if (g_lo > tol || g_hi < -tol) {
    std::ostringstream os;
    os << "critical_alpha: no sign change on [" << lo << ", " << hi << "], g = (" << g_lo << ", "
       << g_hi << ")";
    throw BracketFailure(os.str(), g_lo, g_hi);
  }
  const BisectionResult root = bisect(g, lo, hi, tol, 200);
  if (!root.converged) {
    std::ostringstream os;
    os << "critical_alpha: bisection stopped at |g| = " << std::abs(root.value) << " > " << tol;
    throw SolverFailure(os.str(), root.value);
  }
  return {root.root, root.value, root.iterations};
}

Entropies entropies(const DensityMatrix& rho, double q) {
  if (!(q > 0.0) || q == 1.0 || !std::isfinite(q)) {
    throw InvalidArgument("entropies: q must be positive and different from 1");
  }
  const RealVector& l = rho.eigenvalues();
  const auto n = static_cast<double>(rho.dim());
  Entropies e;
  double trace_q = 0.0;
  for (Eigen::Index i = 0; i < l.size(); ++i) {
    if (l(i) > 0.0) {
      e.von_neumann -= l(i) * std::log(l(i));
      trace_q += std::pow(l(i), q);
    }
    e.purity += l(i) * l(i);
  }
  e.renyi = std::log(trace_q) / (1.0 - q);
  e.tsallis = (1.0 - trace_q) / (q - 1.0);
  e.brukner_zeilinger = rho.dim() > 1 ? n / (n - 1.0) * (e.purity - 1.0 / n) : 0.0;
  return e;
}

MeasureReport measure_report(const DensityMatrix& rho, const std::vector<double>& alphas, double q,
                             const Observable* x) {
  MeasureReport r;
  r.n = rho.dim();
  r.q = q;
  r.entropy = entropies(rho, q);
  r.luo = luo_uncertainty(rho);
  r.q_star = q_star(rho);
  for (double a : alphas) r.q_alpha.emplace_back(a, q_alpha(rho, a));
  if (x != nullptr) {
    MeasureReport::ObservableTerms terms;
    terms.variance = variance(rho, *x);
    for (double a : alphas) terms.wyd.emplace_back(a, wyd_info(rho, *x, a));
    r.observable = std::move(terms);
  }
  return r;
}

}  // namespace qumetrics
