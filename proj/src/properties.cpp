#include "qumetrics/properties.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "qumetrics/measures.hpp"
#include "qumetrics/random.hpp"

namespace qumetrics {

namespace {

constexpr std::size_t kMaxRecordedFailures = 50;

struct PropertyInfo {
  std::string_view name;
  std::string_view description;
};

// Registry order is the reporting order.
constexpr std::array kProperties = {
    PropertyInfo{"wyd.trace_vs_commutator", "trace form of I_alpha equals the commutator form"},
    PropertyInfo{"wyd.trace_vs_spectral", "trace form of I_alpha equals the eigenvalue pair sum"},
    PropertyInfo{"wyd.convexity", "I_alpha is convex in rho on two-point mixtures"},
    PropertyInfo{"wyd.overlap_concavity", "Tr(rho^a X rho^(1-a) X) is concave in rho"},
    PropertyInfo{"wyd.tensor_additivity", "I_alpha(r1 x r2, A1 x I + I x A2) = I_alpha(r1,A1) + I_alpha(r2,A2)"},
    PropertyInfo{"wyd.partial_trace_monotonicity", "I_alpha(rho, A1 x I) >= I_alpha(tr_2 rho, A1)"},
    PropertyInfo{"wyd.pure_equals_variance", "pure states: I_alpha = V"},
    PropertyInfo{"wyd.variance_dominance", "V >= I_alpha"},
    PropertyInfo{"wyd.commuting_vanishes", "[rho, X] = 0 implies I_alpha = 0"},
    PropertyInfo{"wyd.unitary_covariance", "I_alpha(U rho U^+, X) = I_alpha(rho, U^+ X U)"},
    PropertyInfo{"wyd.unitary_invariance", "I_alpha(U rho U^+, U X U^+) = I_alpha(rho, X)"},
    PropertyInfo{"wyd.commuting_unitary_invariance", "[U, X] = 0 implies I_alpha(U rho U^+, X) = I_alpha(rho, X)"},
    PropertyInfo{"power.unitary_covariance", "(U rho U^+)^alpha = U rho^alpha U^+"},
    PropertyInfo{"luo.closed_vs_pairwise", "n - (Tr sqrt rho)^2 equals the pairwise sum"},
    PropertyInfo{"q_alpha.closed_forms", "n - Tr rho^a Tr rho^(1-a) equals n - 1 - pair sum"},
    PropertyInfo{"q_alpha.matrix_form", "eigenvalue form equals traces of matrix powers"},
    PropertyInfo{"q_alpha.symmetry", "Q_alpha = Q_(1-alpha)"},
    PropertyInfo{"q_alpha.basis_sum_standard", "sum of I_alpha over the standard basis equals Q_alpha"},
    PropertyInfo{"q_alpha.basis_sum_rotated", "sum of I_alpha over a rotated basis equals Q_alpha"},
    PropertyInfo{"q_alpha.lower_bound", "Q_alpha >= 0"},
    PropertyInfo{"q_alpha.upper_bound", "Q_alpha <= n - 1"},
    PropertyInfo{"q_alpha.luo_dominance", "Q_alpha <= L"},
    PropertyInfo{"q_alpha.luo_equality", "Q_alpha = L at alpha = 1/2 or when the spectrum is flat on its support"},
    PropertyInfo{"q_alpha.luo_strict", "Q_alpha < L away from alpha = 1/2 unless the spectrum is flat on its support"},
    PropertyInfo{"q_alpha.convexity", "Q_alpha is convex on two-point mixtures"},
    PropertyInfo{"q_alpha.unitary_invariance", "Q_alpha(U rho U^+) = Q_alpha(rho)"},
    PropertyInfo{"q_alpha.pseudo_additivity", "P(r1 x r2) + P(r1) P(r2) = P(r1) + P(r2)"},
    PropertyInfo{"q_alpha.full_rank_limit", "full rank: Q_alpha -> 0 as alpha -> 0 or 1"},
    PropertyInfo{"q_alpha.rank_deficient_limit", "rank r: Q_alpha -> n - r as alpha -> 0"},
    PropertyInfo{"q_star.quadrature", "closed-form Q* equals the Gauss-Legendre integral of Q_alpha"},
    PropertyInfo{"q_star.lower_bound", "Q* >= 0"},
    PropertyInfo{"q_star.upper_bound", "Q* <= n - 1"},
    PropertyInfo{"q_star.luo_dominance", "Q* <= L"},
    PropertyInfo{"q_star.convexity", "Q* is convex on two-point mixtures"},
    PropertyInfo{"q_star.unitary_invariance", "Q*(U rho U^+) = Q*(rho)"},
    PropertyInfo{"fixed_points.pure", "pure states: Q_alpha = Q* = L = n - 1"},
    PropertyInfo{"fixed_points.maximally_mixed", "I/n: Q_alpha = Q* = L = 0"},
};

std::size_t registry_index(std::string_view name) {
  for (std::size_t i = 0; i < kProperties.size(); ++i) {
    if (kProperties[i].name == name) return i;
  }
  return kProperties.size();
}

Rng sample_rng(std::uint64_t seed, std::size_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  return Rng(seq);
}

// Spread of the nonzero eigenvalues; Q_alpha = L exactly when this vanishes.
double spectral_spread(const DensityMatrix& rho) {
  const RealVector& l = rho.eigenvalues();
  const Eigen::Index r = rho.rank();
  return l(0) - l(r - 1);
}

Observable conjugated(const Observable& x, const ComplexMatrix& u) {
  return Observable(HermitianMatrix::from_upper(u * x.matrix() * u.adjoint()));
}

// Unitary exp(i t X) built from the eigenvectors of X, so it commutes with X.
UnitaryMatrix commuting_unitary(const Observable& x, Rng& rng) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  const EigenDecomposition e = eig_hermitian(x.hermitian());
  ComplexVector phases(e.dim());
  const double t = angle(rng);
  for (Eigen::Index i = 0; i < e.dim(); ++i) {
    phases(i) = std::polar(1.0, t * e.eigenvalues(i));
  }
  return UnitaryMatrix::from_matrix(e.eigenvectors * phases.asDiagonal() * e.eigenvectors.adjoint(),
                                    1e-9);
}

// X = V diag(d) V^dagger in rho's eigenbasis, so [rho, X] = 0.
Observable commuting_observable(const DensityMatrix& rho, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealVector d(rho.dim());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = normal(rng);
  const ComplexMatrix& v = rho.spectrum().eigenvectors;
  return Observable(HermitianMatrix::from_upper(v * d.cast<Complex>().asDiagonal() * v.adjoint()));
}

double overlap_term(const DensityMatrix& rho, const Observable& x, double alpha) {
  return real_part_checked(
      trace_quad(rho.power(alpha).matrix(), x.matrix(), rho.power(1.0 - alpha).matrix(), x.matrix()));
}

Observable lift_first(const Observable& a, Eigen::Index second_dim) {
  return Observable(tensor(a.hermitian(), HermitianMatrix::identity(second_dim)));
}

Observable lift_sum(const Observable& a1, const Observable& a2) {
  const ComplexMatrix sum = tensor(a1.matrix(), ComplexMatrix::Identity(a2.dim(), a2.dim())) +
                            tensor(ComplexMatrix::Identity(a1.dim(), a1.dim()), a2.matrix());
  return Observable(HermitianMatrix::from_upper(sum));
}

// P(r1 x r2) + P(r1) P(r2) - P(r1) - P(r2) with P = Q_alpha / dim.
double pseudo_additivity_defect(const DensityMatrix& r1, const DensityMatrix& r2, double alpha) {
  const DensityMatrix joint = tensor(r1, r2);
  const double p_joint = q_alpha(joint, alpha) / static_cast<double>(joint.dim());
  const double p1 = q_alpha(r1, alpha) / static_cast<double>(r1.dim());
  const double p2 = q_alpha(r2, alpha) / static_cast<double>(r2.dim());
  return p_joint + p1 * p2 - p1 - p2;
}

}  // namespace

std::string_view describe_property(std::string_view name) {
  const std::size_t i = registry_index(name);
  return i < kProperties.size() ? kProperties[i].description : std::string_view{};
}

void PropertyLedger::record(std::string_view name, std::size_t sample, double alpha, double slack,
                            double value) {
  auto it = std::find_if(tallies_.begin(), tallies_.end(),
                         [&](const PropertyTally& t) { return t.name == name; });
  if (it == tallies_.end()) {
    PropertyTally t;
    t.name = std::string(name);
    t.description = std::string(describe_property(name));
    t.worst_slack = slack;
    t.worst_value = value;
    t.worst_sample = sample;
    // keep registry order so reports are stable
    const std::size_t key = registry_index(name);
    auto pos = std::find_if(tallies_.begin(), tallies_.end(), [&](const PropertyTally& other) {
      return registry_index(other.name) > key;
    });
    it = tallies_.insert(pos, std::move(t));
  }
  ++it->checks;
  if (slack < it->worst_slack) {
    it->worst_slack = slack;
    it->worst_value = value;
    it->worst_sample = sample;
  }
  if (!(slack >= 0.0)) {
    ++it->failures;
    if (failures_.size() < kMaxRecordedFailures) {
      failures_.push_back({std::string(name), sample, alpha, slack});
    }
  }
}

void PropertyLedger::expect_small(std::string_view name, std::size_t sample, double alpha,
                                  double measured, double allowed) {
  record(name, sample, alpha, allowed - std::abs(measured), measured);
}

void PropertyLedger::expect_le(std::string_view name, std::size_t sample, double alpha, double lhs,
                               double rhs, double allowed) {
  record(name, sample, alpha, rhs + allowed - lhs, lhs - rhs);
}

void PropertyLedger::expect_gt(std::string_view name, std::size_t sample, double alpha, double value,
                               double threshold) {
  record(name, sample, alpha, value - threshold, value);
}

void PropertyLedger::merge(const PropertyLedger& other) {
  for (const PropertyTally& t : other.tallies_) {
    auto it = std::find_if(tallies_.begin(), tallies_.end(),
                           [&](const PropertyTally& mine) { return mine.name == t.name; });
    if (it == tallies_.end()) {
      const std::size_t key = registry_index(t.name);
      auto pos = std::find_if(tallies_.begin(), tallies_.end(), [&](const PropertyTally& mine) {
        return registry_index(mine.name) > key;
      });
      tallies_.insert(pos, t);
      continue;
    }
    it->checks += t.checks;
    it->failures += t.failures;
    if (t.worst_slack < it->worst_slack ||
        (t.worst_slack == it->worst_slack && t.worst_sample < it->worst_sample)) {
      it->worst_slack = t.worst_slack;
      it->worst_value = t.worst_value;
      it->worst_sample = t.worst_sample;
    }
  }
  for (const PropertyFailure& f : other.failures_) {
    if (failures_.size() < kMaxRecordedFailures) failures_.push_back(f);
  }
}

bool PropertyLedger::all_passed() const noexcept { return total_failures() == 0; }

std::size_t PropertyLedger::total_checks() const noexcept {
  std::size_t sum = 0;
  for (const auto& t : tallies_) sum += t.checks;
  return sum;
}

std::size_t PropertyLedger::total_failures() const noexcept {
  std::size_t sum = 0;
  for (const auto& t : tallies_) sum += t.failures;
  return sum;
}

const PropertyTally* PropertyLedger::find(std::string_view name) const noexcept {
  for (const auto& t : tallies_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

PropertyLedger check_state_properties(const DensityMatrix& rho, std::size_t sample,
                                      const Observable* observable, std::span<const double> alphas,
                                      const PropertyConfig& cfg) {
  PropertyLedger ledger;
  Rng rng = sample_rng(cfg.seed, sample);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const Eigen::Index n = rho.dim();
  const auto nd = static_cast<double>(n);
  const Observable x = observable != nullptr ? *observable : random_observable(n, rng);

  // Auxiliary inputs, drawn once per sample in a fixed order.
  const DensityMatrix partner = random_ginibre_density(n, rng);
  const double weight = unit(rng);
  const DensityMatrix mixture = mix(rho, partner, weight);
  const UnitaryMatrix u = random_unitary(n, rng);
  const DensityMatrix rotated = conjugate(rho, u);
  const UnitaryMatrix u_commuting = commuting_unitary(x, rng);
  const DensityMatrix rotated_commuting = conjugate(rho, u_commuting);
  const Observable x_commuting = commuting_observable(rho, rng);
  const DensityMatrix pure_state = pure(random_state_vector(n, rng));
  const DensityMatrix factor2 = random_ginibre_density(2, rng);
  const Observable obs2 = random_observable(2, rng);
  const DensityMatrix product = tensor(rho, factor2);
  const Observable product_obs = lift_sum(x, obs2);
  const DensityMatrix bipartite = random_ginibre_density(2 * n, rng);
  const DensityMatrix reduced = partial_trace(bipartite, Subsystem::kSecond, {n, 2});
  const Observable lifted = lift_first(x, 2);
  const Eigen::Index m = 2 + static_cast<Eigen::Index>(sample % 2);
  const DensityMatrix small1 = random_ginibre_density(m, rng);
  const DensityMatrix small2 = random_ginibre_density(m, rng);
  const Eigen::Index deficient_rank = n > 1 ? 1 + static_cast<Eigen::Index>(sample % static_cast<std::size_t>(n - 1)) : 1;
  const DensityMatrix deficient = random_density_of_rank(n, deficient_rank, rng);
  const ObservableBasis standard = standard_basis(n);
  std::vector<ObservableBasis> rotated_bases;
  for (int r = 0; r < cfg.rotated_bases; ++r) {
    rotated_bases.push_back(rotate_basis(standard, random_orthogonal(n * n, rng)));
  }
  const Observable x_in_eigenbasis = to_eigenbasis(rho, x);
  const ComplexMatrix& um = u.matrix();

  const double luo = luo_uncertainty(rho);
  const double qs = q_star(rho);
  const double spread = spectral_spread(rho);
  const bool flat = spread <= 1e-12;
  const bool full_rank = rho.rank() == n;

  ledger.expect_small("luo.closed_vs_pairwise", sample, 0.5, luo - luo_uncertainty_pairwise(rho),
                      cfg.closed_form_tol);

  for (const double alpha : alphas) {
    const double i_rho = wyd_info(rho, x, alpha);

    // dual forms
    ledger.expect_small("wyd.trace_vs_commutator", sample, alpha,
                        i_rho - wyd_info_commutator(rho, x, alpha), cfg.dual_form_tol);
    ledger.expect_small("wyd.trace_vs_spectral", sample, alpha,
                        i_rho - wyd_info_spectral(rho.eigenvalues(), x_in_eigenbasis, alpha),
                        cfg.dual_form_tol);

    // convexity / concavity on the mixture
    const double i_mix = wyd_info(mixture, x, alpha);
    const double i_partner = wyd_info(partner, x, alpha);
    ledger.expect_le("wyd.convexity", sample, alpha, i_mix,
                     weight * i_rho + (1.0 - weight) * i_partner, cfg.convexity_margin);
    ledger.expect_le("wyd.overlap_concavity", sample, alpha,
                     weight * overlap_term(rho, x, alpha) +
                         (1.0 - weight) * overlap_term(partner, x, alpha),
                     overlap_term(mixture, x, alpha), cfg.convexity_margin);

    ledger.expect_small("wyd.tensor_additivity", sample, alpha,
                        wyd_info(product, product_obs, alpha) - i_rho -
                            wyd_info(factor2, obs2, alpha),
                        cfg.tol);
    ledger.expect_le("wyd.partial_trace_monotonicity", sample, alpha, wyd_info(reduced, x, alpha),
                     wyd_info(bipartite, lifted, alpha), cfg.tol);

    ledger.expect_small("wyd.pure_equals_variance", sample, alpha,
                        wyd_info(pure_state, x, alpha) - variance(pure_state, x), cfg.tol);
    ledger.expect_le("wyd.variance_dominance", sample, alpha, i_rho, variance(rho, x), cfg.tol);
    ledger.expect_small("wyd.commuting_vanishes", sample, alpha, wyd_info(rho, x_commuting, alpha),
                        cfg.tol);

    // unitary identities
    const Observable x_back(HermitianMatrix::from_upper(um.adjoint() * x.matrix() * um));
    ledger.expect_small("wyd.unitary_covariance", sample, alpha,
                        wyd_info(rotated, x, alpha) - wyd_info(rho, x_back, alpha), cfg.tol);
    ledger.expect_small("wyd.unitary_invariance", sample, alpha,
                        wyd_info(rotated, conjugated(x, um), alpha) - i_rho, cfg.tol);
    ledger.expect_small("wyd.commuting_unitary_invariance", sample, alpha,
                        wyd_info(rotated_commuting, x, alpha) - i_rho, cfg.tol);
    ledger.expect_small(
        "power.unitary_covariance", sample, alpha,
        max_abs(rotated.power(alpha).matrix() - um * rho.power(alpha).matrix() * um.adjoint()),
        cfg.tol);

    // Q_alpha
    const double q = q_alpha(rho, alpha);
    ledger.expect_small("q_alpha.closed_forms", sample, alpha, q - q_alpha_pairwise(rho, alpha),
                        cfg.closed_form_tol);
    ledger.expect_small("q_alpha.matrix_form", sample, alpha, q - q_alpha_matrix_form(rho, alpha),
                        cfg.tol);
    ledger.expect_small("q_alpha.symmetry", sample, alpha, q - q_alpha(rho, 1.0 - alpha), 1e-12);
    ledger.expect_small("q_alpha.basis_sum_standard", sample, alpha,
                        q_alpha_via_basis_sum(rho, standard, alpha) - q, cfg.cross_check_tol);
    for (const auto& basis : rotated_bases) {
      ledger.expect_small("q_alpha.basis_sum_rotated", sample, alpha,
                          q_alpha_via_basis_sum(rho, basis, alpha) - q, cfg.cross_check_tol);
    }
    ledger.expect_le("q_alpha.lower_bound", sample, alpha, 0.0, q, cfg.tol);
    ledger.expect_le("q_alpha.upper_bound", sample, alpha, q, nd - 1.0, cfg.tol);
    ledger.expect_le("q_alpha.luo_dominance", sample, alpha, q, luo, cfg.tol);
    if (alpha == 0.5 || flat) {
      ledger.expect_small("q_alpha.luo_equality", sample, alpha, luo - q, cfg.closed_form_tol);
    } else if (std::abs(alpha - 0.5) >= 0.01 && spread > 1e-3) {
      ledger.expect_gt("q_alpha.luo_strict", sample, alpha, luo - q, cfg.closed_form_tol);
    }
    ledger.expect_le("q_alpha.convexity", sample, alpha, q_alpha(mixture, alpha),
                     weight * q + (1.0 - weight) * q_alpha(partner, alpha), cfg.convexity_margin);
    ledger.expect_small("q_alpha.unitary_invariance", sample, alpha, q_alpha(rotated, alpha) - q,
                        cfg.tol);
    ledger.expect_small("q_alpha.pseudo_additivity", sample, alpha,
                        pseudo_additivity_defect(rho, partner, alpha), cfg.identity_tol);
    ledger.expect_small("q_alpha.pseudo_additivity", sample, alpha,
                        pseudo_additivity_defect(small1, small2, alpha), cfg.identity_tol);
  }

  // alpha -> 0, 1 limits
  const double eps = cfg.limit_alpha;
  if (full_rank) {
    const double q_lo = q_alpha(rho, eps);
    const double q_hi = q_alpha(rho, 1.0 - eps);
    ledger.expect_le("q_alpha.full_rank_limit", sample, eps, q_lo, 1e-3 * nd, 0.0);
    ledger.expect_le("q_alpha.full_rank_limit", sample, 1.0 - eps, q_hi, 1e-3 * nd, 0.0);
    ledger.expect_small("q_alpha.full_rank_limit", sample, eps, q_lo - q_alpha_matrix_form(rho, eps),
                        cfg.tol);
  }
  ledger.expect_small("q_alpha.rank_deficient_limit", sample, eps,
                      q_alpha(deficient, eps) - (nd - static_cast<double>(deficient.rank())), 1e-2);

  // Q*
  ledger.expect_small("q_star.quadrature", sample, 0.0, qs - q_star_quadrature(rho, 64),
                      cfg.cross_check_tol);
  ledger.expect_le("q_star.lower_bound", sample, 0.0, 0.0, qs, cfg.tol);
  ledger.expect_le("q_star.upper_bound", sample, 0.0, qs, nd - 1.0, cfg.tol);
  ledger.expect_le("q_star.luo_dominance", sample, 0.0, qs, luo, cfg.tol);
  ledger.expect_le("q_star.convexity", sample, 0.0, q_star(mixture),
                   weight * qs + (1.0 - weight) * q_star(partner), cfg.convexity_margin);
  ledger.expect_small("q_star.unitary_invariance", sample, 0.0, q_star(rotated) - qs, cfg.tol);

  // fixed points in the same dimension
  const DensityMatrix flat_state = maximally_mixed(n);
  for (const double alpha : alphas) {
    ledger.expect_small("fixed_points.pure", sample, alpha, q_alpha(pure_state, alpha) - (nd - 1.0),
                        cfg.closed_form_tol);
    ledger.expect_small("fixed_points.maximally_mixed", sample, alpha, q_alpha(flat_state, alpha),
                        cfg.closed_form_tol);
  }
  ledger.expect_small("fixed_points.pure", sample, 0.0, q_star(pure_state) - (nd - 1.0),
                      cfg.closed_form_tol);
  ledger.expect_small("fixed_points.pure", sample, 0.5, luo_uncertainty(pure_state) - (nd - 1.0),
                      cfg.closed_form_tol);
  ledger.expect_small("fixed_points.maximally_mixed", sample, 0.0, q_star(flat_state),
                      cfg.closed_form_tol);
  ledger.expect_small("fixed_points.maximally_mixed", sample, 0.5, luo_uncertainty(flat_state),
                      cfg.closed_form_tol);
  return ledger;
}

PropertyLedger check_properties(std::span<const DensityMatrix> states,
                                std::span<const Observable> observables,
                                std::span<const double> alphas, const PropertyConfig& config) {
  std::map<Eigen::Index, std::vector<const Observable*>> by_dim;
  for (const Observable& o : observables) by_dim[o.dim()].push_back(&o);
  std::map<Eigen::Index, std::size_t> next;

  PropertyLedger ledger;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const Eigen::Index n = states[s].dim();
    const Observable* x = nullptr;
    if (auto it = by_dim.find(n); it != by_dim.end()) {
      x = it->second[next[n]++ % it->second.size()];
    }
    ledger.merge(check_state_properties(states[s], s, x, alphas, config));
  }
  return ledger;
}

}  // namespace qumetrics
