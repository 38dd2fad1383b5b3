#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qumetrics/observables.hpp"
#include "qumetrics/states.hpp"

namespace qumetrics {

/// Pass/fail tally for one named property. `worst_slack` is the smallest observed
/// (allowed - measured) margin; a check fails when its slack is negative.
struct PropertyTally {
  std::string name;
  std::string description;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst_slack = 0.0;
  double worst_value = 0.0;
  std::size_t worst_sample = 0;
};

struct PropertyFailure {
  std::string property;
  std::size_t sample = 0;
  double alpha = 0.0;
  double slack = 0.0;
};

class PropertyLedger {
 public:
  /// Records |measured| <= allowed.
  void expect_small(std::string_view name, std::size_t sample, double alpha, double measured,
                    double allowed);
  /// Records lhs <= rhs + allowed.
  void expect_le(std::string_view name, std::size_t sample, double alpha, double lhs, double rhs,
                 double allowed);
  /// Records value >= threshold; pass a positive threshold for strict inequalities.
  void expect_gt(std::string_view name, std::size_t sample, double alpha, double value,
                 double threshold);

  /// Folds another ledger into this one; order of merging does not change the result.
  void merge(const PropertyLedger& other);

  bool all_passed() const noexcept;
  std::size_t total_checks() const noexcept;
  std::size_t total_failures() const noexcept;
  const std::vector<PropertyTally>& tallies() const noexcept { return tallies_; }
  const std::vector<PropertyFailure>& failures() const noexcept { return failures_; }
  const PropertyTally* find(std::string_view name) const noexcept;

 private:
  void record(std::string_view name, std::size_t sample, double alpha, double slack, double value);

  std::vector<PropertyTally> tallies_;
  std::vector<PropertyFailure> failures_;  // first few failures, for diagnostics
};

/// Short human-readable statement of a property name used in the ledger.
std::string_view describe_property(std::string_view name);

struct PropertyConfig {
  double tol = 1e-8;
  /// A convexity/concavity violation counts only when it exceeds this margin.
  double convexity_margin = 1e-9;
  /// Two routes to I_alpha (trace, commutator and spectral-pair forms).
  double dual_form_tol = 1e-9;
  /// Exact algebraic identities such as the pseudo-additivity law.
  double identity_tol = 1e-9;
  /// Basis-sum and quadrature comparisons.
  double cross_check_tol = 1e-6;
  /// Two-route agreement of the closed-form Q_alpha (pairwise vs trace-product form).
  double closed_form_tol = 1e-10;
  /// Alpha used for the near-endpoint limit checks.
  double limit_alpha = 1e-4;
  std::uint64_t seed = 1;
  /// Random rotations of the observable basis per state.
  int rotated_bases = 1;
};

/// Runs every property predicate over the sample states.
///
/// For each state (index s) and alpha, auxiliary inputs are drawn from an RNG seeded with
/// (config.seed, s): a partner state for the mixture and tensor-product checks, Haar
/// unitaries, a random pure state, a rank-deficient state and a random bipartite state.
/// Observables are taken from `observables` (round-robin among those of matching
/// dimension) or drawn randomly when none match. Samples are independent, so the
/// ledger is the same however they are scheduled.
PropertyLedger check_properties(std::span<const DensityMatrix> states,
                                std::span<const Observable> observables,
                                std::span<const double> alphas, const PropertyConfig& config);

/// Property checks for one state; check_properties folds these.
PropertyLedger check_state_properties(const DensityMatrix& rho, std::size_t sample,
                                      const Observable* observable, std::span<const double> alphas,
                                      const PropertyConfig& config);

}  // namespace qumetrics
