#pragma once

#include <cstdint>
#include <random>

#include "qumetrics/matrix.hpp"
#include "qumetrics/observables.hpp"
#include "qumetrics/states.hpp"

namespace qumetrics {

using Rng = std::mt19937_64;

/// rows x cols matrix of independent standard complex Gaussians (re, im ~ N(0, 1)).
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// G G^dagger / Tr(G G^dagger) with G an n x rank Ginibre matrix; rank = n gives the
/// full-rank Hilbert-Schmidt ensemble, smaller ranks give rank-deficient states.
DensityMatrix random_ginibre_density(Eigen::Index n, Rng& rng);
DensityMatrix random_ginibre_density(Eigen::Index n, std::uint64_t seed);
DensityMatrix random_density_of_rank(Eigen::Index n, Eigen::Index rank, Rng& rng);

/// Haar unitary: Q from the QR factorisation of a Ginibre matrix with the phases of
/// diag(R) folded back into Q.
UnitaryMatrix random_unitary(Eigen::Index n, Rng& rng);
UnitaryMatrix random_unitary(Eigen::Index n, std::uint64_t seed);

/// (A + A^dagger)/2 with A Ginibre.
Observable random_observable(Eigen::Index n, Rng& rng);
Observable random_observable(Eigen::Index n, std::uint64_t seed);

ComplexVector random_state_vector(Eigen::Index n, Rng& rng);

/// Real orthogonal matrix from the QR factorisation of a real Gaussian matrix.
RealMatrix random_orthogonal(Eigen::Index n, Rng& rng);

}  // namespace qumetrics
