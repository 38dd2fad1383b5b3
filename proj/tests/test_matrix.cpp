#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qumetrics/error.hpp"
#include "qumetrics/matrix.hpp"
#include "qumetrics/observables.hpp"
#include "qumetrics/random.hpp"
#include "qumetrics/states.hpp"

using namespace qumetrics;

namespace {

// Frozen from oracle_values: roots of the characteristic polynomial of Hansen's matrix.
constexpr double kHansenStarEigen[] = {20.80776406404415, 4.0, 1.0, 0.19223593595584865};
constexpr double kHansenRootQuarterTrace = 2.3081990253778111;

HermitianMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  return random_observable(n, rng).hermitian();
}

}  // namespace

TEST_CASE("eig_hermitian on trivial inputs") {
  SUBCASE("identity") {
    const auto e = eig_hermitian(HermitianMatrix::identity(2));
    CHECK(e.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::Identity(2, 2)) < 1e-14);
  }
  SUBCASE("diag(3, -1) keeps the axes") {
    RealVector d(2);
    d << -1.0, 3.0;
    const auto e = eig_hermitian(HermitianMatrix::diagonal(d));
    CHECK(e.eigenvalues(0) == doctest::Approx(3.0));
    CHECK(e.eigenvalues(1) == doctest::Approx(-1.0));
    // phase convention makes the leading component real positive
    CHECK(std::abs(e.eigenvectors(1, 0) - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(e.eigenvectors(0, 1) - Complex(1.0, 0.0)) < 1e-14);
  }
}

TEST_CASE("eig_hermitian reproduces the characteristic-polynomial roots of Hansen's matrix") {
  const auto e = eig_hermitian(hansen_unnormalized());
  for (int i = 0; i < 4; ++i) CHECK(std::abs(e.eigenvalues(i) - kHansenStarEigen[i]) < 1e-12);
  CHECK(std::abs(kHansenStarEigen[0] - (21.0 + std::sqrt(425.0)) / 2.0) < 1e-12);

  // the frozen constants are what the brute-force root finder returns
  const oracle::Mat m = {{7, 5, 5, 6}, {5, 6, 2, 5}, {5, 2, 6, 5}, {6, 5, 5, 7}};
  const auto roots = oracle::real_roots(oracle::characteristic_polynomial(m), -1.0, 30.0);
  REQUIRE(roots.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(roots[static_cast<std::size_t>(i)] - kHansenStarEigen[i]) < 1e-10);
}

TEST_CASE("eig_hermitian residuals on random Hermitian matrices") {
  Rng rng(7);
  for (Eigen::Index n : {2, 3, 4, 6, 8}) {
    for (int trial = 0; trial < 100; ++trial) {
      const HermitianMatrix a = random_hermitian(n, rng);
      const auto e = eig_hermitian(a);
      CHECK(max_abs(a.matrix() - e.reconstruct()) <= 1e-10 * std::max(1.0, max_abs(a.matrix())));
      CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::Identity(n, n)) <= 1e-10);
      for (Eigen::Index i = 1; i < n; ++i) CHECK(e.eigenvalues(i - 1) >= e.eigenvalues(i));
    }
  }
}

TEST_CASE("eig_hermitian is deterministic") {
  const HermitianMatrix a = random_observable(5, std::uint64_t{11}).hermitian();
  const auto e1 = eig_hermitian(a);
  const auto e2 = eig_hermitian(a);
  CHECK(e1.eigenvalues == e2.eigenvalues);
  CHECK(e1.eigenvectors == e2.eigenvectors);
}

TEST_CASE("matrix_power") {
  SUBCASE("scalar matrix") {
    const HermitianMatrix a = HermitianMatrix::diagonal(RealVector::Constant(3, 1.0 / 3.0));
    for (double alpha : {0.1, 0.5, 0.9}) {
      const HermitianMatrix p = matrix_power(a, alpha);
      CHECK(max_abs(p.matrix() - std::pow(3.0, -alpha) * ComplexMatrix::Identity(3, 3)) < 1e-14);
    }
  }
  SUBCASE("projector is unchanged") {
    ComplexVector psi(2);
    psi << 1.0, Complex(0.0, 1.0);
    psi /= psi.norm();
    const HermitianMatrix proj = HermitianMatrix::from_upper(psi * psi.adjoint());
    for (double alpha : {0.2, 0.5, 0.75}) {
      CHECK(max_abs(matrix_power(proj, alpha).matrix() - proj.matrix()) < 1e-14);
    }
  }
  SUBCASE("Hansen rho at 1/4: trace matches the scalar-power oracle") {
    const DensityMatrix rho = hansen();
    const HermitianMatrix p = matrix_power(rho.hermitian(), 0.25);
    CHECK(std::abs(p.matrix().trace().real() - kHansenRootQuarterTrace) < 1e-12);
    double oracle_sum = 0.0;
    for (double l : kHansenStarEigen) oracle_sum += std::pow(l / 26.0, 0.25);
    CHECK(std::abs(oracle_sum - kHansenRootQuarterTrace) < 1e-14);
  }
  SUBCASE("zero eigenvalues stay zero for any exponent") {
    RealVector d(3);
    d << 0.5, 0.5, 0.0;
    const HermitianMatrix a = HermitianMatrix::diagonal(d);
    CHECK(std::abs(matrix_power(a, 0.0)(2, 2)) == 0.0);
    CHECK(std::abs(matrix_power(a, 1e-6)(2, 2)) == 0.0);
  }
  SUBCASE("negative eigenvalue is an error") {
    RealVector d(2);
    d << 1.0, -1e-3;
    try {
      matrix_power(HermitianMatrix::diagonal(d), 0.5);
      FAIL("expected NotPositiveSemidefinite");
    } catch (const NotPositiveSemidefinite& e) {
      CHECK(e.eigenvalue() == doctest::Approx(-1e-3));
    }
  }
  SUBCASE("tiny negative noise is clamped") {
    RealVector d(2);
    d << 1.0, -1e-12;
    CHECK(std::abs(matrix_power(HermitianMatrix::diagonal(d), 0.5)(1, 1)) == 0.0);
  }
  SUBCASE("exponent outside [0, 1]") {
    CHECK_THROWS_AS(matrix_power(HermitianMatrix::identity(2), 1.5), InvalidArgument);
  }
}

TEST_CASE("matrix_power identities on random PSD matrices") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const DensityMatrix rho = random_ginibre_density(n, rng);
    const ComplexMatrix a = rho.matrix();
    const ComplexMatrix half = matrix_power(rho.hermitian(), 0.5).matrix();
    CHECK(max_abs(half * half - a) <= 1e-9);
    for (double alpha : {0.1, 0.25, 0.5, 0.9}) {
      const ComplexMatrix p = matrix_power(rho.hermitian(), alpha).matrix();
      const ComplexMatrix q = matrix_power(rho.hermitian(), 1.0 - alpha).matrix();
      CHECK(max_abs(p * q - a) <= 1e-9);
    }
  }
}

TEST_CASE("traces") {
  CHECK(trace(ComplexMatrix::Identity(5, 5)) == Complex(5.0, 0.0));
  const ComplexMatrix quarter = 0.25 * ComplexMatrix::Identity(4, 4);
  CHECK(std::abs(trace_product(quarter, quarter) - Complex(0.25, 0.0)) < 1e-15);

  // Tr(sqrt(rho) X sqrt(rho) X) for rho = |0><0|, X = sigma_x: <0|x|0>^2 = 0
  const oracle::CMat rho = {{1.0, 0.0}, {0.0, 0.0}};
  const oracle::CMat sx = {{0.0, 1.0}, {1.0, 0.0}};
  const double explicit_value = oracle::ctrace(oracle::cmatmul(oracle::cmatmul(rho, sx), oracle::cmatmul(rho, sx))).real();
  CHECK(explicit_value == 0.0);
  ComplexMatrix r = ComplexMatrix::Zero(2, 2);
  r(0, 0) = 1.0;
  CHECK(std::abs(trace_quad(r, pauli_x().matrix(), r, pauli_x().matrix())) == 0.0);

  CHECK_THROWS_AS(trace_product(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)),
                  DimensionMismatch);
  CHECK_THROWS_AS(trace_quad(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2),
                             ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(2, 2)),
                  DimensionMismatch);
}

TEST_CASE("trace_quad matches the explicit product") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    const ComplexMatrix a = ginibre(n, n, rng), x = ginibre(n, n, rng), b = ginibre(n, n, rng),
                        y = ginibre(n, n, rng);
    const Complex direct = (a * x * b * y).trace();
    CHECK(std::abs(trace_quad(a, x, b, y) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("tensor") {
  CHECK(tensor(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) ==
        ComplexMatrix::Identity(4, 4));

  RealVector d1(2), d2(2);
  d1 << 2.0, 3.0;
  d2 << 5.0, 7.0;
  const ComplexMatrix t = tensor(HermitianMatrix::diagonal(d1), HermitianMatrix::diagonal(d2)).matrix();
  const double expected[] = {10.0, 14.0, 15.0, 21.0};
  for (int i = 0; i < 4; ++i) CHECK(t(i, i) == Complex(expected[i], 0.0));
  CHECK(max_abs(t - ComplexMatrix(t.diagonal().asDiagonal())) == 0.0);

  ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  const ComplexMatrix t2 = tensor(zero, 0.5 * ComplexMatrix::Identity(2, 2));
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(0, 0) = 0.5;
  expect(1, 1) = 0.5;
  CHECK(t2 == expect);
}

TEST_CASE("partial_trace") {
  Rng rng(9);
  SUBCASE("recovers both factors of a product state") {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix a = random_ginibre_density(2, rng);
      const DensityMatrix b = random_ginibre_density(3, rng);
      const ComplexMatrix ab = tensor(a.matrix(), b.matrix());
      CHECK(max_abs(partial_trace(ab, Subsystem::kSecond, {2, 3}) - a.matrix()) <= 1e-12);
      CHECK(max_abs(partial_trace(ab, Subsystem::kFirst, {2, 3}) - b.matrix()) <= 1e-12);
    }
  }
  SUBCASE("singlet reduces to I/2") {
    const ComplexVector s = singlet();
    const ComplexMatrix reduced = partial_trace(s * s.adjoint(), Subsystem::kSecond, {2, 2});
    CHECK(max_abs(reduced - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  }
  SUBCASE("tr_1 of I/4") {
    const ComplexMatrix reduced =
        partial_trace(0.25 * ComplexMatrix::Identity(4, 4), Subsystem::kFirst, {2, 2});
    CHECK(max_abs(reduced - 0.5 * ComplexMatrix::Identity(2, 2)) == 0.0);
  }
  SUBCASE("dims must factor the dimension") {
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::Identity(4, 4), Subsystem::kFirst, {3, 2}),
                    DimensionMismatch);
  }
}

TEST_CASE("HermitianMatrix construction") {
  ComplexMatrix m(2, 2);
  m << Complex(1, 0.3), Complex(2, 1), Complex(7, 7), 3.0;
  const HermitianMatrix h = HermitianMatrix::from_upper(m);
  CHECK(max_abs(h.matrix() - h.matrix().adjoint()) == 0.0);
  CHECK(h(1, 0) == Complex(2, -1));
  CHECK(h(0, 0) == Complex(1, 0));

  try {
    HermitianMatrix::from_matrix(m);
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.violation() == Violation::kNotHermitian);
    CHECK(e.measured() > 1.0);
  }
  CHECK_THROWS_AS(HermitianMatrix::from_upper(ComplexMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("random generators") {
  Rng rng(1);
  SUBCASE("n = 1 density is [1]") {
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      const DensityMatrix rho = random_ginibre_density(1, seed);
      CHECK(rho.matrix()(0, 0) == Complex(1.0, 0.0));
    }
  }
  SUBCASE("unitaries are unitary") {
    for (Eigen::Index n : {1, 2, 3, 6, 8}) {
      const UnitaryMatrix u = random_unitary(n, rng);
      CHECK(max_abs(u.matrix().adjoint() * u.matrix() - ComplexMatrix::Identity(n, n)) <= 1e-10);
    }
  }
  SUBCASE("densities are states") {
    for (Eigen::Index n : {2, 3, 4, 6}) {
      const DensityMatrix rho = random_ginibre_density(n, rng);
      CHECK(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-12);
      CHECK(rho.eigenvalues().minCoeff() >= 0.0);
    }
  }
  SUBCASE("seeded calls are reproducible") {
    CHECK(random_ginibre_density(4, std::uint64_t{5}).matrix() ==
          random_ginibre_density(4, std::uint64_t{5}).matrix());
    CHECK(random_unitary(3, std::uint64_t{5}).matrix() == random_unitary(3, std::uint64_t{5}).matrix());
    CHECK(random_observable(3, std::uint64_t{5}).matrix() ==
          random_observable(3, std::uint64_t{5}).matrix());
  }
  SUBCASE("Haar phase fixing: diagonal phases of U are not biased to the real axis") {
    // With phase fixing the mean of U_00 over the Haar measure is zero.
    Complex mean = 0.0;
    const int count = 2000;
    for (int i = 0; i < count; ++i) mean += random_unitary(2, rng).matrix()(0, 0);
    mean /= static_cast<double>(count);
    CHECK(std::abs(mean) < 0.05);
  }
  SUBCASE("random orthogonal") {
    const RealMatrix o = random_orthogonal(9, rng);
    CHECK((o.transpose() * o - RealMatrix::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-12);
  }
}
