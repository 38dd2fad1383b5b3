#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "qumetrics/error.hpp"
#include "qumetrics/random.hpp"
#include "qumetrics/state_file.hpp"
#include "qumetrics/states.hpp"

using namespace qumetrics;

namespace {

// Frozen from oracle_values (characteristic-polynomial roots / 26).
constexpr double kHansenEigen[] = {0.80029861784785195, 0.15384615384615385, 0.038461538461538464,
                                   0.0073936898444557173};

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qumetrics_test_" + name);
}

}  // namespace

TEST_CASE("validate rejects and accepts") {
  SUBCASE("Hansen's unnormalised matrix has trace 26") {
    try {
      validate(hansen_unnormalized());
      FAIL("expected rejection");
    } catch (const ValidationError& e) {
      CHECK(e.violation() == Violation::kNonUnitTrace);
      CHECK(e.measured() == doctest::Approx(26.0));
    }
  }
  SUBCASE("dividing by 26 makes it a state") {
    const DensityMatrix rho = validate(HermitianMatrix::from_upper(hansen_unnormalized().matrix() / 26.0));
    CHECK(rho.dim() == 4);
  }
  SUBCASE("negative eigenvalue") {
    RealVector d(3);
    d << 0.6, 0.6, -0.2;
    try {
      validate(HermitianMatrix::diagonal(d));
      FAIL("expected rejection");
    } catch (const ValidationError& e) {
      CHECK(e.violation() == Violation::kNotPositiveSemidefinite);
      CHECK(e.measured() == doctest::Approx(-0.2));
    }
  }
  SUBCASE("roundoff-level negative eigenvalues are clamped, spectrum renormalised") {
    RealVector d(3);
    d << 0.5 + 2e-11, 0.5, -2e-11;
    const DensityMatrix rho = validate(HermitianMatrix::diagonal(d));
    CHECK(rho.eigenvalues()(2) == 0.0);
    CHECK(std::abs(rho.eigenvalues().sum() - 1.0) < 1e-15);
    CHECK(rho.rank() == 2);
  }
  SUBCASE("many tiny negatives exceed the clamp budget") {
    RealVector d(8);
    d << 1.0 + 7 * 9e-11, -9e-11, -9e-11, -9e-11, -9e-11, -9e-11, -9e-11, -9e-11;
    CHECK_THROWS_AS(validate(HermitianMatrix::diagonal(d)), ValidationError);
  }
}

TEST_CASE("pure states") {
  ComplexVector e0(2);
  e0 << 1.0, 0.0;
  CHECK(pure(e0).matrix() == ComplexMatrix(RealVector(RealVector::Unit(2, 0)).cast<Complex>().asDiagonal()));

  ComplexVector plus(2);
  plus << 1.0, 1.0;
  const DensityMatrix p = pure(plus / std::sqrt(2.0));
  CHECK(max_abs(p.matrix() - ComplexMatrix::Constant(2, 2, 0.5)) < 1e-15);

  const DensityMatrix s = pure(singlet());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  expected(1, 2) = -0.5;
  expected(2, 1) = -0.5;
  CHECK(max_abs(s.matrix() - expected) < 1e-15);
  CHECK(s.eigenvalues()(0) == doctest::Approx(1.0));
  CHECK(s.rank() == 1);

  CHECK_THROWS_AS(pure(ComplexVector::Zero(3)), InvalidArgument);

  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix r = pure(random_state_vector(2 + i % 5, rng));
    CHECK(std::abs(trace_product(r.matrix(), r.matrix()).real() - 1.0) <= 1e-12);
  }
}

TEST_CASE("maximally mixed") {
  CHECK(maximally_mixed(2).matrix() == 0.5 * ComplexMatrix::Identity(2, 2));
  CHECK(maximally_mixed(4).matrix() == 0.25 * ComplexMatrix::Identity(4, 4));
  for (Eigen::Index n : {1, 3, 7}) {
    const DensityMatrix rho = maximally_mixed(n);
    for (Eigen::Index i = 0; i < n; ++i)
      CHECK(rho.eigenvalues()(i) == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-15));
  }
}

TEST_CASE("werner family") {
  CHECK(max_abs(werner(0.25).matrix() - 0.25 * ComplexMatrix::Identity(4, 4)) < 1e-16);
  const ComplexVector s = singlet();
  CHECK(max_abs(werner(1.0).matrix() - s * s.adjoint()) < 1e-16);

  const RealVector half = werner(0.5).eigenvalues();
  CHECK(std::abs(half(0) - 0.5) < 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(half(i) - 1.0 / 6.0) < 1e-12);

  for (int k = 0; k < 50; ++k) {
    const double lambda = k / 49.0;
    const DensityMatrix rho = werner(lambda);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-15);
    RealVector expected(4);
    expected << lambda, (1 - lambda) / 3, (1 - lambda) / 3, (1 - lambda) / 3;
    std::sort(expected.data(), expected.data() + 4, std::greater<>());
    CHECK((rho.eigenvalues() - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }

  CHECK_THROWS_AS(werner(-0.01), InvalidArgument);
  CHECK_THROWS_AS(werner(1.01), InvalidArgument);
}

TEST_CASE("hansen state") {
  const DensityMatrix rho = hansen();
  CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-15);
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(7.0 / 26.0).epsilon(1e-15));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(rho.eigenvalues()(i) - kHansenEigen[i]) < 1e-12);
}

TEST_CASE("state file round trip") {
  Rng rng(12);
  for (Eigen::Index n : {1, 2, 3, 5}) {
    const DensityMatrix rho = random_ginibre_density(n, rng);
    const StateFile f = StateFile::from_matrix(rho.matrix(), "random");
    const auto path = temp_file("rt.json");
    write_state_file(path, f);
    const StateFile back = read_state_file(path);
    CHECK(back.dim == n);
    CHECK(back.label == "random");
    REQUIRE(back.entries.size() == f.entries.size());
    for (std::size_t j = 0; j < f.entries.size(); ++j) CHECK(back.entries[j] == f.entries[j]);

    // and through the validated DensityMatrix, bit for bit
    const DensityMatrix loaded = load_state(path);
    CHECK(loaded.matrix() == rho.matrix());
    CHECK(serialize_state_file(StateFile::from_matrix(loaded.matrix(), "random")) ==
          serialize_state_file(f));
  }
}

TEST_CASE("state file diagnostics") {
  CHECK_THROWS_AS(parse_state_file("not json"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_state_file(R"({"entries": []})"), doctest::Contains("'dim'"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_state_file(R"({"dim": 2, "entries": [[1,0],[0,0],[0,0]]})"),
                       doctest::Contains("'entries'"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_state_file(R"({"dim": 1, "entries": [[1]]})"),
                       doctest::Contains("entries[0]"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_state_file(R"({"dim": 1, "entries": [[1, 0]], "label": 3})"),
                       doctest::Contains("'label'"), ValidationError);

  const StateFile ok = parse_state_file(R"({"dim": 2, "entries": [[0.5,0],[0,0],[0,0],[0.5,0]]})");
  CHECK(ok.label.empty());
  CHECK_NOTHROW(validate(HermitianMatrix::from_matrix(ok.to_matrix())));

  const auto path = temp_file("bad_trace.json");
  std::ofstream(path) << R"({"dim": 2, "entries": [[1,0],[0,0],[0,0],[1,0]]})";
  CHECK_THROWS_AS(load_state(path), ValidationError);
  // observables only need Hermiticity
  CHECK(load_observable(path).dim() == 2);

  CHECK_THROWS_AS(load_state(temp_file("does_not_exist.json")), Error);
}

TEST_CASE("state combinators") {
  Rng rng(2);
  const DensityMatrix a = random_ginibre_density(2, rng);
  const DensityMatrix b = random_ginibre_density(3, rng);
  const DensityMatrix ab = tensor(a, b);
  CHECK(ab.dim() == 6);
  CHECK(max_abs(partial_trace(ab, Subsystem::kSecond, {2, 3}).matrix() - a.matrix()) < 1e-12);

  const UnitaryMatrix u = random_unitary(2, rng);
  const DensityMatrix rotated = conjugate(a, u);
  CHECK((rotated.eigenvalues() - a.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);

  const DensityMatrix c = random_ginibre_density(2, rng);
  CHECK(max_abs(mix(a, c, 1.0).matrix() - a.matrix()) == 0.0);
  CHECK_THROWS_AS(mix(a, b, 0.5), DimensionMismatch);
  CHECK_THROWS_AS(mix(a, c, 1.5), InvalidArgument);
}
