#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "damplab/channels.hpp"
#include "damplab/error.hpp"
#include "damplab/qmat.hpp"
#include "damplab/states.hpp"
#include "helpers.hpp"

using namespace damplab;

namespace {

Matrix2 random_matrix2(Rng& rng) {
  Matrix2 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

ErrorCode code_of(const Matrix4& m) {
  try {
    validate_density(m);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("matrix unexpectedly accepted");
  return ErrorCode::InvalidState;
}

}  // namespace

TEST_CASE("tensor: identity and basis bookkeeping") {
  CHECK(tensor(Matrix2::identity(), Matrix2::identity()) == Matrix4::identity());

  const Matrix2 p0 = Matrix2::diagonal({1.0, 0.0});
  const Matrix2 p1 = Matrix2::diagonal({0.0, 1.0});
  Matrix4 expected;
  expected(1, 1) = 1.0;  // |01>
  CHECK(tensor(p0, p1) == expected);
}

TEST_CASE("tensor: E1(gamma=1) (x) I maps |10> -> |00> and |11> -> |01>") {
  const Matrix2 e1{{0.0, 1.0, 0.0, 0.0}};
  const Matrix4 k = tensor(e1, Matrix2::identity());

  // Expected from the naive oracle's Kronecker product.
  const oracle::Mat ref = oracle::kron(oracle::ad_e1(1.0), oracle::eye(2));
  CHECK(testutil::max_diff(k, ref) == 0.0);

  Matrix4 expected;
  expected(0, 2) = 1.0;
  expected(1, 3) = 1.0;
  CHECK(k == expected);
}

TEST_CASE("tensor: mixed product and bilinearity on random inputs") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix2 a = random_matrix2(rng), b = random_matrix2(rng);
    const Matrix2 c = random_matrix2(rng), d = random_matrix2(rng);
    CHECK(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) <= 1e-12);

    const Complex s(rng.normal(), rng.normal());
    CHECK(max_abs_diff(tensor(a + c * s, b), tensor(a, b) + tensor(c, b) * s) <= 1e-12);
    CHECK(max_abs_diff(tensor(a, b + d * s), tensor(a, b) + tensor(a, d) * s) <= 1e-12);
  }
}

TEST_CASE("hermitian_eigenvalues: conjugated diagonal spectra") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 4> lambda{};
    for (double& v : lambda) v = rng.uniform(-1.0, 1.0);

    // Unitary from local rotations and a CNOT-like entangler.
    auto local = [&rng] {
      const double t = rng.uniform(0.0, 3.0), p = rng.uniform(0.0, 6.0), q = rng.uniform(0.0, 6.0);
      return Matrix2{{std::cos(t), -std::polar(std::sin(t), q), std::polar(std::sin(t), p),
                      std::polar(std::cos(t), p + q)}};
    };
    Matrix4 cnot;
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    const Matrix4 u = tensor(local(), local()) * cnot * tensor(local(), local());
    REQUIRE(max_abs_diff(u * u.adjoint(), Matrix4::identity()) < 1e-13);

    const Matrix4 h = u * Matrix4::diagonal({lambda[0], lambda[1], lambda[2], lambda[3]}) * u.adjoint();
    auto ev = hermitian_eigenvalues(h);
    std::sort(lambda.begin(), lambda.end());
    for (std::size_t i = 0; i < 4; ++i) CHECK(ev[i] == doctest::Approx(lambda[i]).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eigenvalues: degenerate and diagonal input") {
  CHECK(hermitian_eigenvalues(Matrix4::identity() * 0.25) == std::array<double, 4>{0.25, 0.25, 0.25, 0.25});
  const auto ev = hermitian_eigenvalues(Matrix4::diagonal({0.4, -0.1, 0.3, 0.0}));
  CHECK(ev == std::array<double, 4>{-0.1, 0.0, 0.3, 0.4});
}

TEST_CASE("validate_density: examples") {
  CHECK_NOTHROW(validate_density(Matrix4::identity() * 0.25));

  CHECK(code_of(Matrix4::diagonal({1.0, 0.0, 0.0, 0.01})) == ErrorCode::NotUnitTrace);

  // 2x2 block [[0.5, 0.6], [0.6, 0.5]] has eigenvalues 0.5 +- 0.6.
  Matrix4 m;
  m(0, 0) = m(1, 1) = 0.5;
  m(0, 1) = m(1, 0) = 0.6;
  CHECK(hermitian_eigenvalues(m)[0] == doctest::Approx(-0.1).epsilon(1e-14));
  CHECK(code_of(m) == ErrorCode::NotPositive);

  Matrix4 nh = Matrix4::identity() * 0.25;
  nh(0, 1) = Complex(0.0, 0.1);
  CHECK(code_of(nh) == ErrorCode::NotHermitian);

  Matrix4 nan = Matrix4::identity() * 0.25;
  nan(2, 2) = std::nan("");
  CHECK(code_of(nan) == ErrorCode::InvalidState);
}

TEST_CASE("validate_density: error message names the residual") {
  try {
    validate_density(Matrix4::diagonal({1.0, 0.0, 0.0, 0.01}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1.000e-02") != std::string::npos);
  }
}

TEST_CASE("validate_density: Ginibre states accepted, asymmetric perturbation rejected") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Matrix4 w = random_density(seed).matrix();
    CHECK_NOTHROW(validate_density(w));

    Matrix4 bumped = w;
    const std::size_t i = seed % 4, j = (seed / 4 + 1 + i) % 4;
    if (i == j) continue;
    bumped(i, j) += 10.0 * kTolStruct;
    CHECK(code_of(bumped) == ErrorCode::NotHermitian);
  }
}

TEST_CASE("apply_kraus: identity channel and gamma = 0") {
  const DensityMatrix4 rho = random_density(3);
  const std::array<Matrix4, 1> id{Matrix4::identity()};
  CHECK(apply_kraus(rho, id) == rho);

  const auto ops = lifted_kraus_ops(ChannelKind::amplitude_damping(0.0), Side::Left);
  CHECK(max_abs_diff(apply_kraus(rho, ops).matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("apply_kraus: Bell state through full damping of subsystem one") {
  const DensityMatrix4 bell = build_named(family::BellPhiPlus{});
  const auto ops = lifted_kraus_ops(ChannelKind::amplitude_damping(1.0), Side::Left);
  const DensityMatrix4 out = apply_kraus(bell, ops);

  const oracle::Mat ref =
      oracle::brute_force_ad(testutil::to_oracle(bell.matrix()), 1.0, oracle::Where::Left, 1);
  const Matrix4 expected = Matrix4::diagonal({0.5, 0.5, 0.0, 0.0});
  CHECK(testutil::max_diff(expected, ref) <= 1e-15);
  CHECK(max_abs_diff(out.matrix(), expected) <= 1e-15);
}

TEST_CASE("apply_kraus: rejects a non trace-preserving set") {
  const DensityMatrix4 rho = random_density(5);
  const std::array<Matrix4, 1> half{Matrix4::identity() * 0.5};
  try {
    apply_kraus(rho, half);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonTracePreserving);
  }
}

TEST_CASE("apply_kraus: trace and Hermiticity preserved on random states") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DensityMatrix4 rho = random_density(seed + 100);
    const double g = (seed % 11) / 10.0;
    for (Side side : {Side::Left, Side::Right}) {
      const auto ops = lifted_kraus_ops(ChannelKind::amplitude_damping(g), side);
      const Matrix4 out = apply_kraus(rho, ops).matrix();
      CHECK(std::abs(out.trace() - 1.0) <= 1e-12);
      CHECK(hermiticity_residual(out) <= 1e-15);
    }
  }
}
