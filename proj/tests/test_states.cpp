#include <doctest.h>

#include <cmath>
#include <numbers>

#include "damplab/coherence.hpp"
#include "damplab/error.hpp"
#include "damplab/states.hpp"
#include "damplab/structure.hpp"
#include "helpers.hpp"

using namespace damplab;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode parse_error_code(std::string_view text) {
  try {
    from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed");
  return ErrorCode::ParseError;
}

// |s><s| for a qubit state vector via the oracle, packed as Matrix2.
Matrix2 qubit_projector(oracle::C a, oracle::C b) {
  const auto p = oracle::projector({a, b});
  return Matrix2{{p[0][0], p[0][1], p[1][0], p[1][1]}};
}

}  // namespace

TEST_CASE("max_coherent_qubit") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(max_coherent_qubit(0.0), qubit_projector(r, r)) <= 1e-15);
  CHECK(max_abs_diff(max_coherent_qubit(kPi), qubit_projector(r, -r)) <= 1e-15);
  // (|0> + i|1>)/sqrt(2) carries <0|r><r|1> = -i/2, i.e. phase -pi/2 in the
  // (1/2)[[1, e^{i theta}], [e^{-i theta}, 1]] parametrisation.
  CHECK(max_abs_diff(max_coherent_qubit(-kPi / 2.0), qubit_projector(r, oracle::C(0.0, r))) <= 1e-15);
  CHECK(max_abs_diff(max_coherent_qubit(kPi / 2.0), qubit_projector(r, oracle::C(0.0, -r))) <= 1e-15);

  for (int k = 0; k < 64; ++k) {
    const Matrix2 q = max_coherent_qubit(k * 0.1);
    CHECK(is_maximally_coherent(q, 1e-15));
    CHECK(max_abs_diff(q * q, q) <= 1e-15);
  }
}

TEST_CASE("build_named: m1 / m2 / m3 entries") {
  const double r = 1.0 / std::sqrt(2.0);
  const oracle::Mat k0 = oracle::projector({1.0, 0.0});
  const oracle::Mat k1 = oracle::projector({0.0, 1.0});
  const oracle::Mat plus = oracle::projector({r, r});
  const oracle::Mat minus = oracle::projector({r, -r});
  const oracle::Mat rket = oracle::projector({r, oracle::C(0.0, r)});

  const DensityMatrix4 m1 = build_named(family::M1{1.0});
  CHECK(testutil::max_diff(m1.matrix(), oracle::kron(k0, plus)) <= 1e-15);

  const DensityMatrix4 m2 = build_named(family::M2{0.5});
  const oracle::Mat m2_ref =
      oracle::add(oracle::scale(oracle::kron(k0, plus), 0.5), oracle::scale(oracle::kron(k1, minus), 0.5));
  CHECK(testutil::max_diff(m2.matrix(), m2_ref) <= 1e-15);
  CHECK(m2(0, 0) == Complex(0.25));
  CHECK(m2(1, 1) == Complex(0.25));
  CHECK(m2(0, 1) == Complex(0.25));
  CHECK(m2(2, 2) == Complex(0.25));
  CHECK(m2(3, 3) == Complex(0.25));
  CHECK(m2(2, 3) == Complex(-0.25));

  const DensityMatrix4 m3 = build_named(family::M3{0.3});
  const oracle::Mat m3_ref =
      oracle::add(oracle::scale(oracle::kron(k0, plus), 0.3), oracle::scale(oracle::kron(k1, rket), 0.7));
  CHECK(testutil::max_diff(m3.matrix(), m3_ref) <= 1e-15);
  CHECK(std::abs(m3(2, 3) - Complex(0.0, -0.35)) <= 1e-15);
}

TEST_CASE("build_named: incoco with |+> parts equals m1") {
  const auto a = build_named(family::IncoCo{0.6, max_coherent_qubit(0.0), max_coherent_qubit(0.0)});
  CHECK(max_abs_diff(a.matrix(), build_named(family::M1{0.6}).matrix()) <= 1e-15);
}

TEST_CASE("build_named: family invariants") {
  for (int k = 0; k <= 20; ++k) {
    const double p0 = k / 20.0;
    for (const NamedFamily& f : {NamedFamily{family::M1{p0}}, NamedFamily{family::M2{p0}},
                                 NamedFamily{family::M3{p0}}}) {
      const DensityMatrix4 rho = build_named(f);
      CHECK(l1_coherence(rho) == doctest::Approx(1.0).epsilon(1e-14));
      const StateClass cls = classify(rho);
      CHECK(cls == StateClass::IncoherentCoherent);
    }
  }
  const auto pair = build_named(family::MaxCoherentQubitPair{0.25, 0.7, 2.1});
  CHECK(l1_coherence(pair) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(build_named(family::M2{1.5}), Error);
  CHECK_THROWS_AS(build_named(family::IncoCo{0.5, Matrix2::identity(), max_coherent_qubit(0.0)}), Error);
}

TEST_CASE("from_json: examples") {
  const DensityMatrix4 mixed = from_json(
      R"({"matrix": [[[0.25,0],[0,0],[0,0],[0,0]],[[0,0],[0.25,0],[0,0],[0,0]],
                     [[0,0],[0,0],[0.25,0],[0,0]],[[0,0],[0,0],[0,0],[0.25,0]]]})");
  CHECK(mixed.matrix() == Matrix4::identity() * 0.25);

  const DensityMatrix4 bell = from_json(to_json(build_named(family::BellPhiPlus{}).matrix()));
  CHECK(l1_coherence(bell) == 1.0);

  CHECK(parse_error_code(
            R"({"matrix": [[[0.3,0],[0,0],[0,0],[0,0]],[[0,0],[0.3,0],[0,0],[0,0]],
                           [[0,0],[0,0],[0.3,0],[0,0]],[[0,0],[0,0],[0,0],[0.3,0]]]})") ==
        ErrorCode::NotUnitTrace);
}

TEST_CASE("from_json: shape errors name the expected layout") {
  for (std::string_view bad : {R"({"matrix": [[1,2,3,4]]})", R"({"rows": []})", "not json",
                               R"({"matrix": [[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],
                                              [[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0]]]})"}) {
    try {
      from_json(bad);
      FAIL("parsed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      if (std::string_view(bad) != "not json") CHECK(std::string(e.what()).find("4x4x2") != std::string::npos);
    }
  }
}

TEST_CASE("to_json / from_json round trip preserves random states exactly") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix4 rho = random_density(seed);
    CHECK(from_json(to_json(rho.matrix())) == rho);
  }
}

TEST_CASE("random_density: determinism, validity, bound") {
  CHECK(random_density(42) == random_density(42));
  CHECK_FALSE(random_density(42) == random_density(43));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix4 rho = random_density(seed);
    CHECK_NOTHROW(validate_density(rho.matrix()));
    const double c = l1_coherence(rho);
    CHECK(c >= 0.0);
    CHECK(c <= 3.0);
  }
}

TEST_CASE("Rng: uniform range and normal moments") {
  Rng rng(2024);
  double sum = 0.0, sum2 = 0.0;
  constexpr int kSamples = 200000;
  for (int i = 0; i < kSamples; ++i) {
    const double u = rng.uniform();
    CHECK_UNARY(u >= 0.0 && u < 1.0);
    const double z = rng.normal();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::abs(sum / kSamples) < 0.01);
  CHECK(std::abs(sum2 / kSamples - 1.0) < 0.02);
}

TEST_CASE("random structured generators land in their classes") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(classify(random_incoherent_coherent(seed, true)) == StateClass::IncoherentCoherent);
    CHECK(classify(random_coherent_incoherent(seed, false)) == StateClass::CoherentIncoherent);
    CHECK(classify(random_incoherent(seed)) == StateClass::Incoherent);
    const auto mic = random_max_incoherent_coherent(seed);
    CHECK(classify(mic) == StateClass::IncoherentCoherent);
    CHECK(l1_coherence(mic) == doctest::Approx(1.0).epsilon(1e-14));

    const auto mismatch = random_incoherent_coherent(seed, false);
    CHECK_FALSE(same_argument(mismatch(0, 1), mismatch(2, 3)));
  }
}

TEST_CASE("resolve_state") {
  CHECK(resolve_state("m2", {0.5, 0, 0}) == build_named(family::M2{0.5}));
  CHECK(resolve_state("bell") == build_named(family::BellPhiPlus{}));
  CHECK(classify(resolve_state("coinco", {0.4, 0.3, 1.0})) == StateClass::CoherentIncoherent);
  try {
    resolve_state("ghz");
    FAIL("resolved");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownState);
  }
  try {
    resolve_state("file:/definitely/not/here.json");
    FAIL("resolved");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
  const DensityMatrix4 bell = resolve_state("file:" DAMPLAB_FIXTURE_DIR "/bell.json");
  CHECK(bell == build_named(family::BellPhiPlus{}));
}
