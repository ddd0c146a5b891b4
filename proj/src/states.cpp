#include "damplab/states.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "damplab/error.hpp"

namespace damplab {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

const QubitOperator kKet0 = QubitOperator::diagonal({1.0, 0.0});
const QubitOperator kKet1 = QubitOperator::diagonal({0.0, 1.0});
const QubitOperator kPlus{{0.5, 0.5, 0.5, 0.5}};
const QubitOperator kMinus{{0.5, -0.5, -0.5, 0.5}};
// |r><r| with |r> = (|0> + i|1>)/sqrt(2); the row index carries the ket, so
// <0|r><r|1> = -i/2.
const QubitOperator kR{{0.5, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.5}};

void require_probability(double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0))
    throw Error(ErrorCode::ParamOutOfRange, "p0 = " + std::to_string(p0) + " outside [0, 1]");
}

void require_qubit_density(const QubitOperator& q, const char* name) {
  const double tol = kTolStruct;
  const double herm = hermiticity_residual(q);
  const double trace_dev = std::abs(q.trace() - 1.0);
  const double a = q(0, 0).real();
  const double d = q(1, 1).real();
  const double min_ev = 0.5 * (a + d - std::hypot(a - d, 2.0 * std::abs(q(0, 1))));
  if (herm > tol || trace_dev > tol || min_ev < -tol)
    throw Error(ErrorCode::InvalidState, std::string(name) + " is not a qubit density matrix");
}

Matrix4 inco_co(double p0, const QubitOperator& rho0, const QubitOperator& rho1) {
  return tensor(kKet0, rho0) * p0 + tensor(kKet1, rho1) * (1.0 - p0);
}

Matrix4 co_inco(double p0, const QubitOperator& rho0, const QubitOperator& rho1) {
  return tensor(rho0, kKet0) * p0 + tensor(rho1, kKet1) * (1.0 - p0);
}

Matrix4 build_matrix(const family::M1& f) {
  require_probability(f.p0);
  return inco_co(f.p0, kPlus, kPlus);
}
Matrix4 build_matrix(const family::M2& f) {
  require_probability(f.p0);
  return inco_co(f.p0, kPlus, kMinus);
}
Matrix4 build_matrix(const family::M3& f) {
  require_probability(f.p0);
  return inco_co(f.p0, kPlus, kR);
}
Matrix4 build_matrix(const family::IncoCo& f) {
  require_probability(f.p0);
  require_qubit_density(f.rho0, "rho0");
  require_qubit_density(f.rho1, "rho1");
  return inco_co(f.p0, f.rho0, f.rho1);
}
Matrix4 build_matrix(const family::CoInco& f) {
  require_probability(f.p0);
  require_qubit_density(f.rho0, "rho0");
  require_qubit_density(f.rho1, "rho1");
  return co_inco(f.p0, f.rho0, f.rho1);
}
Matrix4 build_matrix(const family::BellPhiPlus&) {
  Matrix4 m;
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}
Matrix4 build_matrix(const family::MaxCoherentQubitPair& f) {
  require_probability(f.p0);
  return inco_co(f.p0, max_coherent_qubit(f.theta0), max_coherent_qubit(f.theta1));
}

Matrix4 swap_subsystems(const Matrix4& m) {
  constexpr std::size_t perm[4] = {0, 2, 1, 3};
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(perm[i], perm[j]) = m(i, j);
  return out;
}

// Random qubit density matrix diag(t, 1 - t) with off-diagonal modulus a
// nonvanishing fraction of its maximum sqrt(t (1 - t)).
QubitOperator random_qubit_with_phase(Rng& rng, double phase) {
  const double t = rng.uniform(0.1, 0.9);
  const double mod = std::sqrt(t * (1.0 - t)) * rng.uniform(0.2, 1.0);
  const Complex off = std::polar(mod, phase);
  return QubitOperator{{t, off, std::conj(off), 1.0 - t}};
}

Matrix4 random_inco_co_matrix(std::uint64_t seed, bool same_argument) {
  Rng rng(seed);
  const double p0 = rng.uniform(0.05, 0.95);
  const double phase0 = rng.uniform(0.0, 2.0 * kPi);
  const double phase1 =
      same_argument ? phase0 : phase0 + rng.uniform(0.3, 2.0 * kPi - 0.3);
  const QubitOperator rho0 = random_qubit_with_phase(rng, phase0);
  const QubitOperator rho1 = random_qubit_with_phase(rng, phase1);
  return inco_co(p0, rho0, rho1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "failed reading '" + path + "'");
  return ss.str();
}

}  // namespace

QubitOperator max_coherent_qubit(double theta) {
  const Complex e = std::polar(0.5, theta);
  return QubitOperator{{0.5, e, std::conj(e), 0.5}};
}

DensityMatrix4 build_named(const NamedFamily& f) {
  return validate_density(std::visit([](const auto& v) { return build_matrix(v); }, f));
}

DensityMatrix4 from_json(std::string_view text, double tol_struct) {
  static const std::string kLayout =
      "expected {\"matrix\": [[[re, im] x4] x4]}, a 4x4x2 array of numbers";
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix"))
    throw Error(ErrorCode::ParseError, "missing \"matrix\" field; " + kLayout);

  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4)
    throw Error(ErrorCode::ParseError, "matrix must have 4 rows; " + kLayout);

  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != 4)
      throw Error(ErrorCode::ParseError,
                  "matrix[" + std::to_string(i) + "] must have 4 entries; " + kLayout);
    for (std::size_t j = 0; j < 4; ++j) {
      const json& z = row[j];
      const std::string where = "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw Error(ErrorCode::ParseError, where + " must be a [re, im] number pair; " + kLayout);
      m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return validate_density(m, tol_struct);
}

std::string to_json(const Matrix4& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return json{{"matrix", rows}}.dump();
}

DensityMatrix4 resolve_state(std::string_view id, const StateParams& params) {
  constexpr std::string_view kFilePrefix = "file:";
  if (id.starts_with(kFilePrefix))
    return from_json(read_file(std::string(id.substr(kFilePrefix.size()))));
  if (id == "m1") return build_named(family::M1{params.p0});
  if (id == "m2") return build_named(family::M2{params.p0});
  if (id == "m3") return build_named(family::M3{params.p0});
  if (id == "bell") return build_named(family::BellPhiPlus{});
  if (id == "incoco")
    return build_named(family::IncoCo{params.p0, max_coherent_qubit(params.theta0),
                                      max_coherent_qubit(params.theta1)});
  if (id == "coinco")
    return build_named(family::CoInco{params.p0, max_coherent_qubit(params.theta0),
                                      max_coherent_qubit(params.theta1)});
  throw Error(ErrorCode::UnknownState,
              "'" + std::string(id) + "' is not one of m1|m2|m3|bell|incoco|coinco|file:<path>");
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], keeping the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  has_spare_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

DensityMatrix4 random_density(std::uint64_t seed) {
  Rng rng(seed);
  Matrix4 g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double re = rng.normal();
      g(i, j) = Complex(re, rng.normal());
    }
  Matrix4 w = g * g.adjoint();
  w *= 1.0 / w.trace().real();
  // G G^dagger is Hermitian only up to rounding in the products; restore it
  // exactly so downstream symmetry checks see no spurious residual.
  for (std::size_t i = 0; i < 4; ++i) {
    w(i, i) = w(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) w(j, i) = std::conj(w(i, j));
  }
  return validate_density(w);
}

DensityMatrix4 random_incoherent_coherent(std::uint64_t seed, bool same_argument) {
  return validate_density(random_inco_co_matrix(seed, same_argument));
}

DensityMatrix4 random_coherent_incoherent(std::uint64_t seed, bool same_argument) {
  return validate_density(swap_subsystems(random_inco_co_matrix(seed, same_argument)));
}

DensityMatrix4 random_incoherent(std::uint64_t seed) {
  Rng rng(seed);
  std::array<double, 4> w{};
  double total = 0.0;
  for (double& v : w) total += (v = rng.uniform(0.01, 1.0));
  return validate_density(
      Matrix4::diagonal({w[0] / total, w[1] / total, w[2] / total, w[3] / total}));
}

DensityMatrix4 random_max_incoherent_coherent(std::uint64_t seed) {
  Rng rng(seed);
  const double p0 = rng.uniform();
  const double theta0 = rng.uniform(0.0, 2.0 * kPi);
  const double theta1 = rng.uniform(0.0, 2.0 * kPi);
  return build_named(family::MaxCoherentQubitPair{p0, theta0, theta1});
}

}  // namespace damplab
