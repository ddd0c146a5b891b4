#include "damplab/channels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "damplab/error.hpp"

namespace damplab {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw Error(ErrorCode::ParamOutOfRange,
                std::string(name) + " = " + std::to_string(v) + " outside [0, 1]");
}

}  // namespace

ChannelKind ChannelKind::amplitude_damping(double gamma) {
  require_unit_interval(gamma, "gamma");
  return {ChannelType::AmplitudeDamping, gamma};
}

ChannelKind ChannelKind::phase_damping(double lambda) {
  require_unit_interval(lambda, "lambda");
  return {ChannelType::PhaseDamping, lambda};
}

std::string_view to_string(ChannelType type) noexcept {
  return type == ChannelType::AmplitudeDamping ? "ad" : "pd";
}

std::string_view to_string(Side side) noexcept {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Both: return "both";
  }
  return "left";
}

ChannelType parse_channel_type(std::string_view text) {
  if (text == "ad") return ChannelType::AmplitudeDamping;
  if (text == "pd") return ChannelType::PhaseDamping;
  throw Error(ErrorCode::ParseError,
              "channel kind '" + std::string(text) + "' is not one of ad|pd");
}

Side parse_side(std::string_view text) {
  if (text == "left") return Side::Left;
  if (text == "right") return Side::Right;
  if (text == "both") return Side::Both;
  throw Error(ErrorCode::ParseError,
              "side '" + std::string(text) + "' is not one of left|right|both");
}

KrausPair kraus_ops(const ChannelKind& kind) {
  const double p = kind.param();
  require_unit_interval(p, "channel parameter");
  const double keep = std::sqrt(1.0 - p);
  const double lose = std::sqrt(p);
  if (kind.type() == ChannelType::AmplitudeDamping)
    return {QubitOperator{{1.0, 0.0, 0.0, keep}}, QubitOperator{{0.0, lose, 0.0, 0.0}}};
  return {QubitOperator{{1.0, 0.0, 0.0, keep}}, QubitOperator{{0.0, 0.0, 0.0, lose}}};
}

std::vector<Matrix4> lifted_kraus_ops(const ChannelKind& kind, Side side) {
  if (side == Side::Both)
    throw Error(ErrorCode::ParamOutOfRange, "lifted_kraus_ops expects a single side");
  const auto [k0, k1] = kraus_ops(kind);
  const Matrix2 id = Matrix2::identity();
  if (side == Side::Left) return {tensor(k0, id), tensor(k1, id)};
  return {tensor(id, k0), tensor(id, k1)};
}

DensityMatrix4 apply_once(const DensityMatrix4& rho, const ChannelKind& kind, Side side) {
  if (side == Side::Both)
    return apply_once(apply_once(rho, kind, Side::Left), kind, Side::Right);
  return apply_kraus(rho, lifted_kraus_ops(kind, side));
}

DensityMatrix4 apply_n(const DensityMatrix4& rho, const ChannelSpec& spec) {
  if (spec.n == 0) return rho;
  std::vector<Matrix4> left, right;
  if (spec.side != Side::Right) left = lifted_kraus_ops(spec.kind, Side::Left);
  if (spec.side != Side::Left) right = lifted_kraus_ops(spec.kind, Side::Right);

  DensityMatrix4 out = rho;
  for (std::size_t step = 0; step < spec.n; ++step) {
    if (!left.empty()) out = apply_kraus(out, left);
    if (!right.empty()) out = apply_kraus(out, right);
  }
  return out;
}

std::vector<DensityMatrix4> evolve_trajectory(const DensityMatrix4& rho,
                                              const ChannelSpec& spec) {
  std::vector<DensityMatrix4> states;
  states.reserve(spec.n + 1);
  states.push_back(rho);
  ChannelSpec one = spec;
  one.n = 1;
  for (std::size_t step = 0; step < spec.n; ++step) states.push_back(apply_n(states.back(), one));
  return states;
}

DensityMatrix4 closed_form_ad(const DensityMatrix4& rho, double gamma, Side side,
                              std::size_t n) {
  require_unit_interval(gamma, "gamma");

  // Entries addressed 1-based, a(1,1) ... a(4,4), to mirror the usual a_ij labels.
  auto a = [&rho](std::size_t i, std::size_t j) { return rho(i - 1, j - 1); };

  const double base = 1.0 - gamma;
  const double nn = static_cast<double>(n);
  const double x = std::pow(base, nn);         // (1-g)^n
  const double h = std::pow(base, nn / 2.0);   // (1-g)^{n/2}
  const double h3 = std::pow(base, 1.5 * nn);  // (1-g)^{3n/2}
  const double x2 = std::pow(base, 2.0 * nn);  // (1-g)^{2n}
  const double d = 1.0 - x;                    // 1 - (1-g)^n

  std::array<Complex, 16> e{};
  switch (side) {
    case Side::Left:
      e = {a(1, 1) + a(3, 3) * d, a(1, 2) + a(3, 4) * d, a(1, 3) * h, a(1, 4) * h,
           a(2, 1) + a(4, 3) * d, a(2, 2) + a(4, 4) * d, a(2, 3) * h, a(2, 4) * h,
           a(3, 1) * h,           a(3, 2) * h,           a(3, 3) * x, a(3, 4) * x,
           a(4, 1) * h,           a(4, 2) * h,           a(4, 3) * x, a(4, 4) * x};
      break;
    case Side::Right:
      e = {a(1, 1) + a(2, 2) * d, a(1, 2) * h, a(1, 3) + a(2, 4) * d, a(1, 4) * h,
           a(2, 1) * h,           a(2, 2) * x, a(2, 3) * h,           a(2, 4) * x,
           a(3, 1) + a(4, 2) * d, a(3, 2) * h, a(3, 3) + a(4, 4) * d, a(3, 4) * h,
           a(4, 1) * h,           a(4, 2) * x, a(4, 3) * h,           a(4, 4) * x};
      break;
    case Side::Both:
      e = {a(1, 1) + a(3, 3) * d + (a(2, 2) + a(4, 4) * d) * d,
           (a(1, 2) + a(3, 4) * d) * h,
           a(1, 3) * h + a(2, 4) * h * d,
           a(1, 4) * x,

           (a(2, 1) + a(4, 3) * d) * h,
           (a(2, 2) + a(4, 4) * d) * x,
           a(2, 3) * x,
           a(2, 4) * h3,

           a(3, 1) * h + a(4, 2) * h * d,
           a(3, 2) * x,
           a(3, 3) * x + a(4, 4) * x * d,
           a(3, 4) * h3,

           a(4, 1) * x,
           a(4, 2) * h3,
           a(4, 3) * h3,
           a(4, 4) * x2};
      break;
  }
  return validate_density(Matrix4{e});
}

double gamma_from_time(const GammaSchedule& schedule) {
  if (!(schedule.rate >= 0.0) || !std::isfinite(schedule.rate))
    throw Error(ErrorCode::ParamOutOfRange, "rate must be finite and >= 0");
  if (!(schedule.t >= 0.0) || !std::isfinite(schedule.t))
    throw Error(ErrorCode::ParamOutOfRange, "t must be finite and >= 0");

  double gamma = 0.0;
  switch (schedule.model) {
    case GammaSchedule::Model::SpontaneousEmission:
      gamma = -std::expm1(-2.0 * schedule.rate * schedule.t);
      break;
    case GammaSchedule::Model::OscillatorCoupling: {
      const double c = std::cos(schedule.rate * schedule.t);
      gamma = 1.0 - c * c;
      break;
    }
  }
  return std::clamp(gamma, 0.0, 1.0);
}

}  // namespace damplab
