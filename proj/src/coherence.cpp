#include "damplab/coherence.hpp"

#include <cmath>
#include <string>

#include "damplab/error.hpp"

namespace damplab {

namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw Error(ErrorCode::ParamOutOfRange, "gamma = " + std::to_string(gamma) + " outside [0, 1]");
}

}  // namespace

double analytic_coherence_ad(const DensityMatrix4& rho, double gamma, Side side,
                             std::size_t n) {
  require_gamma(gamma);
  auto a = [&rho](std::size_t i, std::size_t j) { return rho(i - 1, j - 1); };
  auto m = [&a](std::size_t i, std::size_t j) { return std::abs(a(i, j)); };

  const double base = 1.0 - gamma;
  const double nn = static_cast<double>(n);
  const double x = std::pow(base, nn);
  const double h = std::pow(base, nn / 2.0);
  const double d = 1.0 - x;

  switch (side) {
    case Side::Left:
      return 2.0 * (std::abs(a(1, 2) + a(3, 4) * d) +
                    h * (m(1, 3) + m(1, 4) + m(2, 3) + m(2, 4) + m(3, 4) * h));
    case Side::Right:
      return 2.0 * (std::abs(a(1, 3) + a(2, 4) * d) +
                    h * (m(1, 2) + m(1, 4) + m(2, 3) + m(3, 4) + m(2, 4) * h));
    case Side::Both:
      return 2.0 *
             (std::abs(a(1, 2) + a(3, 4) * d) + std::abs(a(1, 3) + a(2, 4) * d) +
              (m(1, 4) + m(2, 3)) * h + (m(2, 4) + m(3, 4)) * x) *
             h;
  }
  return 0.0;
}

double asymptotic_coherence_ad(const DensityMatrix4& rho, Side side, double gamma) {
  require_gamma(gamma);
  if (gamma == 0.0) return l1_coherence(rho);
  switch (side) {
    case Side::Left: return 2.0 * std::abs(rho(0, 1) + rho(2, 3));
    case Side::Right: return 2.0 * std::abs(rho(0, 2) + rho(1, 3));
    case Side::Both: return 0.0;
  }
  return 0.0;
}

CoherenceReport build_report(const DensityMatrix4& rho, const ChannelSpec& spec) {
  CoherenceReport report{.c_in = l1_coherence(rho),
                         .trajectory = {},
                         .c_analytic = std::nullopt,
                         .c_limit = std::nullopt,
                         .frozen = frozen_predicate(rho, spec.kind, spec.side)};

  const auto states = evolve_trajectory(rho, spec);
  report.trajectory.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k)
    report.trajectory.push_back({k, l1_coherence(states[k])});

  if (spec.kind.type() == ChannelType::AmplitudeDamping) {
    report.c_analytic = analytic_coherence_ad(rho, spec.kind.param(), spec.side, spec.n);
    report.c_limit = asymptotic_coherence_ad(rho, spec.side, spec.kind.param());
  }
  return report;
}

}  // namespace damplab
