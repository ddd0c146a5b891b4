#include "damplab/structure.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>

namespace damplab {

namespace {

using Index = std::pair<std::size_t, std::size_t>;

// Upper-triangle positions coupling different first-subsystem levels (zero for
// incoherent-coherent states), and different second-subsystem levels.
constexpr std::initializer_list<Index> kCrossFirst = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
constexpr std::initializer_list<Index> kCrossSecond = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};

bool all_small(const DensityMatrix4& rho, std::initializer_list<Index> where, double tol) {
  for (const auto& [i, j] : where)
    if (std::abs(rho(i, j)) > tol) return false;
  return true;
}

}  // namespace

std::string_view to_string(StateClass c) noexcept {
  switch (c) {
    case StateClass::Incoherent: return "Incoherent";
    case StateClass::IncoherentCoherent: return "IncoherentCoherent";
    case StateClass::CoherentIncoherent: return "CoherentIncoherent";
    case StateClass::GeneralCoherent: return "GeneralCoherent";
  }
  return "GeneralCoherent";
}

std::string_view to_string(FrozenReason r) noexcept {
  switch (r) {
    case FrozenReason::SubsystemCoherent: return "SubsystemCoherent";
    case FrozenReason::ArgumentMismatch: return "ArgumentMismatch";
    case FrozenReason::Frozen: return "Frozen";
    case FrozenReason::IncoherentInput: return "IncoherentInput";
  }
  return "SubsystemCoherent";
}

StateClass classify(const DensityMatrix4& rho, double tol) {
  const bool inco_first = all_small(rho, kCrossFirst, tol);
  const bool inco_second = all_small(rho, kCrossSecond, tol);
  if (inco_first && inco_second) return StateClass::Incoherent;
  if (inco_first) return StateClass::IncoherentCoherent;
  if (inco_second) return StateClass::CoherentIncoherent;
  return StateClass::GeneralCoherent;
}

bool same_argument(Complex z1, Complex z2, double tol) {
  const double m1 = std::abs(z1);
  const double m2 = std::abs(z2);
  if (m1 <= tol || m2 <= tol) return true;
  const Complex w = std::conj(z1) * z2;
  return std::abs(w.imag()) <= tol * m1 * m2 && w.real() >= 0.0;
}

FrozenVerdict frozen_predicate(const DensityMatrix4& rho, const ChannelKind& kind,
                               Side side, double tol) {
  const ChannelConfig config{kind, side};
  const StateClass cls = classify(rho, tol);
  if (cls == StateClass::Incoherent) return {true, FrozenReason::IncoherentInput, config};

  const bool ad = kind.type() == ChannelType::AmplitudeDamping;
  switch (side) {
    case Side::Left:
      if (cls != StateClass::IncoherentCoherent)
        return {false, FrozenReason::SubsystemCoherent, config};
      // Amplitude damping pours the |1> block of subsystem one into the |0>
      // block, adding a34 onto a12.
      if (ad && !same_argument(rho(0, 1), rho(2, 3), tol))
        return {false, FrozenReason::ArgumentMismatch, config};
      return {true, FrozenReason::Frozen, config};
    case Side::Right:
      if (cls != StateClass::CoherentIncoherent)
        return {false, FrozenReason::SubsystemCoherent, config};
      if (ad && !same_argument(rho(0, 2), rho(1, 3), tol))
        return {false, FrozenReason::ArgumentMismatch, config};
      return {true, FrozenReason::Frozen, config};
    case Side::Both:
      break;
  }
  return {false, FrozenReason::SubsystemCoherent, config};
}

}  // namespace damplab
