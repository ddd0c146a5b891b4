#ifndef DAMPLAB_STRUCTURE_HPP
#define DAMPLAB_STRUCTURE_HPP

#include <string_view>

#include "damplab/channels.hpp"
#include "damplab/qmat.hpp"

namespace damplab {

/// Coherence structure of a two-qubit state relative to the computational
/// basis. Incoherent is reported in preference to either one-sided class.
enum class StateClass {
  Incoherent,          ///< diagonal in both subsystems
  IncoherentCoherent,  ///< sum_i p_i |i><i| (x) rho_i
  CoherentIncoherent,  ///< sum_i p_i rho_i (x) |i><i|
  GeneralCoherent,
};

enum class FrozenReason {
  SubsystemCoherent,  ///< a damped subsystem carries coherence
  ArgumentMismatch,   ///< block entries that get mixed have different phases
  Frozen,
  IncoherentInput,    ///< frozen, but only because there is nothing to lose
};

struct ChannelConfig {
  ChannelKind kind;
  Side side;
};

/// Whether coherence stays exactly constant for every number of channel uses
/// and every nondegenerate channel parameter. The decision is structural, so
/// the trivial freezing at parameter 0 (identity channel) is not reported.
struct FrozenVerdict {
  bool frozen;
  FrozenReason reason;
  ChannelConfig channel_config;
};

inline constexpr double kTolArgument = 1e-9;

std::string_view to_string(StateClass c) noexcept;
std::string_view to_string(FrozenReason r) noexcept;

StateClass classify(const DensityMatrix4& rho, double tol = kTolStruct);

/// True when |z1 + k z2| = |z1| + k |z2| for every k >= 0: either value is
/// (numerically) zero, or both point in the same direction within tol radians.
bool same_argument(Complex z1, Complex z2, double tol = kTolArgument);

FrozenVerdict frozen_predicate(const DensityMatrix4& rho, const ChannelKind& kind,
                               Side side, double tol = kTolArgument);

}  // namespace damplab

#endif  // DAMPLAB_STRUCTURE_HPP
