#ifndef DAMPLAB_CHANNELS_HPP
#define DAMPLAB_CHANNELS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "damplab/qmat.hpp"

namespace damplab {

enum class ChannelType { AmplitudeDamping, PhaseDamping };

/// A damping channel and its strength: gamma for amplitude damping, lambda for
/// phase damping. The parameter is checked to lie in [0, 1] on construction.
class ChannelKind {
 public:
  static ChannelKind amplitude_damping(double gamma);
  static ChannelKind phase_damping(double lambda);

  ChannelType type() const noexcept { return type_; }
  double param() const noexcept { return param_; }

  friend bool operator==(const ChannelKind&, const ChannelKind&) = default;

 private:
  ChannelKind(ChannelType type, double param) : type_(type), param_(param) {}

  ChannelType type_;
  double param_;
};

/// Which subsystem(s) the channel acts on.
enum class Side { Left, Right, Both };

struct ChannelSpec {
  ChannelKind kind;
  Side side;
  std::size_t n = 0;  ///< repetition count
};

struct KrausPair {
  QubitOperator k0;
  QubitOperator k1;
};

/// Time parametrisations of gamma for two physical damping processes.
struct GammaSchedule {
  enum class Model {
    SpontaneousEmission,  ///< gamma = 1 - exp(-2 Gamma t), rate = Gamma
    OscillatorCoupling,   ///< gamma = 1 - cos^2(chi t),     rate = chi
  };
  Model model;
  double rate;
  double t;
};

std::string_view to_string(ChannelType type) noexcept;  // "ad" | "pd"
std::string_view to_string(Side side) noexcept;         // "left" | "right" | "both"
ChannelType parse_channel_type(std::string_view text);
Side parse_side(std::string_view text);

/// (E0, E1) for amplitude damping, (K0, K1) for phase damping.
KrausPair kraus_ops(const ChannelKind& kind);

/// Four-dimensional Kraus set for one application on `side` (Left: K (x) I,
/// Right: I (x) K). Side::Both is not a single tensor-factor set; callers step
/// it as left followed by right.
std::vector<Matrix4> lifted_kraus_ops(const ChannelKind& kind, Side side);

/// One channel use on the given side(s).
DensityMatrix4 apply_once(const DensityMatrix4& rho, const ChannelKind& kind, Side side);

/// Iterates apply_once spec.n times.
DensityMatrix4 apply_n(const DensityMatrix4& rho, const ChannelSpec& spec);

/// States after 0, 1, ..., spec.n channel uses (size spec.n + 1).
std::vector<DensityMatrix4> evolve_trajectory(const DensityMatrix4& rho,
                                              const ChannelSpec& spec);

/// Amplitude-damping output after n uses, assembled entry by entry from the
/// closed-form expressions in the input entries without iterating.
DensityMatrix4 closed_form_ad(const DensityMatrix4& rho, double gamma, Side side,
                              std::size_t n);

double gamma_from_time(const GammaSchedule& schedule);

}  // namespace damplab

#endif  // DAMPLAB_CHANNELS_HPP
