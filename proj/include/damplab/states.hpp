#ifndef DAMPLAB_STATES_HPP
#define DAMPLAB_STATES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "damplab/qmat.hpp"

namespace damplab {

/// (1/2) [[1, e^{i theta}], [e^{-i theta}, 1]], a rank-one projector.
/// theta = 0 gives |+><+|, theta = pi gives |-><-|.
QubitOperator max_coherent_qubit(double theta);

namespace family {

/// (p0 |0><0| + p1 |1><1|) (x) |+><+|
struct M1 { double p0; };
/// p0 |0><0| (x) |+><+| + p1 |1><1| (x) |-><-|
struct M2 { double p0; };
/// p0 |0><0| (x) |+><+| + p1 |1><1| (x) |r><r|,  |r> = (|0> + i|1>)/sqrt(2)
struct M3 { double p0; };
/// p0 |0><0| (x) rho0 + p1 |1><1| (x) rho1
struct IncoCo { double p0; QubitOperator rho0; QubitOperator rho1; };
/// p0 rho0 (x) |0><0| + p1 rho1 (x) |1><1|
struct CoInco { double p0; QubitOperator rho0; QubitOperator rho1; };
/// (|00> + |11>)/sqrt(2)
struct BellPhiPlus {};
/// Maximally incoherent-coherent state: IncoCo with both parts
/// max_coherent_qubit(theta0), max_coherent_qubit(theta1).
struct MaxCoherentQubitPair { double p0; double theta0; double theta1; };

}  // namespace family

using NamedFamily =
    std::variant<family::M1, family::M2, family::M3, family::IncoCo, family::CoInco,
                 family::BellPhiPlus, family::MaxCoherentQubitPair>;

/// Throws ParamOutOfRange for p0 outside [0, 1] and InvalidState when a
/// supplied qubit part is not a density matrix.
DensityMatrix4 build_named(const NamedFamily& f);

/// Parses {"matrix": [[[re, im] x4] x4]} and validates the result.
DensityMatrix4 from_json(std::string_view text, double tol_struct = kTolStruct);
std::string to_json(const Matrix4& m);

/// Parameters that accompany a CLI state id.
struct StateParams {
  double p0 = 0.5;
  double theta0 = 0.0;
  double theta1 = 0.0;
};

/// Resolves m1 | m2 | m3 | bell | incoco | coinco | file:<path>. The incoco and
/// coinco ids build the maximally coherent parts from theta0 and theta1.
DensityMatrix4 resolve_state(std::string_view id, const StateParams& params = {});

/// Seeded generator: std::mt19937_64 for the bit stream, 53-bit uniforms and
/// Box-Muller normals derived by hand so samples do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  ///< [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();   ///< standard Gaussian

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// G G^dagger / tr(G G^dagger) for a 4x4 matrix G of standard complex Gaussians.
DensityMatrix4 random_density(std::uint64_t seed);

/// Random incoherent-coherent state p0 |0><0| (x) rho0 + p1 |1><1| (x) rho1.
/// With same_argument the off-diagonals of rho0 and rho1 share one phase;
/// otherwise their phases differ by at least 0.3 rad (mod 2 pi).
DensityMatrix4 random_incoherent_coherent(std::uint64_t seed, bool same_argument);
/// Mirror image of random_incoherent_coherent under swapping the subsystems.
DensityMatrix4 random_coherent_incoherent(std::uint64_t seed, bool same_argument);
/// Random diagonal state.
DensityMatrix4 random_incoherent(std::uint64_t seed);
/// Random maximally incoherent-coherent state (random p0, theta0, theta1).
DensityMatrix4 random_max_incoherent_coherent(std::uint64_t seed);

}  // namespace damplab

#endif  // DAMPLAB_STATES_HPP
