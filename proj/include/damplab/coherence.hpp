#ifndef DAMPLAB_COHERENCE_HPP
#define DAMPLAB_COHERENCE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "damplab/channels.hpp"
#include "damplab/qmat.hpp"
#include "damplab/structure.hpp"

namespace damplab {

/// l1-norm coherence: sum of moduli of all off-diagonal entries.
template <std::size_t N>
double l1_coherence(const Matrix<N>& m) {
  double c = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) c += std::abs(m(i, j));
  return c;
}

inline double l1_coherence(const DensityMatrix4& rho) { return l1_coherence(rho.matrix()); }

/// Every diagonal entry and every off-diagonal modulus equals 1/N within tol.
template <std::size_t N>
bool is_maximally_coherent(const Matrix<N>& m, double tol = kTolStruct) {
  const double target = 1.0 / static_cast<double>(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const double v = i == j ? std::abs(m(i, i) - target) : std::abs(std::abs(m(i, j)) - target);
      if (v > tol) return false;
    }
  }
  return true;
}

/// Coherence after n amplitude-damping uses on `side`, evaluated directly from
/// the input entries. Never forms the evolved matrix, so it is an independent
/// route from l1_coherence(apply_n(...)).
double analytic_coherence_ad(const DensityMatrix4& rho, double gamma, Side side,
                             std::size_t n);

/// n -> infinity limit of analytic_coherence_ad for fixed gamma:
/// Left 2|a12 + a34|, Right 2|a13 + a24|, Both 0. gamma = 0 returns the input
/// coherence.
double asymptotic_coherence_ad(const DensityMatrix4& rho, Side side, double gamma);

struct TrajectoryPoint {
  std::size_t n;
  double c;
};

struct CoherenceReport {
  double c_in = 0.0;
  std::vector<TrajectoryPoint> trajectory;
  std::optional<double> c_analytic;  ///< amplitude damping only
  std::optional<double> c_limit;     ///< amplitude damping only
  FrozenVerdict frozen;
};

/// Runs the iterative evolution for steps 0..spec.n and collects the closed
/// form values and the structural frozen verdict alongside it.
CoherenceReport build_report(const DensityMatrix4& rho, const ChannelSpec& spec);

}  // namespace damplab

#endif  // DAMPLAB_COHERENCE_HPP
