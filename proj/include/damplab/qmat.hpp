#ifndef DAMPLAB_QMAT_HPP
#define DAMPLAB_QMAT_HPP
//
// Fixed-size complex linear algebra for single-qubit (2x2) and two-qubit
// (4x4) operators.
//
// Basis ordering for 4x4 matrices is |00>, |01>, |10>, |11>, with the first
// tensor factor belonging to the first subsystem. Index k therefore encodes
// (first, second) = (k / 2, k % 2). Every module relies on this ordering.
//

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace damplab {

using Complex = std::complex<double>;

/// Default tolerance for accepting user supplied or evolved density matrices.
inline constexpr double kTolStruct = 1e-9;
/// Default tolerance for comparing two arithmetic routes to the same quantity.
inline constexpr double kTolOracle = 1e-12;

template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr Matrix() = default;

  /// Row-major construction, e.g. Matrix<2>{{1, 0, 0, 1}}.
  constexpr explicit Matrix(const std::array<Complex, N * N>& entries)
      : m_(entries) {}

  static constexpr Matrix identity() {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i) out(i, i) = 1.0;
    return out;
  }

  static constexpr Matrix diagonal(const std::array<Complex, N>& d) {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i) out(i, i) = d[i];
    return out;
  }

  constexpr Complex& operator()(std::size_t row, std::size_t col) {
    return m_[row * N + col];
  }
  constexpr const Complex& operator()(std::size_t row, std::size_t col) const {
    return m_[row * N + col];
  }

  std::span<const Complex, N * N> entries() const { return m_; }

  Matrix adjoint() const {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) m_[k] += rhs.m_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) m_[k] -= rhs.m_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& v : m_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, Complex s) { return lhs *= s; }
  friend Matrix operator*(Complex s, Matrix rhs) { return rhs *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<Complex, N * N> m_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

/// Single-qubit operator: Kraus operators and single-qubit states.
using QubitOperator = Matrix2;

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

/// Largest entrywise |m_ij - conj(m_ji)|.
template <std::size_t N>
double hermiticity_residual(const Matrix<N>& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

bool is_finite(const Matrix4& m);

/// Kronecker product; `a` acts on the first subsystem.
Matrix4 tensor(const Matrix2& a, const Matrix2& b);

/// Eigenvalues (ascending) of the Hermitian part (m + m^dagger) / 2, computed
/// with cyclic complex Jacobi rotations.
std::array<double, 4> hermitian_eigenvalues(const Matrix4& m);

/// A 4x4 matrix known to be Hermitian, unit trace and positive semidefinite
/// within the tolerance it was validated against. Only obtainable through
/// validate_density (or functions that call it).
class DensityMatrix4 {
 public:
  const Matrix4& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return m_(row, col);
  }

  friend bool operator==(const DensityMatrix4&, const DensityMatrix4&) = default;

 private:
  explicit DensityMatrix4(const Matrix4& m) : m_(m) {}
  friend DensityMatrix4 validate_density(const Matrix4& m, double tol_struct);

  Matrix4 m_;
};

/// Throws Error{NotHermitian | NotUnitTrace | NotPositive} naming the measured
/// residual, or Error{InvalidState} for non-finite entries.
DensityMatrix4 validate_density(const Matrix4& m, double tol_struct = kTolStruct);

/// Returns sum_i K_i rho K_i^dagger. The operator set must satisfy
/// sum_i K_i^dagger K_i = I within tol_struct (NonTracePreserving otherwise);
/// an output that fails revalidation raises InvalidState.
DensityMatrix4 apply_kraus(const DensityMatrix4& rho, std::span<const Matrix4> ops,
                           double tol_struct = kTolStruct);

}  // namespace damplab

#endif  // DAMPLAB_QMAT_HPP
