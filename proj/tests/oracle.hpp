#ifndef DAMPLAB_TESTS_ORACLE_HPP
#define DAMPLAB_TESTS_ORACLE_HPP
//
// Test-only reference computations. Deliberately share no code with the
// library: plain nested vectors, textbook loops, and the Kraus-string
// expansion sum over all index words instead of step-by-step iteration.
//

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n, C{})); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat dagger(const Mat& a) {
  const std::size_t n = a.size();
  Mat out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j][i] = std::conj(a[i][j]);
  return out;
}

inline Mat add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += b[i][j];
  return out;
}

// Kronecker product, first factor = first subsystem.
inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.size(), nb = b.size();
  Mat out = zeros(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

inline Mat ad_e0(double g) { return {{1.0, 0.0}, {0.0, std::sqrt(1.0 - g)}}; }
inline Mat ad_e1(double g) { return {{0.0, std::sqrt(g)}, {0.0, 0.0}}; }

// E_{i1} E_{i2} ... E_{in} for the index word encoded in the low n bits.
inline Mat word(unsigned bits, std::size_t n, double g) {
  Mat w = eye(2);
  for (std::size_t k = 0; k < n; ++k) w = mul(w, ((bits >> k) & 1u) ? ad_e1(g) : ad_e0(g));
  return w;
}

enum class Where { Left, Right, Both };

// n-fold amplitude damping as the sum over all 2^n (or 4^n for both sides)
// Kraus words, applied to rho in one shot.
inline Mat brute_force_ad(const Mat& rho, double g, Where where, std::size_t n) {
  const unsigned words = 1u << n;
  Mat out = zeros(4);
  if (where == Where::Both) {
    for (unsigned a = 0; a < words; ++a)
      for (unsigned b = 0; b < words; ++b) {
        const Mat k = kron(word(a, n, g), word(b, n, g));
        out = add(out, mul(mul(k, rho), dagger(k)));
      }
    return out;
  }
  for (unsigned a = 0; a < words; ++a) {
    const Mat k = where == Where::Left ? kron(word(a, n, g), eye(2)) : kron(eye(2), word(a, n, g));
    out = add(out, mul(mul(k, rho), dagger(k)));
  }
  return out;
}

inline double l1(const Mat& m) {
  double c = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) c += std::abs(m[i][j]);
  return c;
}

// Projector |v><v|.
inline Mat projector(const std::vector<C>& v) {
  Mat m = zeros(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = v[i] * std::conj(v[j]);
  return m;
}

inline Mat scale(const Mat& a, C s) {
  Mat out = a;
  for (auto& row : out)
    for (auto& v : row) v *= s;
  return out;
}

}  // namespace oracle

#endif  // DAMPLAB_TESTS_ORACLE_HPP
