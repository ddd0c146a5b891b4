#include "damplab/qmat.hpp"

#include <cstdio>
#include <string>

#include "damplab/error.hpp"

namespace damplab {

namespace {

std::string fmt_residual(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double off_diagonal_norm2(const Matrix4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

// One complex Jacobi rotation annihilating a(p, q) of a Hermitian matrix.
// With a(p, q) = r e^{i phi} the rotation is G = diag-phase * real-rotation:
//   G(p,p) = c, G(p,q) = s, G(q,p) = -s e^{-i phi}, G(q,q) = c e^{-i phi},
// and a <- G^dagger a G touches only rows and columns p, q.
void rotate(Matrix4& a, std::size_t p, std::size_t q) {
  const double r = std::abs(a(p, q));
  if (r == 0.0) return;
  const Complex phase = a(p, q) / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  for (std::size_t k = 0; k < 4; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

bool is_finite(const Matrix4& m) {
  for (const Complex& z : m.entries())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

Matrix4 tensor(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4& m) {
  Matrix4 a = (m + m.adjoint()) * 0.5;

  double scale = 0.0;
  for (const Complex& z : a.entries()) scale += std::norm(z);
  const double stop = scale * 1e-32;

  for (int sweep = 0; sweep < 64 && off_diagonal_norm2(a) > stop; ++sweep) {
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) rotate(a, p, q);
  }

  std::array<double, 4> ev{};
  for (std::size_t i = 0; i < 4; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

DensityMatrix4 validate_density(const Matrix4& m, double tol_struct) {
  if (!is_finite(m))
    throw Error(ErrorCode::InvalidState, "matrix contains non-finite entries");

  const double herm = hermiticity_residual(m);
  if (herm > tol_struct)
    throw Error(ErrorCode::NotHermitian,
                "max |a_ij - conj(a_ji)| = " + fmt_residual(herm) + " exceeds " +
                    fmt_residual(tol_struct));

  const double trace_dev = std::abs(m.trace() - 1.0);
  if (trace_dev > tol_struct)
    throw Error(ErrorCode::NotUnitTrace,
                "|tr - 1| = " + fmt_residual(trace_dev) + " exceeds " +
                    fmt_residual(tol_struct));

  const double min_ev = hermitian_eigenvalues(m)[0];
  if (min_ev < -tol_struct)
    throw Error(ErrorCode::NotPositive,
                "min eigenvalue " + fmt_residual(min_ev) + " below -" +
                    fmt_residual(tol_struct));

  return DensityMatrix4(m);
}

DensityMatrix4 apply_kraus(const DensityMatrix4& rho, std::span<const Matrix4> ops,
                           double tol_struct) {
  Matrix4 completeness;
  for (const Matrix4& k : ops) completeness += k.adjoint() * k;
  const double dev = max_abs_diff(completeness, Matrix4::identity());
  if (dev > tol_struct)
    throw Error(ErrorCode::NonTracePreserving,
                "max |sum K^dagger K - I| = " + fmt_residual(dev));

  Matrix4 out;
  for (const Matrix4& k : ops) out += k * rho.matrix() * k.adjoint();

  try {
    return validate_density(out, tol_struct);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidState, std::string("channel output rejected: ") + e.what());
  }
}

}  // namespace damplab
