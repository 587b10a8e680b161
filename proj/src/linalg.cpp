#include "quditx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "quditx/tolerances.hpp"
#include "quditx/error.hpp"

namespace quditx {

Matrix4 zero_matrix() { return Matrix4{}; }

Matrix4 identity_matrix() {
  return diagonal_matrix({1.0, 1.0, 1.0, 1.0});
}

Matrix4 diagonal_matrix(const std::array<double, 4>& diag) {
  Matrix4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = diag[i];
  return m;
}

Matrix4 mat_mul(const Matrix4& lhs, const Matrix4& rhs) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      if (lhs[i][k] == Complex{}) continue;
      for (int j = 0; j < 4; ++j) out[i][j] += lhs[i][k] * rhs[k][j];
    }
  }
  return out;
}

Matrix4 adjoint(const Matrix4& m) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = std::conj(m[j][i]);
  return out;
}

Matrix4 conjugate(const Matrix4& m) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = std::conj(m[i][j]);
  return out;
}

namespace {

Matrix4 elementwise(const Matrix4& lhs, const Matrix4& rhs,
                    const std::function<Complex(Complex, Complex)>& op) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = op(lhs[i][j], rhs[i][j]);
  return out;
}

}  // namespace

Matrix4 operator+(const Matrix4& lhs, const Matrix4& rhs) {
  return elementwise(lhs, rhs, std::plus<Complex>{});
}

Matrix4 operator-(const Matrix4& lhs, const Matrix4& rhs) {
  return elementwise(lhs, rhs, std::minus<Complex>{});
}

Matrix4 operator*(double scale, const Matrix4& m) {
  Matrix4 out = m;
  for (auto& row : out)
    for (auto& v : row) v *= scale;
  return out;
}

Matrix4 commutator(const Matrix4& lhs, const Matrix4& rhs) {
  return mat_mul(lhs, rhs) - mat_mul(rhs, lhs);
}

Complex trace(const Matrix4& m) {
  return m[0][0] + m[1][1] + m[2][2] + m[3][3];
}

double hermiticity_residual(const Matrix4& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      worst = std::max(worst, std::abs(m[i][j] - std::conj(m[j][i])));
  return worst;
}

double max_abs_diff(const Matrix4& lhs, const Matrix4& rhs) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(lhs[i][j] - rhs[i][j]));
  return worst;
}

const char* to_string(Provenance p) noexcept {
  return p == Provenance::ClosedForm ? "closed-form" : "oracle";
}

double Spectrum::sum() const noexcept {
  return values[0] + values[1] + values[2] + values[3];
}

Spectrum make_spectrum(std::array<double, 4> values, Provenance provenance) {
  std::sort(values.begin(), values.end(), std::greater<>{});
  return Spectrum{values, provenance};
}

double max_abs_diff(const Spectrum& lhs, const Spectrum& rhs) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    worst = std::max(worst, std::abs(lhs.values[i] - rhs.values[i]));
  return worst;
}

namespace {

double off_diagonal_norm(const Matrix4& a) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) sum += std::norm(a[i][j]);
  return std::sqrt(sum);
}

double frobenius_norm(const Matrix4& a) {
  double sum = 0.0;
  for (const auto& row : a)
    for (const auto& v : row) sum += std::norm(v);
  return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary V = diag-phase * real rotation, so that
// a <- V^dagger a V. Only rows and columns p, q change.
void rotate(Matrix4& a, int p, int q) {
  const Complex h = a[p][q];
  const double mag = std::abs(h);
  if (mag == 0.0) return;
  const Complex phase = h / mag;  // e^{i phi}

  const double app = a[p][p].real();
  const double aqq = a[q][q].real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;

  // Columns of V: v_p = c e_p - s e^{-i phi} e_q, v_q = s e_p + c e^{-i phi} e_q.
  const Complex vpp = c;
  const Complex vqp = -s * std::conj(phase);
  const Complex vpq = s;
  const Complex vqq = c * std::conj(phase);

  // a <- a V (columns p, q)
  for (int k = 0; k < 4; ++k) {
    const Complex akp = a[k][p];
    const Complex akq = a[k][q];
    a[k][p] = akp * vpp + akq * vqp;
    a[k][q] = akp * vpq + akq * vqq;
  }
  // a <- V^dagger a (rows p, q)
  for (int k = 0; k < 4; ++k) {
    const Complex apk = a[p][k];
    const Complex aqk = a[q][k];
    a[p][k] = std::conj(vpp) * apk + std::conj(vqp) * aqk;
    a[q][k] = std::conj(vpq) * apk + std::conj(vqq) * aqk;
  }
  a[p][q] = 0.0;
  a[q][p] = 0.0;
  a[p][p] = a[p][p].real();
  a[q][q] = a[q][q].real();
}

}  // namespace

Spectrum hermitian_eigenvalues(const Matrix4& m, JacobiStats* stats) {
  const double residual = hermiticity_residual(m);
  if (!(residual <= kHermTolerance)) {
    throw Error(ErrorKind::NotHermitian,
                "matrix is not Hermitian (residual " +
                    std::to_string(residual) + ")");
  }

  Matrix4 a = 0.5 * (m + adjoint(m));
  const double threshold = kJacobiTolerance * std::max(1.0, frobenius_norm(a));

  JacobiStats local;
  local.off_norm = off_diagonal_norm(a);
  while (local.off_norm > threshold) {
    if (local.sweeps == kJacobiMaxSweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi iteration did not converge after " +
                      std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a[p][q] != Complex{}) {
          rotate(a, p, q);
          ++local.rotations;
        }
      }
    }
    ++local.sweeps;
    local.off_norm = off_diagonal_norm(a);
  }
  if (stats != nullptr) *stats = local;

  return make_spectrum({a[0][0].real(), a[1][1].real(), a[2][2].real(),
                        a[3][3].real()},
                       Provenance::Oracle);
}

}  // namespace quditx
