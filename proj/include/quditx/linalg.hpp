#pragma once

// Fixed-size 4x4 complex matrix algebra plus a cyclic Jacobi eigensolver for
// Hermitian input. The eigensolver is the independent numerical check for
// every closed-form spectrum computed in measures.hpp and werner.hpp.

#include <array>
#include <complex>

namespace quditx {

using Complex = std::complex<double>;

// Row-major, 0-based storage. Code that exposes matrix elements to users goes
// through DensityMatrix4, which presents the 1-based rho_11..rho_44 view.
using Matrix4 = std::array<std::array<Complex, 4>, 4>;

inline constexpr double kJacobiTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

Matrix4 zero_matrix();
Matrix4 identity_matrix();
Matrix4 diagonal_matrix(const std::array<double, 4>& diag);

Matrix4 mat_mul(const Matrix4& lhs, const Matrix4& rhs);
Matrix4 adjoint(const Matrix4& m);
Matrix4 conjugate(const Matrix4& m);
Matrix4 operator+(const Matrix4& lhs, const Matrix4& rhs);
Matrix4 operator-(const Matrix4& lhs, const Matrix4& rhs);
Matrix4 operator*(double scale, const Matrix4& m);

// lhs*rhs - rhs*lhs
Matrix4 commutator(const Matrix4& lhs, const Matrix4& rhs);

Complex trace(const Matrix4& m);

// max_{i,j} |m_ij - conj(m_ji)|, which also covers imaginary diagonal parts.
double hermiticity_residual(const Matrix4& m);

// Largest entrywise modulus of lhs - rhs.
double max_abs_diff(const Matrix4& lhs, const Matrix4& rhs);

enum class Provenance { ClosedForm, Oracle };

const char* to_string(Provenance p) noexcept;

// Four real eigenvalues, always sorted descending.
struct Spectrum {
  std::array<double, 4> values{};
  Provenance provenance = Provenance::ClosedForm;

  double sum() const noexcept;
  double min() const noexcept { return values[3]; }
  double max() const noexcept { return values[0]; }
};

Spectrum make_spectrum(std::array<double, 4> values, Provenance provenance);

// Largest |lhs.values[i] - rhs.values[i]|.
double max_abs_diff(const Spectrum& lhs, const Spectrum& rhs);

struct JacobiStats {
  int sweeps = 0;
  int rotations = 0;
  double off_norm = 0.0;
};

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
// Throws Error{NotHermitian} when hermiticity_residual(m) > tau_herm, and
// Error{NoConvergence} if the off-diagonal Frobenius norm is still above
// kJacobiTolerance (relative to max(1, ||m||_F)) after kJacobiMaxSweeps.
Spectrum hermitian_eigenvalues(const Matrix4& m, JacobiStats* stats = nullptr);

}  // namespace quditx
