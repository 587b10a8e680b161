#pragma once

#include <array>
#include <random>
#include <string>
#include <utility>

#include "quditx/linalg.hpp"
#include "quditx/tolerances.hpp"

namespace quditx {

// A half-integer spin projection stored as 2m so that +-1/2 and +-3/2 stay
// exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return twice_ / 2.0; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

std::string to_string(HalfInt m);

using QubitPair = std::pair<HalfInt, HalfInt>;

// Basis labelling. Index i in 1..4 corresponds to the qudit vector |3/2, m>
// with m = 3/2, 1/2, -1/2, -3/2 and to the two-qubit vector |m1 m2> with
// (m1, m2) = (1/2,1/2), (1/2,-1/2), (-1/2,1/2), (-1/2,-1/2).
struct IndexMap {
  static HalfInt qudit_label(int index);
  static int qudit_index(HalfInt m);
  static QubitPair pair_label(int index);
  static int pair_index(const QubitPair& pair);
};

// General 4x4 density-matrix candidate. Element access is 1-based so that
// at(1, 4) is rho_14.
class DensityMatrix4 {
 public:
  DensityMatrix4() = default;
  explicit DensityMatrix4(const Matrix4& entries) : entries_(entries) {}

  Complex at(int row, int col) const;
  void set(int row, int col, Complex value);

  const Matrix4& raw() const noexcept { return entries_; }

  friend bool operator==(const DensityMatrix4&, const DensityMatrix4&) =
      default;

 private:
  Matrix4 entries_{};
};

// The six free parameters of the X-form: real diagonals rho_11..rho_44, the
// corner element a = rho_14 and the inner element c = rho_23. Conjugate
// entries are derived in to_matrix and never stored.
//
// A plain value: new_xstate() is the validating constructor. Some operations
// (partial_transpose) legitimately produce X-form matrices that are not
// positive, so the type itself does not enforce positivity.
struct XState {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
  Complex a{};
  Complex c{};

  std::array<double, 4> diagonal() const noexcept { return {d1, d2, d3, d4}; }

  friend bool operator==(const XState&, const XState&) = default;
};

// Diagonal qubit reduction; off stays zero for reductions of X-states.
struct QubitState2 {
  double p_up = 0.0;
  double p_down = 0.0;
  Complex off{};

  friend bool operator==(const QubitState2&, const QubitState2&) = default;
};

// Throws Error{NonFinite, NegativeDiagonal, TraceNotOne} or
// BlockPositivityError when the parameters do not describe a density matrix.
XState new_xstate(double d1, double d2, double d3, double d4, Complex a,
                  Complex c);

// Re-runs the new_xstate checks on an existing parameter set.
void check_xstate(const XState& x);

DensityMatrix4 to_matrix(const XState& x);

// Throws Error{InvalidDensityMatrix} when validate(m) fails and
// NotXShapedError listing every entry outside the X pattern with modulus
// above tol.
XState from_matrix(const DensityMatrix4& m, double tol);

struct SpinOperators {
  Matrix4 jz;       // diag(3/2, 1/2, -1/2, -3/2)
  Matrix4 two_jz1;  // sigma_z (x) 1
  Matrix4 two_jz2;  // 1 (x) sigma_z
};

SpinOperators spin_operators();

struct ValidationReport {
  bool hermitian = false;
  double hermiticity_residual = 0.0;
  bool unit_trace = false;
  double trace_residual = 0.0;
  bool positive = false;
  // Smallest oracle eigenvalue of the Hermitian part (m + m^dagger)/2.
  double min_eigenvalue = 0.0;

  bool ok() const noexcept { return hermitian && unit_trace && positive; }
};

ValidationReport validate(const DensityMatrix4& m);

// Valid-by-construction sample: flat simplex diagonal, |a| and |c| uniform up
// to their block bounds, uniform phases.
XState random_xstate(std::mt19937_64& rng);

// Flat (Dirichlet(1,1,1,1)) sample of the probability simplex.
std::array<double, 4> random_simplex_point(std::mt19937_64& rng);

}  // namespace quditx
