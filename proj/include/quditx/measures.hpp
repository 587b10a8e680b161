#pragma once

// Closed-form spectra, reductions, entropies, partial transpose, negativity
// and concurrence for X-states, plus classical Tsallis/Renyi q-entropies.
// All entropies are in nats.

#include <array>
#include <span>

#include "quditx/core.hpp"
#include "quditx/linalg.hpp"

namespace quditx {

// 1/2 (d1 + d4 +- sqrt((d1 - d4)^2 + 4|a|^2)) and the same for the inner
// block with d2, d3, c.
Spectrum xstate_spectrum(const XState& x);

QubitState2 reduce_first(const XState& x);   // diag(d1 + d2, d3 + d4)
QubitState2 reduce_second(const XState& x);  // diag(d1 + d3, d2 + d4)

// -sum p ln p with 0 ln 0 = 0. Nonpositive entries contribute nothing.
double shannon_entropy(std::span<const double> probs);

struct EntropyReport {
  double s1 = 0.0;
  double s2 = 0.0;
  double s12 = 0.0;
  double info = 0.0;  // s1 + s2 - s12
};

EntropyReport entropy_report(const XState& x);

// Partial transpose on the second qubit of the two-qubit reading. For the
// X-form this exchanges the corner and inner off-diagonal elements. The
// result is Hermitian with unit trace but need not be positive.
XState partial_transpose(const XState& x);

// Closed-form spectrum of partial_transpose(x).
Spectrum ppt_spectrum(const XState& x);

enum class DominanceCondition {
  None,
  CornerDominant,  // rho_22 rho_33 < |rho_14|^2
  InnerDominant,   // rho_11 rho_44 < |rho_23|^2
};

const char* to_string(DominanceCondition c) noexcept;

struct EntanglementReport {
  Spectrum ppt_spectrum;
  double negativity_parameter = 0.0;  // sum_i |lambda_i^ppt|
  double standard_negativity = 0.0;   // max(0, (parameter - 1) / 2)
  double concurrence = 0.0;
  bool entangled = false;  // parameter > 1 + kEntanglementTolerance
  DominanceCondition active_condition = DominanceCondition::None;
};

double negativity_parameter(const Spectrum& ppt);

EntanglementReport entanglement_report(const XState& x);

// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y) expressed on the X
// parameters: diagonals reversed, corner and inner elements kept in place.
XState spin_flip(const XState& x);

// sigma_y (x) sigma_y as a real 4x4 matrix.
Matrix4 spin_flip_unitary();

// rho * spin_flip(rho), whose eigenvalues define the concurrence.
Matrix4 concurrence_product_matrix(const XState& x);

// The four eigenvalues of concurrence_product_matrix in closed form:
// (|a| -+ sqrt(d1 d4))^2 and (|c| -+ sqrt(d2 d3))^2, sorted descending.
Spectrum concurrence_product_spectrum(const XState& x);

// max(0, r1 - r2 - r3 - r4) over the descending square roots of
// concurrence_product_spectrum.
double concurrence_spectrum_route(const XState& x);

// max(0, 2|c| - 2 sqrt(d1 d4), 2|a| - 2 sqrt(d2 d3)).
double concurrence_closed(const XState& x);

// Classical q-entropies of a probability 4-vector. Throw
// Error{BadParameter} unless q > 0, q != 1, and Error{NotDistribution} unless
// probs lies on the simplex within kTraceTolerance.
double tsallis_entropy(const std::array<double, 4>& probs, double q);
double renyi_entropy(const std::array<double, 4>& probs, double q);

}  // namespace quditx
