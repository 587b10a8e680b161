#include "quditx/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quditx/error.hpp"

namespace quditx {

namespace {

// Eigenvalues of [[d_hi, off], [conj(off), d_lo]].
std::pair<double, double> block_eigenvalues(double d_hi, double d_lo,
                                            double off_norm_sq) {
  const double mean = d_hi + d_lo;
  const double diff = d_hi - d_lo;
  const double root = std::sqrt(diff * diff + 4.0 * off_norm_sq);
  return {0.5 * (mean + root), 0.5 * (mean - root)};
}

Spectrum two_block_spectrum(double d1, double d2, double d3, double d4,
                            Complex outer, Complex inner) {
  const auto [o_plus, o_minus] = block_eigenvalues(d1, d4, std::norm(outer));
  const auto [i_plus, i_minus] = block_eigenvalues(d2, d3, std::norm(inner));
  return make_spectrum({o_plus, o_minus, i_plus, i_minus},
                       Provenance::ClosedForm);
}

}  // namespace

Spectrum xstate_spectrum(const XState& x) {
  return two_block_spectrum(x.d1, x.d2, x.d3, x.d4, x.a, x.c);
}

QubitState2 reduce_first(const XState& x) {
  return QubitState2{x.d1 + x.d2, x.d3 + x.d4, Complex{}};
}

QubitState2 reduce_second(const XState& x) {
  return QubitState2{x.d1 + x.d3, x.d2 + x.d4, Complex{}};
}

double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

EntropyReport entropy_report(const XState& x) {
  const QubitState2 r1 = reduce_first(x);
  const QubitState2 r2 = reduce_second(x);
  const std::array<double, 2> p1 = {r1.p_up, r1.p_down};
  const std::array<double, 2> p2 = {r2.p_up, r2.p_down};
  const Spectrum spec = xstate_spectrum(x);

  EntropyReport r;
  r.s1 = shannon_entropy(p1);
  r.s2 = shannon_entropy(p2);
  r.s12 = shannon_entropy(spec.values);
  r.info = r.s1 + r.s2 - r.s12;
  return r;
}

XState partial_transpose(const XState& x) {
  return XState{x.d1, x.d2, x.d3, x.d4, x.c, x.a};
}

Spectrum ppt_spectrum(const XState& x) {
  return two_block_spectrum(x.d1, x.d2, x.d3, x.d4, x.c, x.a);
}

const char* to_string(DominanceCondition c) noexcept {
  switch (c) {
    case DominanceCondition::CornerDominant:
      return "corner-dominant";
    case DominanceCondition::InnerDominant:
      return "inner-dominant";
    case DominanceCondition::None:
      break;
  }
  return "none";
}

double negativity_parameter(const Spectrum& ppt) {
  double sum = 0.0;
  for (double v : ppt.values) sum += std::abs(v);
  return sum;
}

EntanglementReport entanglement_report(const XState& x) {
  EntanglementReport r;
  r.ppt_spectrum = ppt_spectrum(x);
  r.negativity_parameter = negativity_parameter(r.ppt_spectrum);
  r.standard_negativity =
      std::max(0.0, 0.5 * (r.negativity_parameter - 1.0));
  r.concurrence = concurrence_closed(x);
  r.entangled = r.negativity_parameter > 1.0 + kEntanglementTolerance;
  if (x.d2 * x.d3 < std::norm(x.a)) {
    r.active_condition = DominanceCondition::CornerDominant;
  } else if (x.d1 * x.d4 < std::norm(x.c)) {
    r.active_condition = DominanceCondition::InnerDominant;
  }
  return r;
}

XState spin_flip(const XState& x) {
  return XState{x.d4, x.d3, x.d2, x.d1, x.a, x.c};
}

Matrix4 spin_flip_unitary() {
  Matrix4 s{};
  s[0][3] = -1.0;
  s[1][2] = 1.0;
  s[2][1] = 1.0;
  s[3][0] = -1.0;
  return s;
}

Matrix4 concurrence_product_matrix(const XState& x) {
  return mat_mul(to_matrix(x).raw(), to_matrix(spin_flip(x)).raw());
}

Spectrum concurrence_product_spectrum(const XState& x) {
  const double outer_geo = std::sqrt(x.d1 * x.d4);
  const double inner_geo = std::sqrt(x.d2 * x.d3);
  const double a = std::abs(x.a);
  const double c = std::abs(x.c);
  const auto sq = [](double v) { return v * v; };
  return make_spectrum({sq(a - outer_geo), sq(a + outer_geo),
                        sq(c - inner_geo), sq(c + inner_geo)},
                       Provenance::ClosedForm);
}

double concurrence_spectrum_route(const XState& x) {
  const Spectrum product = concurrence_product_spectrum(x);
  std::array<double, 4> roots{};
  std::transform(product.values.begin(), product.values.end(), roots.begin(),
                 [](double v) { return std::sqrt(std::max(0.0, v)); });
  std::sort(roots.begin(), roots.end(), std::greater<>{});
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double concurrence_closed(const XState& x) {
  const double inner_term = 2.0 * std::abs(x.c) - 2.0 * std::sqrt(x.d1 * x.d4);
  const double outer_term = 2.0 * std::abs(x.a) - 2.0 * std::sqrt(x.d2 * x.d3);
  return std::max({0.0, inner_term, outer_term});
}

namespace {

void check_q_inputs(const std::array<double, 4>& probs, double q) {
  if (!std::isfinite(q) || q <= 0.0 || q == 1.0) {
    std::ostringstream msg;
    msg << "q-entropy order must be positive and different from 1, got " << q;
    throw Error(ErrorKind::BadParameter, msg.str());
  }
  double total = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < -kTraceTolerance)
      throw Error(ErrorKind::NotDistribution,
                  "probability entries must be finite and nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > kTraceTolerance)
    throw Error(ErrorKind::NotDistribution, "probabilities do not sum to 1");
}

double power_sum(const std::array<double, 4>& probs, double q) {
  double sum = 0.0;
  for (double p : probs)
    if (p > 0.0) sum += std::pow(p, q);
  return sum;
}

}  // namespace

double tsallis_entropy(const std::array<double, 4>& probs, double q) {
  check_q_inputs(probs, q);
  return (power_sum(probs, q) - 1.0) / (1.0 - q);
}

double renyi_entropy(const std::array<double, 4>& probs, double q) {
  check_q_inputs(probs, q);
  return std::log(power_sum(probs, q)) / (1.0 - q);
}

}  // namespace quditx
