#pragma once

// The two-parameter Werner family
//
//          [ (1+p)/4     0        0      p/2   ]
//   W(p,b) [    0     (1-p)/4     b       0    ]
//          [    0        b     (1-p)/4    0    ]
//          [   p/2       0        0    (1+p)/4 ]
//
// with its validity regions, closed-form spectra, negativity and concurrence
// curves, and grid/sweep generators for plotting.

#include <optional>
#include <variant>
#include <vector>

#include "quditx/core.hpp"
#include "quditx/measures.hpp"

namespace quditx {

inline constexpr double kWernerPMin = -1.0 / 3.0;
inline constexpr double kWernerPMax = 1.0;
inline constexpr double kRegionBMin = -0.5;
inline constexpr double kRegionBMax = 0.5;

enum class WernerClass { Invalid = 0, Separable = 1, Entangled = 2 };

const char* to_string(WernerClass c) noexcept;

struct WernerPoint {
  double p = 0.0;
  double b = 0.0;
  bool state_valid = false;  // -1/3 <= p <= 1 and (1-p)/4 >= |b|
  bool ppt_valid = false;    // (1+p)/4 >= |b|
  WernerClass classification = WernerClass::Invalid;
};

// Invalid outside the intersection of both validity bands, Entangled when the
// negativity parameter exceeds 1 + kEntanglementTolerance, else Separable.
// Boundaries count as valid.
WernerPoint classify_point(double p, double b);

// Throws Error{OutOfRegion} unless the state is valid.
XState werner_state(double p, double b);

// {(1+3p)/4, (1-p)/4, (1-p)/4 - b, (1-p)/4 + b}
Spectrum werner_spectrum(double p, double b);
// {(1-3p)/4, (1+p)/4, (1+p)/4 - b, (1+p)/4 + b}
Spectrum werner_ppt_spectrum(double p, double b);

double werner_negativity(double p, double b);
double werner_concurrence(double p, double b);

// Row-major over p then b: p_steps x b_steps points spanning
// p in [-1/3, 1] and b in [-1/2, 1/2], endpoints included.
// Throws Error{BadGrid} when either count is below 2.
std::vector<WernerPoint> region_grid(int p_steps, int b_steps);

struct ConstB {
  double value = 0.0;
};

// b = (1 - p) / k
struct ScaledB {
  double k = 1.0;
};

using BRule = std::variant<ConstB, ScaledB>;

double evaluate(const BRule& rule, double p);

struct SweepRow {
  double p = 0.0;
  double b = 0.0;
  bool state_valid = false;
  bool ppt_valid = false;
  Spectrum spectrum;
  Spectrum ppt_spectrum;
  double negativity_parameter = 0.0;
  double standard_negativity = 0.0;
  double concurrence = 0.0;
  std::optional<EntropyReport> entropies;  // present only when state_valid
};

SweepRow sweep_row(double p, double b);

// Grid points start + i*step for i = 0..floor((stop - start)/step). When stop
// lies within half a step of the last point (and that point is not start),
// the last point is replaced by stop exactly. Throws Error{BadRule} for k <= 0 and
// Error{BadRange} for a nonpositive step, stop < start or non-finite input.
std::vector<double> sweep_grid(double start, double stop, double step);

std::vector<SweepRow> sweep(const BRule& rule, double p_start, double p_stop,
                            double p_step);

}  // namespace quditx
