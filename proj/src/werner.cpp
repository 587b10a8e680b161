#include "quditx/werner.hpp"

#include <cmath>
#include <sstream>

#include "quditx/error.hpp"

namespace quditx {

const char* to_string(WernerClass c) noexcept {
  switch (c) {
    case WernerClass::Separable:
      return "separable";
    case WernerClass::Entangled:
      return "entangled";
    case WernerClass::Invalid:
      break;
  }
  return "invalid";
}

namespace {

bool p_in_range(double p) { return p >= kWernerPMin && p <= kWernerPMax; }

bool state_band(double p, double b) { return (1.0 - p) / 4.0 >= std::abs(b); }

bool ppt_band(double p, double b) { return (1.0 + p) / 4.0 >= std::abs(b); }

}  // namespace

WernerPoint classify_point(double p, double b) {
  WernerPoint pt;
  pt.p = p;
  pt.b = b;
  pt.state_valid = p_in_range(p) && state_band(p, b);
  pt.ppt_valid = ppt_band(p, b);
  if (!pt.state_valid || !pt.ppt_valid) {
    pt.classification = WernerClass::Invalid;
  } else if (werner_negativity(p, b) > 1.0 + kEntanglementTolerance) {
    pt.classification = WernerClass::Entangled;
  } else {
    pt.classification = WernerClass::Separable;
  }
  return pt;
}

XState werner_state(double p, double b) {
  if (!std::isfinite(p) || !std::isfinite(b) || !p_in_range(p) ||
      !state_band(p, b)) {
    std::ostringstream msg;
    msg << "(p, b) = (" << p << ", " << b
        << ") outside -1/3 <= p <= 1, (1-p)/4 >= |b|";
    throw Error(ErrorKind::OutOfRegion, msg.str());
  }
  const double outer = (1.0 + p) / 4.0;
  const double inner = (1.0 - p) / 4.0;
  return XState{outer, inner, inner, outer, Complex(p / 2.0), Complex(b)};
}

Spectrum werner_spectrum(double p, double b) {
  const double inner = (1.0 - p) / 4.0;
  return make_spectrum({(1.0 + 3.0 * p) / 4.0, inner, inner - b, inner + b},
                       Provenance::ClosedForm);
}

Spectrum werner_ppt_spectrum(double p, double b) {
  const double outer = (1.0 + p) / 4.0;
  return make_spectrum({(1.0 - 3.0 * p) / 4.0, outer, outer - b, outer + b},
                       Provenance::ClosedForm);
}

double werner_negativity(double p, double b) {
  const double outer = (1.0 + p) / 4.0;
  return std::abs((1.0 - 3.0 * p) / 4.0) + std::abs(outer) +
         std::abs(outer - b) + std::abs(outer + b);
}

double werner_concurrence(double p, double b) {
  return std::max({0.0, 2.0 * std::abs(b) - 2.0 * (1.0 + p) / 4.0,
                   2.0 * std::abs(p / 2.0) - 2.0 * (1.0 - p) / 4.0});
}

namespace {

double lerp_endpoint(double lo, double hi, int i, int steps) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
}

}  // namespace

std::vector<WernerPoint> region_grid(int p_steps, int b_steps) {
  if (p_steps < 2 || b_steps < 2) {
    throw Error(ErrorKind::BadGrid, "region grid needs at least 2 steps per axis");
  }
  std::vector<WernerPoint> grid;
  grid.reserve(static_cast<std::size_t>(p_steps) * b_steps);
  for (int i = 0; i < p_steps; ++i) {
    const double p = lerp_endpoint(kWernerPMin, kWernerPMax, i, p_steps);
    for (int j = 0; j < b_steps; ++j) {
      const double b = lerp_endpoint(kRegionBMin, kRegionBMax, j, b_steps);
      grid.push_back(classify_point(p, b));
    }
  }
  return grid;
}

double evaluate(const BRule& rule, double p) {
  struct Visitor {
    double p;
    double operator()(const ConstB& r) const { return r.value; }
    double operator()(const ScaledB& r) const { return (1.0 - p) / r.k; }
  };
  return std::visit(Visitor{p}, rule);
}

SweepRow sweep_row(double p, double b) {
  const WernerPoint pt = classify_point(p, b);
  SweepRow row;
  row.p = p;
  row.b = b;
  row.state_valid = pt.state_valid;
  row.ppt_valid = pt.ppt_valid;
  row.spectrum = werner_spectrum(p, b);
  row.ppt_spectrum = werner_ppt_spectrum(p, b);
  row.negativity_parameter = werner_negativity(p, b);
  row.standard_negativity =
      std::max(0.0, 0.5 * (row.negativity_parameter - 1.0));
  row.concurrence = werner_concurrence(p, b);
  if (row.state_valid) row.entropies = entropy_report(werner_state(p, b));
  return row;
}

std::vector<double> sweep_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
      step <= 0.0 || stop < start) {
    std::ostringstream msg;
    msg << "bad sweep range " << start << ":" << stop << ":" << step;
    throw Error(ErrorKind::BadRange, msg.str());
  }
  const double span = (stop - start) / step;
  if (span > 1e8) throw Error(ErrorKind::BadRange, "sweep has too many points");
  const auto n = static_cast<long long>(std::floor(span + 1e-9));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i <= n; ++i)
    grid.push_back(start + static_cast<double>(i) * step);
  if (n >= 1 && stop - grid.back() <= 0.5 * step) grid.back() = stop;
  return grid;
}

std::vector<SweepRow> sweep(const BRule& rule, double p_start, double p_stop,
                            double p_step) {
  if (const auto* scaled = std::get_if<ScaledB>(&rule)) {
    if (!(scaled->k > 0.0) || !std::isfinite(scaled->k)) {
      std::ostringstream msg;
      msg << "b rule scale must be positive, got " << scaled->k;
      throw Error(ErrorKind::BadRule, msg.str());
    }
  } else if (!std::isfinite(std::get<ConstB>(rule).value)) {
    throw Error(ErrorKind::BadRule, "constant b must be finite");
  }

  const std::vector<double> grid = sweep_grid(p_start, p_stop, p_step);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double p : grid) rows.push_back(sweep_row(p, evaluate(rule, p)));
  return rows;
}

}  // namespace quditx
