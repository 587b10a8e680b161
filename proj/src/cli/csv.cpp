#include "quditx/cli/csv.hpp"

#include <array>
#include <cstdio>

namespace quditx::cli {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 40> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

namespace {

const char* flag(bool v) { return v ? "1" : "0"; }

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_number(r.p) << ',' << format_number(r.b) << ','
        << flag(r.state_valid) << ',' << flag(r.ppt_valid);
    for (double v : r.spectrum.values) out << ',' << format_number(v);
    for (double v : r.ppt_spectrum.values) out << ',' << format_number(v);
    out << ',' << format_number(r.negativity_parameter) << ','
        << format_number(r.standard_negativity) << ','
        << format_number(r.concurrence);
    if (r.entropies) {
      out << ',' << format_number(r.entropies->s1) << ','
          << format_number(r.entropies->s2) << ','
          << format_number(r.entropies->s12) << ','
          << format_number(r.entropies->info);
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

void write_region_csv(std::ostream& out, std::span<const WernerPoint> points) {
  out << kRegionHeader << '\n';
  for (const WernerPoint& pt : points) {
    out << format_number(pt.p) << ',' << format_number(pt.b) << ','
        << static_cast<int>(pt.classification) << '\n';
  }
}

}  // namespace quditx::cli
