#pragma once

#include <ostream>
#include <span>
#include <string>

#include "quditx/werner.hpp"

namespace quditx::cli {

inline constexpr const char* kSweepHeader =
    "p,b,state_valid,ppt_valid,lam1,lam2,lam3,lam4,lamppt1,lamppt2,lamppt3,"
    "lamppt4,neg_param,neg_std,concurrence,S1,S2,S12,I";
inline constexpr const char* kRegionHeader = "p,b,class";

// %.17g in the C locale.
std::string format_number(double v);

// Entropy columns are left empty on rows where the state is invalid.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_region_csv(std::ostream& out, std::span<const WernerPoint> points);

}  // namespace quditx::cli
