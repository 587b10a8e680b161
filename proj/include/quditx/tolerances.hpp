#pragma once

namespace quditx {

// Absolute tolerances. The algebra is exact; these absorb round-off only.
inline constexpr double kHermTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kEntropyTolerance = 1e-12;
// Margin for the strict "> 1" negativity test and "> 0" concurrence test.
inline constexpr double kEntanglementTolerance = 1e-12;

}  // namespace quditx
