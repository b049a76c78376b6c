// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace risbeam {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

} // namespace risbeam
