#pragma once

#include <cmath>

namespace relaysec::cli {

// The core stores watts; dBm appears only at this boundary.
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 30.0 + 10.0 * std::log10(watts); }

}  // namespace relaysec::cli
