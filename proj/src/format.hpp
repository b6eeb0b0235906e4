#pragma once

#include <cstdio>
#include <string>

namespace rightsize::detail {

// Compact human-readable number, e.g. 2 -> "2", 0.5 -> "0.5".
inline std::string compact(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

// Fixed nine decimals, used for every cost written to CSV.
inline std::string fixed9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

}  // namespace rightsize::detail
