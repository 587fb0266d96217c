#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>

namespace dseidel {

using Json = nlohmann::ordered_json;

/// Reals go out with 12 significant digits so repeated runs print identical text.
/// Magnitudes below 1e-9 are written as 0.
inline double json_number(double v) {
  if (!std::isfinite(v)) return v;
  if (std::fabs(v) < 1e-9) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace dseidel
