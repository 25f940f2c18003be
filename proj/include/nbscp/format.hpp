#pragma once

#include <cstdio>
#include <string>

namespace nbscp {

// 17 significant digits: lossless round trip for doubles (model documents).
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// 12 significant digits: result documents and CSV cells.
inline std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace nbscp
