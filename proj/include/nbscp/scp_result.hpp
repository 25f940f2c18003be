#pragma once

#include <cstdint>

namespace nbscp {

enum class ScpMethod { exact, approx, hybrid, monte_carlo };

inline const char* to_string(ScpMethod m) {
  switch (m) {
    case ScpMethod::exact: return "exact";
    case ScpMethod::approx: return "approx";
    case ScpMethod::hybrid: return "hybrid";
    case ScpMethod::monte_carlo: return "monte_carlo";
  }
  return "?";
}

// Method parameters reported alongside a value; unused fields stay zero.
struct ScpMeta {
  std::size_t k = 0;
  bool shift = false;
  std::size_t hybrid_order = 0;
  long long trials = 0;
};

// Probability that the classification survives the noise, tagged with the
// method that produced it.
struct ScpResult {
  double value = 0.0;
  ScpMethod method = ScpMethod::exact;
  ScpMeta meta;
};

}  // namespace nbscp
