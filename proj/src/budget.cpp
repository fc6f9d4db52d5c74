#include "mcclab/budget.hpp"

#include <cstdlib>
#include <string>

namespace mcclab {

std::uint64_t work_budget(std::uint64_t fallback) {
  const char* env = std::getenv("MCCLAB_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  return fallback;
}

} // namespace mcclab
