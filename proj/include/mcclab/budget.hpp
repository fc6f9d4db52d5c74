#pragma once

#include <cstdint>

namespace mcclab {

// Default limits on exhaustive searches. MCCLAB_BUDGET, when set to a positive
// integer, replaces every default.
namespace budget {
inline constexpr std::uint64_t kEnumeration = 100'000'000;
inline constexpr std::uint64_t kKalai = 2'000'000;
inline constexpr std::uint64_t kRTrees = 2'000'000;
inline constexpr int kTreewidthVertices = 20;
} // namespace budget

std::uint64_t work_budget(std::uint64_t fallback);

} // namespace mcclab
