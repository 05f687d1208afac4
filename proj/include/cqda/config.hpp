#pragma once

#include <cstdint>

namespace cqda {

/// Cap on enumerated states (edge subsets, brute-force assignments).
/// Defaults to 2^20; the CQDA_BUDGET environment variable overrides it.
std::uint64_t budget();
void set_budget(std::uint64_t cap);

}  // namespace cqda
