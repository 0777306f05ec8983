#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace trop2 {

/// Worker count from TROP2_THREADS (default: hardware concurrency, at most 8).
std::size_t thread_budget();

/// Runs body(i) for i in [0, count), possibly concurrently. Each index is
/// handled by exactly one worker; callers write results into slot i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace trop2
