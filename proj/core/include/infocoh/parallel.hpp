#pragma once

#include <cstddef>
#include <functional>

namespace infocoh {

/// Worker count for scan partitioning: INFOCOH_THREADS if set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
int worker_count();

/// Runs fn(job) for every job in [0, jobs), distributing contiguous blocks
/// over workers.  fn must be thread-safe; callers own any deterministic
/// merge of per-job results.
void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace infocoh
