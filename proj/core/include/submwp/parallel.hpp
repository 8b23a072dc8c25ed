#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace submwp {

/// Worker count: explicit argument > 0 wins, else SUBMWP_JOBS, else 1.
inline int resolve_jobs(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUBMWP_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

/// Runs f(chunk_index) for chunk_index in [0, chunks) across `jobs` threads.
/// Chunks are assigned round-robin, so any per-chunk outputs must be written
/// to per-chunk slots; callers reduce in chunk order to stay deterministic
/// for every worker count.
template <class F>
void parallel_chunks(std::uint64_t chunks, int jobs, F&& f) {
  if (jobs <= 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) f(c);
    return;
  }
  const int workers = static_cast<int>(std::min<std::uint64_t>(jobs, chunks));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = w; c < chunks; c += workers) f(c);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace submwp
