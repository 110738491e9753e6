/* Copyright 2026 The nlcgen Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef NLCGEN_OP_COUNTER_HPP
#define NLCGEN_OP_COUNTER_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace nlcgen {

/// Counts elementary steps (candidate sequences built, rotations probed,
/// windows hashed) so generators and the exhaustive baseline can be compared
/// without timing noise.
class OpCounter {
 public:
  void add(std::uint64_t k) noexcept {
    value_.fetch_add(k, std::memory_order_relaxed);
  }
  std::uint64_t value() const noexcept {
    return value_.load(std::memory_order_relaxed);
  }
  void reset() noexcept { value_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> value_{0};
};

inline void count(OpCounter* c, std::uint64_t k) {
  if (c != nullptr) c->add(k);
}

/// Worker count from NLCGEN_WORKERS, falling back to hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("NLCGEN_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(shard) for shard in [0, shards) on up to `workers` threads.
/// Callers own per-shard output slots, so no synchronisation is needed.
inline void parallel_shards(std::size_t shards, unsigned workers,
                            const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::max<std::size_t>(shards, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < shards; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < shards; i = next++) body(i);
    });
  }
}

}  // namespace nlcgen

#endif  // NLCGEN_OP_COUNTER_HPP
