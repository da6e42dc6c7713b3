#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace hamex {

// 0 means "ask the hardware"; anything else is clamped to at least 1.
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs body(state[c], i) for every i in [0, count), with worker c taking the
// stride class i % jobs. Each worker owns its state, so bodies stay lock-free;
// callers merge the returned states in worker order, which keeps results
// independent of scheduling (and of the job count, if the merge is a
// commutative reduction or a sort).
template <typename State, typename Body>
std::vector<State> run_strided(std::int64_t count, int jobs, Body body) {
  int j = resolve_jobs(jobs);
  std::vector<State> states(j);
  if (j == 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(states[0], i);
    return states;
  }
  std::vector<std::thread> workers;
  workers.reserve(j);
  for (int c = 0; c < j; ++c)
    workers.emplace_back([&states, count, j, c, &body] {
      for (std::int64_t i = c; i < count; i += j) body(states[c], i);
    });
  for (auto& w : workers) w.join();
  return states;
}

}  // namespace hamex
