#include "specincl/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace specincl {

std::size_t default_jobs() {
  if (const char* env = std::getenv("SPECINCL_JOBS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the hardware count
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  if (jobs == 0) jobs = default_jobs();
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    body(0, count);
    return;
  }

  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  pool.reserve(jobs - 1);
  std::size_t chunk = count / jobs, extra = count % jobs;
  auto run = [&](std::size_t begin, std::size_t end) {
    try {
      body(begin, end);
    } catch (...) {
      std::lock_guard lock(mu);
      if (!first) first = std::current_exception();
    }
  };
  std::size_t begin = 0;
  std::size_t first_end = chunk + (extra > 0 ? 1 : 0);
  begin = first_end;
  for (std::size_t w = 1; w < jobs; ++w) {
    std::size_t len = chunk + (w < extra ? 1 : 0);
    pool.emplace_back(run, begin, begin + len);
    begin += len;
  }
  run(0, first_end);
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

}  // namespace specincl
