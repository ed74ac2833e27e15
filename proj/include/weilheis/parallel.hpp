#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace weilheis {

/// Worker count: WEILHEIS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("WEILHEIS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs body(begin, end, chunk) over [0, n) split into contiguous chunks and
/// returns the per-chunk results in chunk order. The split depends only on n
/// and the worker count; callers combine results in order, so exact
/// reductions are reproducible.
template <class R>
std::vector<R> parallel_chunks(std::size_t n, const std::function<R(std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), n / 64 + 1));
  std::vector<R> out(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(n, w * step), hi = std::min(n, lo + step);
    auto run = [&, w, lo, hi] {
      try {
        out[w] = body(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) run();
    else threads.emplace_back(run);
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace weilheis
