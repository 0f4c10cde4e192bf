#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace endoscope {

/// Splits [0, count) into `chunks` contiguous ranges and runs fn(chunk, begin, end)
/// on up to `threads` workers. Callers store per-chunk results and merge them in
/// chunk order, so output never depends on the thread count.
template <class Fn>
void parallel_chunks(std::size_t count, std::size_t chunks, unsigned threads, Fn&& fn) {
  if (count == 0) return;
  chunks = std::max<std::size_t>(1, std::min(chunks, count));
  auto range = [&](std::size_t c) {
    return std::pair{count * c / chunks, count * (c + 1) / chunks};
  };
  if (threads <= 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      auto [b, e] = range(c);
      fn(c, b, e);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(threads, chunks);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) {
        try {
          auto [b, e] = range(c);
          fn(c, b, e);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Worker count from a request; 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace endoscope
