#include "tanvar/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace tanvar {

namespace {
std::atomic<std::size_t> g_threads{1};
}

void set_thread_count(std::size_t threads) { g_threads = std::max<std::size_t>(1, threads); }

std::size_t thread_count() { return g_threads; }

std::size_t chunk_count(std::size_t n) { return std::max<std::size_t>(1, std::min(n, thread_count())); }

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body)
{
  const std::size_t chunks = chunk_count(n);
  auto bounds = [n, chunks](std::size_t c) { return n * c / chunks; };
  if (chunks == 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  for (std::size_t c = 0; c < chunks; ++c)
    workers.emplace_back([&, c] {
      try {
        body(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace tanvar
