#ifndef SYMJAC_ENSEMBLE_HPP
#define SYMJAC_ENSEMBLE_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

#include "symjac/basis.hpp"

namespace symjac {

/// Seeded family of random band-limited expansions, b_n = u_n / (1 + n) with u_n uniform in [-1, 1).
/// Member i draws from its own generator, so a longer truncation extends the shorter one.
struct EnsembleSpec {
  JacobiParams params;
  std::size_t size = 50;
  int truncation = 32;
  std::uint64_t seed = 20240917;
};

std::uint64_t member_seed(std::uint64_t seed, std::size_t index);
std::vector<double> ensemble_coefficients(std::uint64_t member_seed, int truncation);
SymmExpansion ensemble_member(const EnsembleSpec& spec, std::size_t index);

/// VERIF_THREADS when set to a positive integer, else the hardware concurrency (at least 1).
unsigned default_thread_count();

/// out[i] = fn(i) for i < count, computed on up to `threads` workers (0 = default).
/// Results are stored by index, so the output does not depend on scheduling.
template <class F>
auto parallel_map(std::size_t count, F&& fn, unsigned threads = 0)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(count);
  if (threads == 0) threads = default_thread_count();
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

using NormFunction = std::function<double(const SymmExpansion&)>;

struct RatioStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::size_t argmin = 0;
  std::size_t argmax = 0;
  std::uint64_t min_seed = 0;
  std::uint64_t max_seed = 0;
  std::vector<double> ratios;  // NaN where norm_b vanished
  std::size_t used = 0;

  double spread() const { return max / min; }
};

/// Statistics of norm_a(f) / norm_b(f) over the ensemble. Members with norm_b = 0 are skipped;
/// throws EnsembleError when none remain.
RatioStats equivalence_ratio(const NormFunction& norm_a, const NormFunction& norm_b,
                             const EnsembleSpec& spec, unsigned threads = 0);

}  // namespace symjac

#endif  // SYMJAC_ENSEMBLE_HPP
