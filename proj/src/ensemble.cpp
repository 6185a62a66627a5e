#include "symjac/ensemble.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include "symjac/errors.hpp"

namespace symjac {

std::uint64_t member_seed(std::uint64_t seed, std::size_t index) {
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<double> ensemble_coefficients(std::uint64_t seed, int truncation) {
  if (truncation < 1) throw DomainError("ensemble truncation must be positive");
  std::mt19937_64 gen(seed);
  std::vector<double> b(static_cast<std::size_t>(truncation));
  for (std::size_t n = 0; n < b.size(); ++n) {
    const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    b[n] = (2.0 * unit - 1.0) / (1.0 + static_cast<double>(n));
  }
  return b;
}

SymmExpansion ensemble_member(const EnsembleSpec& spec, std::size_t index) {
  return {spec.params, ensemble_coefficients(member_seed(spec.seed, index), spec.truncation)};
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("VERIF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

RatioStats equivalence_ratio(const NormFunction& norm_a, const NormFunction& norm_b,
                             const EnsembleSpec& spec, unsigned threads) {
  if (spec.size == 0) throw EnsembleError("ensemble is empty");
  RatioStats st;
  st.ratios = parallel_map(
      spec.size,
      [&](std::size_t i) {
        const SymmExpansion f = ensemble_member(spec, i);
        const double b = norm_b(f);
        if (!(b > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        return norm_a(f) / b;
      },
      threads);
  double sum = 0.0;
  for (std::size_t i = 0; i < st.ratios.size(); ++i) {
    const double r = st.ratios[i];
    if (std::isnan(r)) continue;
    if (st.used == 0 || r < st.min) {
      st.min = r;
      st.argmin = i;
    }
    if (st.used == 0 || r > st.max) {
      st.max = r;
      st.argmax = i;
    }
    sum += r;
    ++st.used;
  }
  if (st.used == 0) throw EnsembleError("every ensemble member has vanishing reference norm");
  st.mean = sum / static_cast<double>(st.used);
  st.min_seed = member_seed(spec.seed, st.argmin);
  st.max_seed = member_seed(spec.seed, st.argmax);
  return st;
}

}  // namespace symjac
