#pragma once

#include <cstdint>
#include <random>

namespace liecoh {

/// Deterministic RNG for witness searches and parameter sampling.
/// mt19937_64 is bit-exact across platforms; the bounded draw avoids the
/// implementation-defined std distributions so identical seeds give
/// identical streams everywhere.
class DetRng {
public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish integer in [lo, hi] (modulo draw; the tiny bias is
  /// irrelevant for sampling test points).
  long next_in(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

private:
  std::mt19937_64 eng_;
};

} // namespace liecoh
