#pragma once

#include <cstdint>
#include <random>

#include "horn/types.hpp"
#include "horn/version.hpp"

namespace horn {

// Deterministic random source.  mt19937_64 output is fully specified by the
// standard, and the bounded draw below is hand-rolled (std distributions are
// not portable across library implementations), so a seed pins every result
// bit-for-bit on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  // Uniform integer in [lo, hi] via rejection sampling (unbiased).
  long intIn(long lo, long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = range * (UINT64_MAX / range);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return lo + static_cast<long>(x % range);
  }

  // Uniform nonzero integer in [lo, hi] (requires the interval to contain one).
  long nonzeroIntIn(long lo, long hi) {
    long x;
    do {
      x = intIn(lo, hi);
    } while (x == 0);
    return x;
  }

  // Uniform double in [0, 1).
  double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  IntVector intVector(Index n, long lo, long hi) {
    IntVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Int(intIn(lo, hi));
    return v;
  }

  IntMatrix intMatrix(Index rows, Index cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = Int(intIn(lo, hi));
    return m;
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace horn
