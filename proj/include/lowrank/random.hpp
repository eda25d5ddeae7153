#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace lowrank {

/// Reproducible stream keyed by (seed, stream). std::mt19937_64 and
/// std::seed_seq are fully specified by the standard; the integer mapping
/// below is done by hand (rejection sampling) because the standard
/// distributions are implementation-defined.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
    const std::uint64_t size = span + 1;
    // 2^64 mod size; values below it would bias the low residues.
    const std::uint64_t threshold = (0 - size) % size;
    std::uint64_t v;
    do {
      v = next();
    } while (v < threshold);
    return lo + static_cast<std::int64_t>(v % size);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lowrank
