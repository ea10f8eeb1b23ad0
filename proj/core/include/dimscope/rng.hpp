#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace dimscope {

/// One SplitMix64 step.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream seed from a root seed and a path of
/// identifiers, e.g. derive_seed(seed, {split_id, sequence_index}). Each path
/// element is folded in by xor followed by two SplitMix64 rounds, so
/// (seed, {a, b}) and (seed, {b, a}) map to unrelated streams.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path);

/// Portable random source: std::mt19937_64 (bit-exact by the standard) with
/// hand-written transforms, since std:: distributions are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), unbiased (rejection sampling).
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller; the sine branch is discarded.
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace dimscope
