#pragma once

#include <tubal/tensor.hpp>

#include <cstdint>

namespace tubal {

// Counter-based random stream: the value at position i depends only on
// (seed, i), so draws can be taken in any order or split across threads
// without changing the result.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // 64 random bits at counter position i.
  std::uint64_t bits(std::uint64_t i) const;

  // Uniform on (0, 1), never exactly 0 or 1.
  double uniform(std::uint64_t i) const;

  // Standard normal sample i (Box-Muller on uniforms 2i and 2i+1).
  double normal(std::uint64_t i) const;

  // Uniform integer in [0, bound) at position i, bound > 0.
  std::uint64_t below(std::uint64_t i, std::uint64_t bound) const;

 private:
  std::uint64_t seed_;
};

// Seed of an independent substream, e.g. one per completion iteration.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// i.i.d. N(0, 1) entries; entry with flat storage index i is normal(i).
Tensor3 gaussian_tensor(Index n1, Index n2, Index n3, std::uint64_t seed);

}  // namespace tubal
