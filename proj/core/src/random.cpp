#include <tubal/random.hpp>

#include <cmath>
#include <numbers>

namespace tubal {

namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterStream::bits(std::uint64_t i) const {
  return mix64(mix64(seed_) ^ mix64(i ^ 0x6a09e667f3bcc909ULL));
}

double CounterStream::uniform(std::uint64_t i) const {
  // 53 high bits, shifted to the open interval.
  return (static_cast<double>(bits(i) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterStream::normal(std::uint64_t i) const {
  const double u1 = uniform(2 * i);
  const double u2 = uniform(2 * i + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t CounterStream::below(std::uint64_t i, std::uint64_t bound) const {
  // Multiply-shift; the bias is below 2^-64 * bound.
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits(i)) * bound) >> 64);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0xbb67ae8584caa73bULL));
}

Tensor3 gaussian_tensor(Index n1, Index n2, Index n3, std::uint64_t seed) {
  Tensor3 t(n1, n2, n3);
  const CounterStream stream(seed);
  auto data = t.data();
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = stream.normal(i);
  return t;
}

}  // namespace tubal
