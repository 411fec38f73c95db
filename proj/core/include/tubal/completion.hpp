#pragma once

#include <tubal/sketch.hpp>
#include <tubal/tensor.hpp>

#include <cstdint>
#include <vector>

namespace tubal {

// Binary observation indicator: 1 where the entry is observed.
class Mask {
 public:
  // Any nonzero entry counts as observed.
  static Mask from_tensor(const Tensor3& indicator);
  static Mask all_observed(Index n1, Index n2, Index n3);

  const Tensor3& indicator() const { return indicator_; }
  Index observed_count() const { return observed_; }
  Index n1() const { return indicator_.n1(); }
  Index n2() const { return indicator_.n2(); }
  Index n3() const { return indicator_.n3(); }

 private:
  Mask(Tensor3 indicator, Index observed) : indicator_(std::move(indicator)), observed_(observed) {}

  Tensor3 indicator_;
  Index observed_ = 0;
};

enum class MaskPattern { random, rows, columns };

// Entrywise x * mask. Throws DimensionError on shape mismatch.
Tensor3 apply_mask(const Tensor3& x, const Mask& mask);

// Removes round(ratio * n1 * n2) pixel positions (all channels of a pixel at
// once). `random` picks positions uniformly; `rows` / `columns` remove
// round(ratio * n1) rows or round(ratio * n2) columns, evenly spaced.
// Throws ValueError unless 0 <= ratio < 1.
Mask generate_mask(Index n1, Index n2, Index n3, MaskPattern pattern, double missing_ratio,
                   std::uint64_t seed);

enum class LowRankAlgorithm { power, block_krylov };
enum class FillInit { zero_fill, mean_fill };

struct CompletionConfig {
  Index rank = 1;
  Index oversample = 0;
  Index power = 0;
  std::uint64_t seed = 0;
  Index iterations = 1;
  LowRankAlgorithm algorithm = LowRankAlgorithm::block_krylov;
  FillInit init = FillInit::zero_fill;
  // The leading-slice basis keeps L from fitting the observed entries too
  // closely when R is large relative to the number of observations.
  BasisTruncation truncation = BasisTruncation::leading;
};

struct CompletionResult {
  Tensor3 recovered;
  // ||P(X_n) - P(M)||_F / ||P(M)||_F for every iteration n.
  std::vector<double> observed_residual;
};

// Alternates X_n = L(C_n) with C_{n+1} = T.*M + (1 - T).*X_n for a fixed
// number of iterations, L being a rank-R randomized truncated T-SVD. Each
// iteration draws its sketch from its own substream of cfg.seed.
// Throws ConfigError for an invalid configuration.
CompletionResult complete(const Tensor3& observed, const Mask& mask, const CompletionConfig& cfg);

}  // namespace tubal
