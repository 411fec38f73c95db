#include <tubal/completion.hpp>

#include <tubal/errors.hpp>
#include <tubal/factor.hpp>
#include <tubal/random.hpp>
#include <tubal/sketch.hpp>

#include <cmath>
#include <numeric>
#include <string>

namespace tubal {

namespace {

void check_shape(const Tensor3& x, const Mask& mask) {
  if (!x.same_shape(mask.indicator())) throw DimensionError("mask and tensor shapes differ");
}

Mask pixel_mask(Index n1, Index n2, Index n3, const std::vector<bool>& missing_pixel) {
  Tensor3 indicator(n1, n2, n3);
  for (Index k = 0; k < n3; ++k) {
    for (Index i = 0; i < n1; ++i) {
      for (Index j = 0; j < n2; ++j) {
        indicator(i, j, k) = missing_pixel[static_cast<std::size_t>(i * n2 + j)] ? 0.0 : 1.0;
      }
    }
  }
  return Mask::from_tensor(indicator);
}

// count evenly spaced indices out of n.
std::vector<Index> evenly_spaced(Index n, Index count) {
  std::vector<Index> out;
  for (Index i = 0; i < count; ++i) {
    out.push_back(static_cast<Index>((static_cast<double>(i) + 0.5) * static_cast<double>(n) /
                                     static_cast<double>(count)));
  }
  return out;
}

}  // namespace

Mask Mask::from_tensor(const Tensor3& indicator) {
  Tensor3 binary(indicator.n1(), indicator.n2(), indicator.n3());
  Index observed = 0;
  auto src = indicator.data();
  auto dst = binary.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] != 0.0) {
      dst[i] = 1.0;
      ++observed;
    }
  }
  return Mask(std::move(binary), observed);
}

Mask Mask::all_observed(Index n1, Index n2, Index n3) {
  Tensor3 ones(n1, n2, n3);
  for (double& v : ones.data()) v = 1.0;
  return Mask(std::move(ones), n1 * n2 * n3);
}

Tensor3 apply_mask(const Tensor3& x, const Mask& mask) {
  check_shape(x, mask);
  Tensor3 out = x;
  auto t = mask.indicator().data();
  auto d = out.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] *= t[i];
  return out;
}

Mask generate_mask(Index n1, Index n2, Index n3, MaskPattern pattern, double missing_ratio,
                   std::uint64_t seed) {
  if (!(missing_ratio >= 0.0 && missing_ratio < 1.0)) {
    throw ValueError("missing ratio must lie in [0, 1)");
  }
  const auto pixels = static_cast<std::size_t>(n1 * n2);
  std::vector<bool> missing(pixels, false);
  switch (pattern) {
    case MaskPattern::random: {
      const auto count = static_cast<std::size_t>(std::llround(missing_ratio * static_cast<double>(pixels)));
      // Partial Fisher-Yates over pixel positions.
      std::vector<std::size_t> order(pixels);
      std::iota(order.begin(), order.end(), std::size_t{0});
      const CounterStream stream(seed);
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + stream.below(i, pixels - i);
        std::swap(order[i], order[j]);
        missing[order[i]] = true;
      }
      break;
    }
    case MaskPattern::rows: {
      const auto count = static_cast<Index>(std::llround(missing_ratio * static_cast<double>(n1)));
      for (Index r : evenly_spaced(n1, count)) {
        for (Index j = 0; j < n2; ++j) missing[static_cast<std::size_t>(r * n2 + j)] = true;
      }
      break;
    }
    case MaskPattern::columns: {
      const auto count = static_cast<Index>(std::llround(missing_ratio * static_cast<double>(n2)));
      for (Index c : evenly_spaced(n2, count)) {
        for (Index i = 0; i < n1; ++i) missing[static_cast<std::size_t>(i * n2 + c)] = true;
      }
      break;
    }
  }
  return pixel_mask(n1, n2, n3, missing);
}

CompletionResult complete(const Tensor3& observed, const Mask& mask, const CompletionConfig& cfg) {
  check_shape(observed, mask);
  if (cfg.iterations < 1) throw ConfigError("completion needs at least one iteration");
  if (cfg.rank < 1 || cfg.oversample < 0 || cfg.power < 0 ||
      cfg.rank + cfg.oversample > std::min(observed.n1(), observed.n2())) {
    throw ConfigError("rank " + std::to_string(cfg.rank) + " with oversampling " +
                      std::to_string(cfg.oversample) + " does not fit a " +
                      std::to_string(observed.n1()) + "x" + std::to_string(observed.n2()) +
                      " image");
  }

  const Tensor3 target = apply_mask(observed, mask);
  const double target_norm = fro_norm(target);
  auto t = mask.indicator().data();
  auto m = target.data();

  Tensor3 current = target;
  if (cfg.init == FillInit::mean_fill && mask.observed_count() > 0) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) sum += m[i];
    const double mean = sum / static_cast<double>(mask.observed_count());
    auto c = current.data();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (t[i] == 0.0) c[i] = mean;
    }
  }

  CompletionResult result;
  result.observed_residual.reserve(static_cast<std::size_t>(cfg.iterations));
  for (Index n = 0; n < cfg.iterations; ++n) {
    SketchParams params{cfg.rank, cfg.oversample, cfg.power,
                        derive_seed(cfg.seed, static_cast<std::uint64_t>(n)), cfg.truncation};
    const RandomizedTsvd low_rank = cfg.algorithm == LowRankAlgorithm::power
                                        ? randomized_tsvd_power(current, params)
                                        : randomized_tsvd_block_krylov(current, params);
    result.recovered = reconstruct(low_rank.factors);

    auto x = result.recovered.data();
    auto c = current.data();
    double residual = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (t[i] != 0.0) {
        const double d = x[i] - m[i];
        residual += d * d;
        c[i] = m[i];
      } else {
        c[i] = x[i];
      }
    }
    result.observed_residual.push_back(target_norm > 0.0 ? std::sqrt(residual) / target_norm
                                                         : std::sqrt(residual));
  }
  return result;
}

}  // namespace tubal
