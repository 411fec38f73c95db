#pragma once

#include <tubal/tensor.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tubal {

// ||x - xhat||_F / ||x||_F. Throws ValueError when x is zero.
double relative_error(const Tensor3& x, const Tensor3& xhat);

// 10 log10(255^2 / MSE) with MSE = ||x - y||_F^2 / numel. Identical inputs
// give +infinity.
double psnr(const Tensor3& x, const Tensor3& y);

enum class SpectrumCase { inverse_fifth = 1, inverse_sixth = 2, geometric_half = 3 };

// sigma_m for m = 1..n: 1/m^5, 1/m^6 or 0.5^m.
Eigen::VectorXd case_spectrum(Index n, SpectrumCase which);

// n x n x n tensor U0 * S0 * V0^T where U0, V0 are orthogonal tensors from the
// T-QR of Gaussian tensors and every Fourier slice of S0 is diag(sigma).
Tensor3 synthetic_case(Index n, SpectrumCase which, std::uint64_t seed = 0);

struct RunReport {
  std::string algorithm;
  Index rank = 0;
  Index oversample = 0;
  Index power = 0;
  std::uint64_t seed = 0;
  double relative_error = 0.0;
  std::optional<double> psnr_db;
  std::int64_t runtime_ms = 0;
  std::vector<std::pair<std::string, std::string>> extra;
};

// Stable key order; an infinite PSNR is written as the string "inf".
nlohmann::ordered_json to_json(const RunReport& report);

}  // namespace tubal
