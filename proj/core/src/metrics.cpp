#include <tubal/metrics.hpp>

#include <tubal/errors.hpp>
#include <tubal/factor.hpp>
#include <tubal/fourier.hpp>
#include <tubal/random.hpp>

#include <cmath>
#include <limits>

namespace tubal {

double relative_error(const Tensor3& x, const Tensor3& xhat) {
  if (!x.same_shape(xhat)) throw DimensionError("relative_error needs equal shapes");
  const double reference = fro_norm(x);
  if (reference == 0.0) throw ValueError("relative error against a zero tensor");
  return fro_norm(x - xhat) / reference;
}

double psnr(const Tensor3& x, const Tensor3& y) {
  if (!x.same_shape(y)) throw DimensionError("psnr needs equal shapes");
  const double diff = fro_norm(x - y);
  const double mse = diff * diff / static_cast<double>(x.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

Eigen::VectorXd case_spectrum(Index n, SpectrumCase which) {
  Eigen::VectorXd sigma(n);
  for (Index i = 0; i < n; ++i) {
    const double m = static_cast<double>(i + 1);
    switch (which) {
      case SpectrumCase::inverse_fifth: sigma(i) = 1.0 / std::pow(m, 5); break;
      case SpectrumCase::inverse_sixth: sigma(i) = 1.0 / std::pow(m, 6); break;
      case SpectrumCase::geometric_half: sigma(i) = std::pow(0.5, m); break;
      default: throw ValueError("unknown spectrum case");
    }
  }
  return sigma;
}

Tensor3 synthetic_case(Index n, SpectrumCase which, std::uint64_t seed) {
  if (n < 1) throw DimensionError("synthetic tensor size must be positive");
  const Eigen::VectorXd sigma = case_spectrum(n, which);
  const Tensor3 u0 = tqr(gaussian_tensor(n, n, n, derive_seed(seed, 1))).q;
  const Tensor3 v0 = tqr(gaussian_tensor(n, n, n, derive_seed(seed, 2))).q;
  // A constant spectrum diag(sigma) is an impulse in the spatial domain.
  Tensor3 s0(n, n, n);
  s0.slice(0).diagonal() = sigma;
  return tprod(tprod(u0, s0), t_transpose(v0));
}

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["algorithm"] = report.algorithm;
  j["R"] = report.rank;
  j["P"] = report.oversample;
  j["q"] = report.power;
  j["seed"] = report.seed;
  j["relative_error"] = report.relative_error;
  if (!report.psnr_db) {
    j["psnr_db"] = nullptr;
  } else if (std::isinf(*report.psnr_db)) {
    j["psnr_db"] = "inf";
  } else {
    j["psnr_db"] = *report.psnr_db;
  }
  j["runtime_ms"] = report.runtime_ms;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.extra) extra[key] = value;
  j["extra"] = std::move(extra);
  return j;
}

}  // namespace tubal
