// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <tubal/completion.hpp>
#include <tubal/factor.hpp>
#include <tubal/fourier.hpp>
#include <tubal/io.hpp>
#include <tubal/metrics.hpp>
#include <tubal/oracle.hpp>
#include <tubal/parallel.hpp>
#include <tubal/random.hpp>
#include <tubal/sketch.hpp>

#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace tubal;
using testing::max_abs_diff;
using testing::random_tensor;
using testing::rel_diff;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Verdict oracle_equivalence() {
  const auto start = Clock::now();
  const Index n3_values[] = {1, 2, 3, 4, 5, 8};
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> extent(1, 12);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Index n1 = extent(rng), n2 = extent(rng), n4 = extent(rng);
    const Index n3 = n3_values[t % 6];
    const Tensor3 x = random_tensor(n1, n2, n3, 1000 + 2 * t);
    const Tensor3 y = random_tensor(n2, n4, n3, 1001 + 2 * t);
    worst = std::max(worst, rel_diff(tprod(x, y), oracle::reference_tprod(x, y)));
  }
  const double secs = seconds_since(start);
  return {worst <= 1e-11 && secs < 10.0, fmt("max rel diff %.2e over 50 pairs, %.2f s", worst, secs)};
}

Verdict block_diagonalization() {
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Index n3 = 2 + t % 5;
    const Tensor3 x = random_tensor(3 + t % 3, 2 + t % 4, n3, 2000 + t);
    const Eigen::MatrixXcd d = oracle::block_diagonalize(x);
    const FourierTensor3 xf = dft_mode3(x);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(d.rows(), d.cols());
    for (Index k = 0; k < n3; ++k) {
      expected.block(k * x.n1(), k * x.n2(), x.n1(), x.n2()) = xf.slice(k);
    }
    worst = std::max(worst, (d - expected).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-10, fmt("max entry deviation %.2e over 10 tensors", worst)};
}

Verdict factorization_contracts() {
  double qr_err = 0.0, svd_err = 0.0, penrose = 0.0, projector = 0.0;
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> extent(1, 9);
  const Index n3_values[] = {1, 2, 3, 4, 5, 8};
  for (int t = 0; t < 20; ++t) {
    const Index n1 = extent(rng), n2 = extent(rng), n3 = n3_values[t % 6];
    const Tensor3 a = random_tensor(n1, n2, n3, 3000 + t);

    const TqrFactors qr = tqr(a);
    qr_err = std::max({qr_err, rel_diff(tprod(qr.q, qr.r), a),
                       max_abs_diff(tprod(t_transpose(qr.q), qr.q), identity_tensor(qr.q.n2(), n3))});

    const TsvdFactors svd = tsvd(a);
    svd_err = std::max(svd_err, rel_diff(reconstruct(svd), a));

    const Tensor3 p = pinv(a);
    const Tensor3 ap = tprod(a, p);
    const Tensor3 pa = tprod(p, a);
    penrose = std::max({penrose, rel_diff(tprod(ap, a), a), rel_diff(tprod(pa, p), p),
                        max_abs_diff(t_transpose(ap), ap), max_abs_diff(t_transpose(pa), pa)});

    // Full column rank: range(A) is spanned by all of U.
    projector = std::max(projector, max_abs_diff(ap, tprod(svd.u, t_transpose(svd.u))));
  }
  const bool pass = qr_err <= 1e-10 && svd_err <= 1e-9 && penrose <= 1e-8 && projector <= 1e-9;
  return {pass, fmt("tqr %.2e, tsvd %.2e, Penrose %.2e", qr_err, svd_err, penrose) +
                    fmt(", A*pinv(A) vs U*U^T %.2e", projector)};
}

Verdict norm_identities() {
  double fro_dev = 0.0, spec_dev = 0.0;
  bool submultiplicative = true, invariant = true;
  for (int t = 0; t < 10; ++t) {
    const Index n3 = 1 + t % 6;
    const Tensor3 a = random_tensor(4 + t % 3, 5, n3, 4000 + t);
    const Tensor3 b = random_tensor(5, 3 + t % 4, n3, 4100 + t);

    const FourierTensor3 af = dft_mode3(a);
    double fourier_sq = 0.0;
    for (const Complex& v : af.data()) fourier_sq += std::norm(v);
    const double fro = fro_norm(a);
    fro_dev = std::max(fro_dev, std::abs(std::sqrt(fourier_sq / static_cast<double>(n3)) - fro) / fro);

    const double s = spectral_norm(a);
    spec_dev = std::max(spec_dev, std::abs(s - oracle::reference_spectral_norm(a)) / s);

    submultiplicative = submultiplicative &&
                        spectral_norm(tprod(a, b)) <= s * spectral_norm(b) * (1.0 + 1e-12) &&
                        fro_norm(tprod(a, b)) <= fro * fro_norm(b) * (1.0 + 1e-12);

    const Tensor3 q = tqr(random_tensor(a.n1(), a.n1(), n3, 4200 + t)).q;
    const Tensor3 qa = tprod(q, a);
    invariant = invariant && std::abs(fro_norm(qa) - fro) <= 1e-12 * fro &&
                std::abs(spectral_norm(qa) - s) <= 1e-10 * s;
  }
  const bool pass = fro_dev <= 1e-12 && spec_dev <= 1e-10 && submultiplicative && invariant;
  return {pass, fmt("Fourier Frobenius %.2e, spectral vs bcirc %.2e", fro_dev, spec_dev) +
                    (submultiplicative ? ", submultiplicative" : ", submultiplicativity violated") +
                    (invariant ? ", orthogonally invariant" : ", invariance violated")};
}

Verdict exact_rank_recovery() {
  const Tensor3 x = tprod(random_tensor(50, 5, 3, 5000), random_tensor(5, 50, 3, 5001));
  const auto start = Clock::now();
  const RandomizedTsvd r =
      randomized_tsvd_block_krylov(x, {.rank = 5, .oversample = 5, .power = 2, .seed = 5});
  const double err = relative_error(x, reconstruct(r.factors));
  const double secs = seconds_since(start);
  return {err < 1e-10 && secs < 5.0, fmt("relative error %.2e, %.3f s", err, secs)};
}

Verdict residual_bound() {
  double worst_margin = -std::numeric_limits<double>::infinity();
  int passed = 0;
  for (int t = 0; t < 25; ++t) {
    const Index q = t % 4;
    const Index n1 = 6 + t % 7;
    const Index n3 = 1 + t % 5;
    const Tensor3 x = random_tensor(n1, 4 + t % 9, n3, 6000 + t);
    const Index rank = 1 + t % 2;
    const ResidualBound b = projector_residual_bound_check(
        x, {.rank = rank, .oversample = 1, .power = q, .seed = static_cast<std::uint64_t>(t)});
    worst_margin = std::max(worst_margin, b.lhs - b.rhs);
    passed += b.lhs <= b.rhs + 1e-8 ? 1 : 0;
  }
  return {passed == 25, fmt("%.0f/25 instances, max(lhs - rhs) = %.3e", passed, worst_margin)};
}

Verdict algorithm_ordering() {
  const auto start = Clock::now();
  std::string detail;
  bool pass = true;
  for (SpectrumCase c : {SpectrumCase::inverse_fifth, SpectrumCase::inverse_sixth,
                         SpectrumCase::geometric_half}) {
    const Tensor3 x = synthetic_case(100, c, 0);
    std::vector<double> power_err, krylov_err;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SketchParams p{.rank = 45, .oversample = 5, .power = 2, .seed = seed,
                           .truncation = BasisTruncation::leading};
      power_err.push_back(relative_error(x, reconstruct(randomized_tsvd_power(x, p).factors)));
      krylov_err.push_back(relative_error(x, reconstruct(randomized_tsvd_block_krylov(x, p).factors)));
    }
    const double mp = median(power_err), mk = median(krylov_err);
    pass = pass && mk <= mp;
    detail += fmt("case %.0f: power %.2e, krylov %.2e; ", static_cast<double>(c), mp, mk);
  }
  const double secs = seconds_since(start);
  return {pass && secs < 60.0, detail + fmt("%.1f s", secs)};
}

Verdict compression_parity(const std::filesystem::path& data) {
  const Tensor3 image = load_image(data / "astronaut_256.ppm");
  std::vector<double> power_db, krylov_db;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SketchParams p{.rank = 25, .oversample = 5, .power = 2, .seed = seed};
    power_db.push_back(psnr(image, reconstruct(randomized_tsvd_power(image, p).factors)));
    krylov_db.push_back(psnr(image, reconstruct(randomized_tsvd_block_krylov(image, p).factors)));
  }
  const double mp = median(power_db), mk = median(krylov_db);
  return {mk >= mp - 0.1, fmt("median PSNR power %.3f dB, krylov %.3f dB", mp, mk)};
}

Verdict completion_efficacy(const std::filesystem::path& data) {
  const Tensor3 image = load_image(data / "coffee_256.ppm");
  const Mask mask = generate_mask(image.n1(), image.n2(), image.n3(), MaskPattern::random, 0.7, 9);
  const Tensor3 observed = apply_mask(image, mask);
  const auto start = Clock::now();
  const CompletionResult r = complete(
      observed, mask, {.rank = 50, .oversample = 10, .power = 2, .seed = 9, .iterations = 100});
  const double secs = seconds_since(start);
  const double before = psnr(image, observed);
  const double after = psnr(image, r.recovered);
  return {after - before >= 6.0 && secs < 120.0,
          fmt("observed %.2f dB -> recovered %.2f dB, %.1f s (default leading basis)", before, after, secs)};
}

Verdict determinism() {
  const Tensor3 x = random_tensor(40, 30, 6, 7000);
  const Tensor3 small = random_tensor(10, 8, 3, 7001);
  const Mask mask = generate_mask(40, 30, 6, MaskPattern::random, 0.5, 3);
  const SketchParams p{.rank = 5, .oversample = 3, .power = 2, .seed = 77};

  std::vector<std::function<Tensor3()>> entry_points{
      [] { return gaussian_tensor(20, 10, 5, 12); },
      [&] { return sketch_tensor(x, p); },
      [&] { return reconstruct(randomized_tsvd_power(x, p).factors); },
      [&] { return reconstruct(randomized_tsvd_block_krylov(x, p).factors); },
      [&] {
        SketchParams lp = p;
        lp.truncation = BasisTruncation::leading;
        return reconstruct(randomized_tsvd_block_krylov(x, lp).factors);
      },
      [&] { return build_krylov_basis(x, sketch_tensor(x, p), 2).q; },
      [&] {
        const ResidualBound b = projector_residual_bound_check(small, {.rank = 2, .power = 1, .seed = 4});
        return make_tensor(1, 2, 1, {b.lhs, b.rhs});
      },
      [] { return generate_mask(30, 20, 3, MaskPattern::random, 0.6, 8).indicator(); },
      [] { return synthetic_case(12, SpectrumCase::geometric_half, 5); },
      [&] {
        return complete(apply_mask(x, mask), mask,
                        {.rank = 4, .oversample = 2, .power = 1, .seed = 6, .iterations = 3})
            .recovered;
      },
  };

  int stable = 0;
  for (const auto& f : entry_points) {
    set_worker_count(1);
    const Tensor3 a = f();
    const Tensor3 b = f();
    set_worker_count(4);
    const Tensor3 c = f();
    set_worker_count(3);
    const Tensor3 d = f();
    stable += (a == b && a == c && a == d) ? 1 : 0;
  }
  set_worker_count(1);
  const int total = static_cast<int>(entry_points.size());
  return {stable == total,
          fmt("%.0f/%.0f entry points bit-identical across repeats and 1/3/4 workers",
              stable, total)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path data = argc > 1 ? argv[1] : TUBAL_TEST_DATA_DIR;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"block diagonalization", block_diagonalization},
      {"factorization contracts", factorization_contracts},
      {"norm identities", norm_identities},
      {"exact-rank recovery", exact_rank_recovery},
      {"residual bound", residual_bound},
      {"algorithm ordering", algorithm_ordering},
      {"compression parity", [&] { return compression_parity(data); }},
      {"completion efficacy", [&] { return completion_efficacy(data); }},
      {"determinism", determinism},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
