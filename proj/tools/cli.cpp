#include "cli.hpp"

#include <tubal/errors.hpp>
#include <tubal/factor.hpp>
#include <tubal/io.hpp>
#include <tubal/metrics.hpp>
#include <tubal/random.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tubal::cli {

namespace {

// Substream of the master seed reserved for mask generation.
constexpr std::uint64_t kMaskStream = 0x6d61736bULL;

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

LowRankAlgorithm parse_algorithm(const std::string& name) {
  if (name == "power") return LowRankAlgorithm::power;
  if (name == "krylov") return LowRankAlgorithm::block_krylov;
  throw ConfigError("unknown algorithm '" + name + "' (expected power or krylov)");
}

BasisTruncation parse_basis(const std::string& name) {
  if (name == "full") return BasisTruncation::full;
  if (name == "leading") return BasisTruncation::leading;
  throw ConfigError("unknown basis mode '" + name + "' (expected full or leading)");
}

MaskPattern parse_pattern(const std::string& name) {
  if (name == "random") return MaskPattern::random;
  if (name == "rows") return MaskPattern::rows;
  if (name == "columns") return MaskPattern::columns;
  throw ConfigError("unknown mask pattern '" + name + "'");
}

FillInit parse_init(const std::string& name) {
  if (name == "zero") return FillInit::zero_fill;
  if (name == "mean") return FillInit::mean_fill;
  throw ConfigError("unknown initialization '" + name + "' (expected zero or mean)");
}

const char* algorithm_name(LowRankAlgorithm a) {
  return a == LowRankAlgorithm::power ? "power" : "krylov";
}

RandomizedTsvd run_algorithm(LowRankAlgorithm algorithm, const Tensor3& x,
                             const SketchParams& params) {
  return algorithm == LowRankAlgorithm::power ? randomized_tsvd_power(x, params)
                                              : randomized_tsvd_block_krylov(x, params);
}

void emit_report(const nlohmann::ordered_json& report, const std::filesystem::path& path,
                 std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open report file " + path.string());
  file << text;
  if (!file) throw IoError("failed writing report file " + path.string());
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const SymmetryError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const Error& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  }
}

std::filesystem::path default_observed_path(const std::filesystem::path& output) {
  if (output.empty()) return {};
  auto p = output;
  p.replace_filename(output.stem().string() + ".observed" + output.extension().string());
  return p;
}

}  // namespace

int cmd_compress(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LowRankAlgorithm algorithm = parse_algorithm(cfg.algorithm);
    const SketchParams params{cfg.rank, cfg.oversample, cfg.power, cfg.seed,
                              parse_basis(cfg.basis)};
    const Tensor3 image = load_image(cfg.input);

    const auto start = Clock::now();
    const RandomizedTsvd result = run_algorithm(algorithm, image, params);
    const std::int64_t runtime = elapsed_ms(start);
    // Metrics describe the image that is written out.
    const Tensor3 approx = quantize_pixels(reconstruct(result.factors));

    if (!cfg.output.empty()) save_image(approx, cfg.output);

    RunReport report;
    report.algorithm = algorithm_name(algorithm);
    report.rank = cfg.rank;
    report.oversample = cfg.oversample;
    report.power = cfg.power;
    report.seed = cfg.seed;
    report.relative_error = relative_error(image, approx);
    report.psnr_db = psnr(image, approx);
    report.runtime_ms = runtime;
    report.extra = {{"command", "compress"},
                    {"height", std::to_string(image.n1())},
                    {"width", std::to_string(image.n2())},
                    {"basis", cfg.basis},
                    {"basis_width", std::to_string(result.basis_width)},
                    {"basis_capped", result.basis_capped ? "true" : "false"}};
    emit_report(to_json(report), cfg.report, out);
    return kOk;
  });
}

int cmd_complete(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CompletionConfig completion;
    completion.rank = cfg.rank;
    completion.oversample = cfg.oversample;
    completion.power = cfg.power;
    completion.seed = cfg.seed;
    completion.iterations = cfg.iterations;
    completion.algorithm = parse_algorithm(cfg.algorithm);
    completion.init = parse_init(cfg.init);
    completion.truncation = parse_basis(cfg.basis);
    const MaskPattern pattern = parse_pattern(cfg.mask_pattern);

    const Tensor3 image = load_image(cfg.input);
    Mask mask = Mask::all_observed(image.n1(), image.n2(), image.n3());
    if (!cfg.mask_file.empty()) {
      const Tensor3 mask_image = load_image(cfg.mask_file);
      if (!mask_image.same_shape(image)) {
        throw ConfigError("mask image size does not match the input image");
      }
      mask = Mask::from_tensor(mask_image);
    } else {
      mask = generate_mask(image.n1(), image.n2(), image.n3(), pattern, cfg.mask_ratio,
                           derive_seed(cfg.seed, kMaskStream));
    }
    const Tensor3 observed = apply_mask(image, mask);

    const auto start = Clock::now();
    const CompletionResult result = complete(observed, mask, completion);
    const std::int64_t runtime = elapsed_ms(start);

    if (!cfg.output.empty()) save_image(result.recovered, cfg.output);
    const auto observed_path =
        cfg.observed_output.empty() ? default_observed_path(cfg.output) : cfg.observed_output;
    if (!observed_path.empty()) save_image(observed, observed_path);

    RunReport report;
    report.algorithm = algorithm_name(completion.algorithm);
    report.rank = cfg.rank;
    report.oversample = cfg.oversample;
    report.power = cfg.power;
    report.seed = cfg.seed;
    const Tensor3 recovered = quantize_pixels(result.recovered);
    report.relative_error = relative_error(image, recovered);
    report.psnr_db = psnr(image, recovered);
    report.runtime_ms = runtime;
    const double observed_psnr = psnr(image, observed);
    std::ostringstream observed_psnr_text;
    observed_psnr_text.precision(17);
    observed_psnr_text << observed_psnr;
    report.extra = {
        {"command", "complete"},
        {"height", std::to_string(image.n1())},
        {"width", std::to_string(image.n2())},
        {"basis", cfg.basis},
        {"iterations", std::to_string(cfg.iterations)},
        {"mask", cfg.mask_file.empty() ? cfg.mask_pattern : cfg.mask_file.string()},
        {"observed_entries", std::to_string(mask.observed_count())},
        {"missing_fraction",
         std::to_string(1.0 - static_cast<double>(mask.observed_count()) /
                                  static_cast<double>(image.size()))},
        {"observed_psnr_db", std::isinf(observed_psnr) ? "inf" : observed_psnr_text.str()},
    };
    nlohmann::ordered_json json = to_json(report);
    json["trace"] = result.observed_residual;
    emit_report(json, cfg.report, out);
    return kOk;
  });
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.spectrum_case < 1 || cfg.spectrum_case > 3) {
      throw ConfigError("--case must be 1, 2 or 3");
    }
    if (cfg.seeds < 1) throw ConfigError("--seeds must be at least 1");
    const BasisTruncation basis = parse_basis(cfg.basis);
    const std::vector<Index> ranks = cfg.ranks.empty() ? std::vector<Index>{cfg.rank} : cfg.ranks;
    const std::vector<Index> powers =
        cfg.powers.empty() ? std::vector<Index>{cfg.power} : cfg.powers;

    std::ofstream file;
    if (!cfg.csv.empty()) {
      file.open(cfg.csv);
      if (!file) throw IoError("cannot open " + cfg.csv.string());
    }
    std::ostream& table = cfg.csv.empty() ? out : file;
    table << "algorithm,n,R,P,q,seed,relative_error,runtime_ms\n";
    table.precision(17);

    for (Index n : cfg.sizes) {
      const Tensor3 x = synthetic_case(n, static_cast<SpectrumCase>(cfg.spectrum_case), cfg.seed);
      for (Index rank : ranks) {
        for (Index power : powers) {
          for (Index s = 0; s < cfg.seeds; ++s) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(s);
            const SketchParams params{rank, cfg.oversample, power, seed, basis};
            for (LowRankAlgorithm algorithm :
                 {LowRankAlgorithm::power, LowRankAlgorithm::block_krylov}) {
              const auto start = Clock::now();
              const RandomizedTsvd result = run_algorithm(algorithm, x, params);
              const std::int64_t runtime = elapsed_ms(start);
              const double error = relative_error(x, reconstruct(result.factors));
              table << algorithm_name(algorithm) << ',' << n << ',' << rank << ','
                    << cfg.oversample << ',' << power << ',' << seed << ',' << error << ','
                    << runtime << '\n';
            }
          }
        }
      }
    }
    if (!table) throw IoError("failed writing benchmark table");
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized truncated tensor SVD under the t-product"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_sketch_options = [&](CLI::App* sub) {
    sub->add_option("--oversample", cfg.oversample, "Oversampling P")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--basis", cfg.basis, "Krylov basis used for projection: full|leading")
        ->capture_default_str();
  };

  auto* compress = app.add_subcommand("compress", "Low tubal-rank approximation of an image");
  compress->add_option("--input", cfg.input, "Input image (PPM/PGM)")->required();
  compress->add_option("--output", cfg.output, "Reconstructed image");
  compress->add_option("--report", cfg.report, "Report file (JSON); stdout if omitted");
  compress->add_option("--rank", cfg.rank, "Tubal rank R")->capture_default_str();
  compress->add_option("--power", cfg.power, "Power / Krylov depth q")->capture_default_str();
  compress->add_option("--algo", cfg.algorithm, "power|krylov")->capture_default_str();
  add_sketch_options(compress);

  auto* completion = app.add_subcommand("complete", "Fill missing pixels by low-rank completion");
  completion->add_option("--input", cfg.input, "Ground-truth image (PPM/PGM)")->required();
  completion->add_option("--output", cfg.output, "Recovered image");
  completion->add_option("--observed", cfg.observed_output,
                         "Observed (masked) image; defaults next to --output");
  completion->add_option("--report", cfg.report, "Report file (JSON); stdout if omitted");
  completion->add_option("--rank", cfg.rank, "Tubal rank R")->capture_default_str();
  completion->add_option("--power", cfg.power, "Power / Krylov depth q")->capture_default_str();
  completion->add_option("--algo", cfg.algorithm, "power|krylov")->capture_default_str();
  completion->add_option("--iters", cfg.iterations, "Completion iterations")->capture_default_str();
  completion->add_option("--mask-ratio", cfg.mask_ratio, "Fraction of missing pixels")
      ->capture_default_str();
  completion->add_option("--mask-pattern", cfg.mask_pattern, "random|rows|columns")
      ->capture_default_str();
  completion->add_option("--mask-file", cfg.mask_file, "Mask image: 0 = missing");
  completion->add_option("--init", cfg.init, "Missing-entry initialization: zero|mean")
      ->capture_default_str();
  add_sketch_options(completion);

  auto* bench = app.add_subcommand("bench", "Synthetic spectrum sweep, CSV output");
  bench->add_option("--case", cfg.spectrum_case, "Spectrum: 1 (1/m^5), 2 (1/m^6), 3 (0.5^m)")
      ->required();
  bench->add_option("--n", cfg.sizes, "Tensor size(s) n (n x n x n)")->capture_default_str();
  bench->add_option("--rank", cfg.ranks, "Tubal rank(s) R");
  bench->add_option("--power", cfg.powers, "Depth(s) q");
  bench->add_option("--seeds", cfg.seeds, "Number of consecutive seeds")->capture_default_str();
  bench->add_option("--csv", cfg.csv, "Output table; stdout if omitted");
  add_sketch_options(bench);
  bench->get_option("--basis")->default_str("leading");
  completion->get_option("--basis")->default_str("leading");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kConfigError;
  }

  if (compress->parsed()) return cmd_compress(cfg, out, err);
  if (completion->parsed()) {
    if (completion->get_option("--basis")->count() == 0) cfg.basis = "leading";
    return cmd_complete(cfg, out, err);
  }
  if (bench->get_option("--basis")->count() == 0) cfg.basis = "leading";
  return cmd_bench(cfg, out, err);
}

}  // namespace tubal::cli
