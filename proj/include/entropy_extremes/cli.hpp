#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "entropy_extremes/bounds.hpp"
#include "entropy_extremes/channel.hpp"
#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/io.hpp"
#include "entropy_extremes/order.hpp"
#include "entropy_extremes/prob_vec.hpp"
#include "entropy_extremes/region.hpp"
#include "entropy_extremes/verify.hpp"

#include "CLI11.hpp"

namespace entropy_extremes::cli {

namespace detail {

inline MeasureKind measure_kind_from(const std::string& name) {
  if (name == "alpha-norm") return MeasureKind::alpha_norm;
  if (name == "renyi") return MeasureKind::renyi;
  if (name == "tsallis") return MeasureKind::tsallis;
  if (name == "type-beta") return MeasureKind::type_beta;
  if (name == "gamma") return MeasureKind::gamma_entropy;
  if (name == "r-norm") return MeasureKind::r_norm;
  throw Error("unknown measure: " + name);
}

inline int thread_cap_from_env() {
  const char* raw = std::getenv("ENTROPY_EXTREMES_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  const long value = std::strtol(raw, nullptr, 10);
  return value >= 1 ? static_cast<int>(value) : 1;
}

// Requested worker count (0 = hardware default), capped by the
// ENTROPY_EXTREMES_THREADS environment variable when set.
inline int resolve_threads(int requested) {
  int threads = requested >= 1
                    ? requested
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int cap = thread_cap_from_env();
  if (cap >= 1) threads = std::min(threads, cap);
  return threads;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight bounds between Shannon entropy and power norms of finite distributions"};
  app.require_subcommand(1);

  auto* bound = app.add_subcommand("bound", "Print tight two-sided bounds for one distribution as JSON");
  std::string bound_dist;
  std::string bound_measure = "alpha-norm";
  std::string bound_order;
  bool bound_bits = false;
  bound->add_option("--dist", bound_dist,
                    "Distribution: inline JSON array, inline CSV row, or a file path")
      ->required();
  bound->add_option("--measure", bound_measure, "Measure to bound (default alpha-norm)")
      ->check(CLI::IsMember({"alpha-norm", "renyi", "tsallis", "type-beta", "gamma", "r-norm",
                             "renyi-divergence", "shannon"}));
  bound->add_option("--order", bound_order, "Order alpha/t; 'inf' for the max-entry norm")
      ->required();
  bound->add_flag("--bits", bound_bits, "Display logarithmic values in bits");

  auto* region = app.add_subcommand("region", "Write boundary curves of the feasible region");
  int region_n = 0;
  int region_resolution = 512;
  std::string region_measure = "alpha-norm";
  std::string region_order;
  std::string region_out;
  std::string region_json;
  double region_rho = 0.0;
  region->add_option("--n", region_n, "Alphabet size")->required()->check(CLI::Range(2, 1 << 20));
  region->add_option("--measure", region_measure, "Curve measure (default alpha-norm)")
      ->check(CLI::IsMember({"alpha-norm", "renyi", "tsallis", "type-beta", "gamma", "r-norm",
                             "renyi-divergence", "gallager-e0"}));
  region->add_option("--order", region_order, "Order alpha/t (all measures except gallager-e0)");
  region->add_option("--rho", region_rho, "Gallager rho > -1 (measure gallager-e0 only)");
  region->add_option("--resolution", region_resolution, "Points per curve (default 512)")
      ->check(CLI::Range(2, 1 << 22));
  region->add_option("--out", region_out, "Output CSV path")->required();
  region->add_option("--json", region_json, "Optional JSON mirror path");

  auto* channel = app.add_subcommand("channel", "Classify a channel or evaluate exponent bounds");
  std::string channel_matrix;
  std::string channel_dist;
  bool channel_classify = false;
  bool channel_e0 = false;
  bool channel_e0_bounds = false;
  bool channel_bits = false;
  double channel_rho = 0.0;
  channel->add_option("--matrix", channel_matrix,
                      "Channel matrix file: JSON {\"matrix\": [[...]]} or CSV rows")
      ->required();
  channel->add_flag("--classify", channel_classify,
                    "Report dispersive / focusing / strongly-symmetric flags");
  channel->add_flag("--e0", channel_e0, "Evaluate the Gallager exponent at --rho");
  channel->add_flag("--e0-bounds", channel_e0_bounds,
                    "Two-sided exponent bounds at --rho under the uniform input");
  channel->add_option("--rho", channel_rho, "Gallager rho > -1");
  channel->add_option("--dist", channel_dist, "Input distribution for --e0 (default uniform)");
  channel->add_flag("--bits", channel_bits, "Display logarithmic values in bits");

  auto* verify = app.add_subcommand("verify", "Run the Monte-Carlo invariant suite");
  VerifyOptions vopts;
  int verify_threads = 0;
  verify->add_option("--n", vopts.n, "Alphabet size (default 5)")->check(CLI::Range(2, 4096));
  verify->add_option("--samples", vopts.samples, "Sample budget (default 100000)")
      ->check(CLI::Range(static_cast<long long>(1), static_cast<long long>(1000000000000LL)));
  verify->add_option("--seed", vopts.seed, "RNG seed (default 42)");
  verify->add_option("--tolerance", vopts.tolerance, "Sandwich slack (default 1e-9)");
  verify->add_option("--threads", verify_threads,
                     "Workers (default: hardware, capped by ENTROPY_EXTREMES_THREADS)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (*bound) {
      const ProbVec p = io::parse_prob_vec_arg(bound_dist);
      const Order order = parse_order(bound_order);
      BoundReport rep = [&]() -> BoundReport {
        if (bound_measure == "shannon") return entropy_bounds_at_norm(p, order);
        if (bound_measure == "renyi-divergence") return renyi_divergence_bounds(p, order);
        return measure_bounds_at_entropy(p,
                                         MeasureSpec(detail::measure_kind_from(bound_measure), order));
      }();
      out << io::to_json(rep, bound_bits).dump(2) << "\n";
      return 0;
    }

    if (*region) {
      std::vector<RegionCurve> curves;
      if (region_measure == "gallager-e0") {
        if (region->count("--rho") == 0) {
          err << "error: --measure gallager-e0 needs --rho\n";
          return 1;
        }
        auto pair = e0_boundary_curves(region_n, region_rho, region_resolution);
        curves.push_back(std::move(pair.first));
        curves.push_back(std::move(pair.second));
      } else {
        if (region->count("--order") == 0) {
          err << "error: --measure " << region_measure << " needs --order\n";
          return 1;
        }
        const Order order = parse_order(region_order);
        const MeasureSpec spec = region_measure == "renyi-divergence"
                                     ? MeasureSpec(MeasureKind::renyi, order)
                                     : MeasureSpec(detail::measure_kind_from(region_measure), order);
        const XAxis axis = region_measure == "renyi-divergence"
                               ? XAxis::rel_entropy_from_uniform
                               : XAxis::shannon_entropy;
        auto pair = boundary_curves(region_n, spec, axis, region_resolution);
        curves.push_back(std::move(pair.first));
        curves.push_back(std::move(pair.second));
      }
      emit_csv(curves, region_out);
      out << "wrote " << region_out << " ("
          << curves[0].points.size() + curves[1].points.size() << " points)\n";
      if (!region_json.empty()) {
        std::ofstream jf(region_json, std::ios::binary);
        if (!jf) throw IoError("cannot open for writing: " + region_json);
        jf << curves_to_json(curves).dump(2) << "\n";
        if (!jf) throw IoError("failed to write: " + region_json);
        out << "wrote " << region_json << "\n";
      }
      return 0;
    }

    if (*channel) {
      const int modes = (channel_classify ? 1 : 0) + (channel_e0 ? 1 : 0) +
                        (channel_e0_bounds ? 1 : 0);
      if (modes != 1) {
        err << "error: choose exactly one of --classify, --e0, --e0-bounds\n";
        return 1;
      }
      const Channel ch(io::parse_matrix_file(channel_matrix));
      if (channel_classify) {
        const ChannelClass cls = classify(ch);
        nlohmann::ordered_json doc;
        doc["dispersive"] = cls.dispersive;
        doc["focusing"] = cls.focusing;
        doc["strongly_symmetric"] = cls.strongly_symmetric;
        out << doc.dump(2) << "\n";
        return 0;
      }
      if (channel->count("--rho") == 0) {
        err << "error: --e0 and --e0-bounds need --rho\n";
        return 1;
      }
      if (channel_e0) {
        const ProbVec input = channel_dist.empty() ? ProbVec::uniform(ch.input_size())
                                                   : io::parse_prob_vec_arg(channel_dist);
        const double value = gallager_e0(ch, input, channel_rho);
        nlohmann::ordered_json doc;
        doc["rho"] = channel_rho;
        doc["e0"] = channel_bits ? value / std::log(2.0) : value;
        out << doc.dump(2) << "\n";
        return 0;
      }
      out << io::to_json(e0_bounds(ch, channel_rho), channel_bits).dump(2) << "\n";
      return 0;
    }

    if (*verify) {
      vopts.threads = detail::resolve_threads(verify_threads);
      const std::vector<CheckOutcome> report = run_verification(vopts);
      out << "verify n=" << vopts.n << " samples=" << vopts.samples << " seed=" << vopts.seed
          << " tolerance=" << vopts.tolerance << "\n";
      out << format_verification_report(report);
      return total_violations(report) == 0 ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  if (argc > 1) args.reserve(static_cast<std::size_t>(argc - 1));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), std::cout, std::cerr);
}

}  // namespace entropy_extremes::cli
