// Command-line driver: count rational quartics on a sextic in P(2,1^4),
// dump torus-fixed points, run the verification suite, search weights.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quartics/bott.hpp"
#include "quartics/fixedpoint_io.hpp"
#include "quartics/fixedpoints.hpp"
#include "quartics/verify.hpp"

namespace {

using namespace quartics;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;

struct RunConfig {
  std::string command;
  std::vector<std::int64_t> weights;
  std::optional<std::uint64_t> seed;
  std::vector<std::int64_t> range{1, 10000};
  int degree = kCalabiYauDegree;
  bool json = false;
  bool show_terms = false;
  bool h3_only = false;
};

std::pair<std::int64_t, std::int64_t> range_of(const RunConfig& cfg) {
  return {cfg.range[0], cfg.range[1]};
}

int config_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitBadConfig;
}

// Explicit weights, a seeded random search, or the reference weights.
std::optional<WeightVector> choose_weights(const RunConfig& cfg,
                                           const std::vector<FixedPoint>& points,
                                           std::size_t* attempts) {
  if (!cfg.weights.empty()) {
    WeightVector w;
    std::copy(cfg.weights.begin(), cfg.weights.end(), w.w.begin());
    if (auto bad = find_zero_weight(points, w)) {
      std::cerr << "error: weights " << w.to_string() << " vanish on tangent character "
                << bad->monomial.to_string() << " at fixed point "
                << point_label(points[bad->point]) << '\n';
      return std::nullopt;
    }
    return w;
  }
  if (cfg.seed) {
    auto found = random_weight_search(*cfg.seed, range_of(cfg), points);
    if (attempts)
      *attempts = found.attempts;
    return found.weights;
  }
  return kReferenceWeights;
}

int cmd_count(const RunConfig& cfg) {
  if (cfg.degree != kCalabiYauDegree)
    return config_error("count is only defined for degree 6 (the Calabi-Yau degree); "
                        "use fixed-points to inspect other degrees");
  if (cfg.h3_only)
    return config_error("--h3-only applies to fixed-points only");
  if (!cfg.weights.empty() && cfg.seed)
    return config_error("--weights and --seed are mutually exclusive");

  const auto h4 = assemble_h4(enumerate_h3().points);
  std::size_t attempts = 0;
  auto w = choose_weights(cfg, h4, &attempts);
  if (!w)
    return kExitBadConfig;
  const auto result = bott_sum(h4, *w, cfg.show_terms);

  if (cfg.json) {
    nlohmann::ordered_json j;
    j["count"] = result.value.get_str();
    j["weights"] = w->w;
    if (cfg.seed)
      j["attempts"] = attempts;
    if (cfg.show_terms) {
      auto& terms = j["terms"] = nlohmann::ordered_json::array();
      for (const auto& [label, term] : result.per_point_terms)
        terms.push_back({{"point", label}, {"term", term.get_str()}});
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  if (cfg.show_terms)
    for (const auto& [label, term] : result.per_point_terms)
      std::cout << label << "  " << term.get_str() << '\n';
  if (cfg.seed)
    std::cerr << "weights " << w->to_string() << " (" << attempts << " attempts)\n";
  std::cout << result.value.get_str() << '\n';
  return kExitOk;
}

int cmd_fixed_points(const RunConfig& cfg) {
  if (cfg.degree < 0)
    return config_error("degree must be nonnegative");
  if (cfg.degree != kCalabiYauDegree)
    std::cerr << "note: fibers computed in degree " << cfg.degree
              << "; only degree 6 enters the curve count\n";
  const auto h3 = enumerate_h3(cfg.degree);
  const std::size_t copies = cfg.h3_only ? 1 : 4;
  const auto points = cfg.h3_only ? h3.points : assemble_h4(h3.points, cfg.degree);

  std::ostream& counts = cfg.json ? std::cerr : std::cout;
  counts << "grassmannian " << copies * h3.grassmannian << '\n'
         << "blowup1 " << copies * h3.blowup1 << '\n'
         << "blowup2 " << copies * h3.blowup2 << '\n'
         << "total " << points.size() << '\n';
  std::cout << (cfg.json ? dump_json(points) : dump_text(points));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.degree != kCalabiYauDegree)
    return config_error("verify checks the degree-6 rank balance; --degree must be 6");
  VerifyOptions options;
  options.first_seed = cfg.seed.value_or(1);
  options.range = range_of(cfg);
  const auto results = run_verification(options);
  bool all = true;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (cfg.json)
      j.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
  }
  if (cfg.json)
    std::cout << j.dump(2) << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

int cmd_weights_search(const RunConfig& cfg) {
  const auto h4 = assemble_h4(enumerate_h3().points);
  auto found = random_weight_search(cfg.seed.value_or(1), range_of(cfg), h4);
  if (cfg.json) {
    nlohmann::ordered_json j;
    j["weights"] = found.weights.w;
    j["attempts"] = found.attempts;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << found.weights.to_string() << '\n';
    std::cerr << found.attempts << " attempts\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count rational quartics on a general Calabi-Yau hypersurface in P(2,1^4)"};
  RunConfig cfg;
  app.add_option("command", cfg.command, "count | fixed-points | verify | weights-search")
      ->required()
      ->check(CLI::IsMember({"count", "fixed-points", "verify", "weights-search"}));
  app.add_option("--weights", cfg.weights, "Weights w0 w1 w2 w3 w4 of the one-parameter subgroup")
      ->expected(5);
  app.add_option("--seed", cfg.seed, "Seed for the random weight search");
  app.add_option("--range", cfg.range, "Inclusive range LO HI for random weights")->expected(2);
  app.add_option("--degree", cfg.degree, "Twist degree of the fiber bundle")->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_flag("--show-terms", cfg.show_terms, "Print the summand of every fixed point");
  app.add_flag("--h3-only", cfg.h3_only, "Dump the 126 fixed points of H3 instead of H4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (cfg.command == "count")
      return cmd_count(cfg);
    if (cfg.command == "fixed-points")
      return cmd_fixed_points(cfg);
    if (cfg.command == "verify")
      return cmd_verify(cfg);
    return cmd_weights_search(cfg);
  } catch (const std::invalid_argument& e) {
    return config_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
