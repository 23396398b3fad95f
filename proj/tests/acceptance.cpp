// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>

#include "quartics/bott.hpp"
#include "quartics/fixedpoints.hpp"
#include "quartics/verify.hpp"

#ifndef QUARTIC_COUNT_EXE
#error "QUARTIC_COUNT_EXE must point at the CLI binary"
#endif

using namespace quartics;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(QUARTIC_COUNT_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RepElement rep4(std::initializer_list<std::pair<std::string_view, int>> terms) {
  RepElement r;
  for (auto [text, mult] : terms)
    r.add(LaurentMonomial::parse(text, 4), mult);
  return r;
}

const H3Census& h3() {
  static const H3Census census = enumerate_h3();
  return census;
}

const std::vector<FixedPoint>& h4() {
  static const auto points = assemble_h4(h3().points);
  return points;
}

Outcome headline() {
  const auto start = std::chrono::steady_clock::now();
  auto [status, out] = run_cli("count");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = status == 0 && out == "6028452\n" && seconds < 1.0;
  return {ok, "output '" + out.substr(0, out.find('\n')) + "' in " + std::to_string(seconds) + " s"};
}

Outcome census() {
  const auto r = check_census(h3(), h4());
  return {r.passed, r.detail};
}

Outcome dimensions() {
  std::size_t checked = 0;
  for (const auto& p : h3().points)
    if (p.tangent.dimension() != 10)
      return {false, "H3 tangent " + p.tangent.dimension().get_str() + " at " + p.ideal.to_string()};
  for (const auto& p : h4()) {
    if (p.tangent.dimension() != 13 || p.fiber.dimension() != 13)
      return {false, "H4 dimension mismatch at " + point_label(p)};
    ++checked;
  }
  return {checked == 504, std::to_string(h3().points.size()) + " H3 tangents = 10; " +
                              std::to_string(checked) + " H4 tangents and fibers = 13"};
}

Outcome weight_independence() {
  // Sample raw candidates as the search does, counting those rejected by
  // validation; bott_sum must never see a zero denominator.
  std::size_t rejected_examples = 0;
  for (const auto& bad : {WeightVector{{0, 0, 0, 0, 0}}, WeightVector{{1, 1, 1, 1, 1}},
                          WeightVector{{5, 1, 2, 3, 3}}}) {
    if (validate_weights(h4(), bad))
      return {false, "zero-weight vector " + bad.to_string() + " accepted"};
    ++rejected_examples;
  }
  std::string detail;
  std::size_t attempts = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WeightSearchResult found;
    try {
      found = random_weight_search(seed, {1, 10000}, h4());
    } catch (const std::exception& e) {
      return {false, e.what()};
    }
    attempts += found.attempts;
    mpq_class value;
    try {
      value = bott_sum(h4(), found.weights).value;
    } catch (const std::domain_error& e) {
      return {false, std::string("division failure after validation: ") + e.what()};
    }
    if (value != kExpectedCount)
      return {false, "weights " + found.weights.to_string() + " give " + value.get_str()};
  }
  return {true, "10 seeds -> 6028452 (" + std::to_string(attempts) + " samples, " +
                    std::to_string(rejected_examples) + " zero-weight vectors rejected)"};
}

Outcome flattening() {
  const auto r = check_flattening_oracle(stage1_centers(), stage2_centers());
  return {r.passed, r.detail};
}

Outcome tables() {
  // Second-blow-up tangent at (x1^2, x1x2, x1x3^2), as displayed.
  const RepElement second = rep4({{"x1^-1*x3", 2},
                                  {"x1^-1*x2", 2},
                                  {"x2^-1*x3", 1},
                                  {"x3^-2*x0^2", 1},
                                  {"x1^-1*x2^-1*x3^2", 1},
                                  {"x1^-1*x3^-2*x2^3", 1},
                                  {"x1^-1*x3^-1*x2^2", 1},
                                  {"x1^-1*x3^-2*x2*x0^2", 1}});
  const MonomialIdeal second_base{LaurentMonomial::parse("x1^2", 4), LaurentMonomial::parse("x1*x2", 4),
                                  LaurentMonomial::parse("x1*x3^2", 4)};
  constexpr std::array<std::array<std::size_t, 4>, 6> s3{{
      {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}, {0, 3, 2, 1}, {0, 3, 1, 2}, {0, 2, 3, 1}}};
  std::size_t literal_matches = 0;
  for (const auto& c : stage2_centers())
    for (const auto& sigma : s3)
      if (c.base_ideal == second_base.relabel(sigma, 4)) {
        if (ambient_tangent(c) != second.relabel(sigma, 4))
          return {false, "second blow-up tangent differs at " + c.base_ideal.to_string()};
        ++literal_matches;
      }
  const auto r = check_center_tables(stage1_centers(), stage2_centers());
  return {r.passed && literal_matches == 6,
          r.detail + "; displayed second tangent matched at " + std::to_string(literal_matches) +
              " permuted centers"};
}

Outcome lemma() {
  const auto r = check_lemma(h3().points);
  return {r.passed, r.detail};
}

Outcome negatives() {
  const bool zeros = validate_weights(h4(), WeightVector{{0, 0, 0, 0, 0}});
  const bool ones = validate_weights(h4(), WeightVector{{1, 1, 1, 1, 1}});
  auto a = run_cli("fixed-points --json");
  auto b = run_cli("fixed-points --json");
  auto c = run_cli("fixed-points --h3-only");
  auto d = run_cli("fixed-points --h3-only");
  const bool identical = a.first == 0 && c.first == 0 && a.second == b.second && c.second == d.second &&
                         !a.second.empty();
  return {!zeros && !ones && identical,
          std::string("(0,0,0,0,0) ") + (zeros ? "accepted" : "rejected") + ", (1,1,1,1,1) " +
              (ones ? "accepted" : "rejected") + ", dumps " + (identical ? "byte-identical" : "differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 headline count 6028452", headline},
      {"AC2 fixed-point census 126/504", census},
      {"AC3 dimension and rank invariants", dimensions},
      {"AC4 weight independence", weight_independence},
      {"AC5 flattening oracle equivalence", flattening},
      {"AC6 center table consistency", tables},
      {"AC7 lemma on all H3 ideals", lemma},
      {"AC8 sanity negatives", negatives},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.passed ? 0 : 1;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << '/' << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
