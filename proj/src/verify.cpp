#include "quartics/verify.hpp"

#include <array>
#include <map>
#include <set>
#include <sstream>

namespace quartics {

namespace {

CheckResult make(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

constexpr std::array<std::array<std::size_t, 4>, 6> kS3{{
    {0, 1, 2, 3},
    {0, 2, 1, 3},
    {0, 1, 3, 2},
    {0, 3, 2, 1},
    {0, 3, 1, 2},
    {0, 2, 3, 1},
}};

}  // namespace

CheckResult check_census(const H3Census& h3, const std::vector<FixedPoint>& h4) {
  std::ostringstream os;
  os << "H3 " << h3.points.size() << " = " << h3.grassmannian << " + " << h3.blowup1 << " + "
     << h3.blowup2 << ", H4 " << h4.size();
  std::map<int, std::size_t> per_hyperplane;
  for (const auto& p : h4)
    ++per_hyperplane[p.hyperplane.value_or(0)];
  bool hyperplanes_even = per_hyperplane.size() == 4;
  for (const auto& [k, n] : per_hyperplane)
    hyperplanes_even = hyperplanes_even && k >= 1 && k <= 4 && n == h3.points.size();
  const bool ok = h3.points.size() == 126 && h3.grassmannian == 12 && h3.blowup1 == 42 &&
                  h3.blowup2 == 72 && h4.size() == 504 && hyperplanes_even;
  return make("census", ok, os.str());
}

CheckResult check_duplicate_free(const std::vector<FixedPoint>& points) {
  std::set<MonomialIdeal> seen;
  for (const auto& p : points)
    if (!seen.insert(p.ideal).second)
      return make("duplicate-free", false, "repeated ideal " + p.ideal.to_string());
  return make("duplicate-free", true, std::to_string(points.size()) + " distinct ideals");
}

CheckResult check_dimensions(const std::vector<FixedPoint>& h3, const std::vector<FixedPoint>& h4) {
  for (const auto& p : h3)
    if (p.tangent.dimension() != 10 || p.tangent.has_negative_multiplicity())
      return make("dimensions", false,
                  "H3 tangent of " + p.ideal.to_string() + " has dimension " +
                      p.tangent.dimension().get_str());
  for (const auto& p : h4) {
    if (p.tangent.dimension() != 13 || p.tangent.has_negative_multiplicity())
      return make("dimensions", false,
                  "H4 tangent of " + point_label(p) + " has dimension " +
                      p.tangent.dimension().get_str());
    if (p.fiber.dimension() != 13 || p.fiber.has_negative_multiplicity())
      return make("dimensions", false,
                  "H4 fiber of " + point_label(p) + " has rank " + p.fiber.dimension().get_str());
  }
  return make("dimensions", true,
              "tangent 10 on " + std::to_string(h3.size()) + " H3 points; tangent 13 and fiber 13 on " +
                  std::to_string(h4.size()) + " H4 points");
}

CheckResult check_no_trivial_tangent(const std::vector<FixedPoint>& points) {
  for (const auto& p : points)
    for (const auto& [m, c] : p.tangent.terms())
      if (m.is_trivial())
        return make("no-trivial-tangent", false, "trivial character at " + point_label(p));
  return make("no-trivial-tangent", true, std::to_string(points.size()) + " points");
}

CheckResult check_center_tables(const std::vector<BlowupCenterDatum>& stage1,
                                const std::vector<BlowupCenterDatum>& stage2) {
  std::map<MonomialIdeal, RepElement> candidate_tangent;
  for (const auto& c : stage1) {
    if (c.normal_basis.size() != 6)
      return make("center-tables", false, "normal basis size at " + c.base_ideal.to_string());
    if (ambient_tangent(c) != grassmann_tangent(c.base_ideal))
      return make("center-tables", false,
                  "T_B + N differs from (V[2]-I)*dual(I) at " + c.base_ideal.to_string());
    for (const auto& cand : blowup_candidates(c, c.lcm_base))
      candidate_tangent.emplace(cand.ideal, cand.tangent);
  }
  for (const auto& c : stage2) {
    if (c.normal_basis.size() != 6)
      return make("center-tables", false, "normal basis size at " + c.base_ideal.to_string());
    auto it = candidate_tangent.find(c.base_ideal);
    if (it == candidate_tangent.end())
      return make("center-tables", false,
                  "second center " + c.base_ideal.to_string() + " is not a first blow-up point");
    if (ambient_tangent(c) != it->second)
      return make("center-tables", false,
                  "T_D + N differs from the first blow-up tangent at " + c.base_ideal.to_string());
  }
  return make("center-tables", true,
              std::to_string(stage1.size()) + " first and " + std::to_string(stage2.size()) +
                  " second centers consistent");
}

CheckResult check_flattening_oracle(const std::vector<BlowupCenterDatum>& stage1,
                                    const std::vector<BlowupCenterDatum>& stage2) {
  std::size_t retained = 0, discarded = 0;
  for (const auto* stage : {&stage1, &stage2}) {
    for (const auto& c : *stage) {
      const int bound = c.base_ideal.max_degree() + 1;
      for (const auto& cand : blowup_candidates(c, c.lcm_base)) {
        MonomialIdeal limit = limit_ideal_oracle(c.base_ideal, cand.direction, bound);
        if (limit != cand.ideal)
          return make("flattening-oracle", false,
                      "limit " + limit.to_string() + " != closed form " + cand.ideal.to_string());
        if (limit.has_common_factor() != cand.discarded)
          return make("flattening-oracle", false, "discard flag differs at " + limit.to_string());
        ++(cand.discarded ? discarded : retained);
      }
    }
  }
  const bool ok = retained == 114 && discarded == 12;
  return make("flattening-oracle", ok,
              std::to_string(retained) + " retained and " + std::to_string(discarded) +
                  " discarded candidates agree");
}

CheckResult check_lemma(const std::vector<FixedPoint>& h3) {
  for (const auto& p : h3)
    if (!lemma_injectivity_check(p.ideal))
      return make("lemma", false, "fails at " + p.ideal.to_string());
  return make("lemma", true, "holds at all " + std::to_string(h3.size()) + " ideals");
}

CheckResult check_orbits(const std::vector<FixedPoint>& h3) {
  std::map<MonomialIdeal, const FixedPoint*> by_ideal;
  std::map<std::string, std::size_t> sizes;
  for (const auto& p : h3) {
    by_ideal.emplace(p.ideal, &p);
    ++sizes[p.orbit];
  }
  for (const auto& p : h3) {
    for (const auto& sigma : kS3) {
      auto it = by_ideal.find(p.ideal.relabel(sigma, 4));
      if (it == by_ideal.end() || it->second->orbit != p.orbit)
        return make("orbits", false, "image of " + p.ideal.to_string() + " missing from its type");
      if (it->second->tangent != p.tangent.relabel(sigma, 4))
        return make("orbits", false, "tangent not equivariant at " + p.ideal.to_string());
    }
  }
  const std::map<std::string, std::size_t> expected{
      {"(x0^2,x1^2)", 3},          {"(x0^2,x1x2)", 3},           {"(x1^2,x2^2)", 3},
      {"(x1x2,x3^2)", 3},          {"(x1x2,x1x3,f)", 18},        {"(x1^2,x1x2,g)", 24},
      {"(x1^2,x1x2,x1x3^2,f)", 36}, {"(x1^2,x1x2,x1x0^2,g)", 36},
  };
  std::ostringstream os;
  for (const auto& [name, n] : sizes)
    os << name << ':' << n << ' ';
  return make("orbits", sizes == expected, os.str());
}

CheckResult check_reference_count(const std::vector<FixedPoint>& h4) {
  if (!validate_weights(h4, kReferenceWeights))
    return make("reference-count", false, "reference weights rejected");
  auto r = bott_sum(h4, kReferenceWeights);
  return make("reference-count", r.value == kExpectedCount,
              "weights " + kReferenceWeights.to_string() + " -> " + r.value.get_str());
}

CheckResult check_weight_independence(const std::vector<FixedPoint>& h4, std::uint64_t first_seed,
                                      int seeds, std::pair<std::int64_t, std::int64_t> range) {
  std::ostringstream os;
  bool ok = true;
  for (int i = 0; i < seeds; ++i) {
    auto found = random_weight_search(first_seed + static_cast<std::uint64_t>(i), range, h4);
    auto r = bott_sum(h4, found.weights);
    os << '[' << found.weights.to_string() << "]->" << r.value.get_str() << ' ';
    ok = ok && r.value == kExpectedCount;
  }
  return make("weight-independence", ok, os.str());
}

CheckResult check_invalid_weights_rejected(const std::vector<FixedPoint>& h4) {
  const bool zeros = validate_weights(h4, WeightVector{{0, 0, 0, 0, 0}});
  const bool ones = validate_weights(h4, WeightVector{{1, 1, 1, 1, 1}});
  return make("invalid-weights-rejected", !zeros && !ones, "(0,0,0,0,0) and (1,1,1,1,1)");
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  return run_verification(stage1_centers(), stage2_centers(), options);
}

std::vector<CheckResult> run_verification(const std::vector<BlowupCenterDatum>& stage1,
                                          const std::vector<BlowupCenterDatum>& stage2,
                                          const VerifyOptions& options) {
  std::vector<CheckResult> results;
  H3Census h3;
  std::vector<FixedPoint> h4;
  try {
    h3 = enumerate_h3(stage1, stage2);
    h4 = assemble_h4(h3.points);
  } catch (const std::exception& e) {
    results.push_back(make("enumeration", false, e.what()));
    return results;
  }
  // Later checks need sane data; catch per check so one failure does not
  // hide the others.
  auto run = [&](const char* name, auto&& fn) {
    try {
      results.push_back(fn());
    } catch (const std::exception& e) {
      results.push_back(make(name, false, e.what()));
    }
  };
  run("census", [&] { return check_census(h3, h4); });
  run("duplicate-free", [&] { return check_duplicate_free(h4); });
  run("dimensions", [&] { return check_dimensions(h3.points, h4); });
  run("no-trivial-tangent", [&] { return check_no_trivial_tangent(h4); });
  run("center-tables", [&] { return check_center_tables(stage1, stage2); });
  run("flattening-oracle", [&] { return check_flattening_oracle(stage1, stage2); });
  run("lemma", [&] { return check_lemma(h3.points); });
  run("orbits", [&] { return check_orbits(h3.points); });
  run("reference-count", [&] { return check_reference_count(h4); });
  run("weight-independence", [&] {
    return check_weight_independence(h4, options.first_seed, options.seeds, options.range);
  });
  run("invalid-weights-rejected", [&] { return check_invalid_weights_rejected(h4); });
  return results;
}

}  // namespace quartics
