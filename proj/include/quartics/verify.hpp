#ifndef QUARTICS_VERIFY_HPP
#define QUARTICS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quartics/bott.hpp"
#include "quartics/fixedpoints.hpp"

namespace quartics {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Number of rational quartics on a general sextic in P(2,1^4).
inline constexpr long kExpectedCount = 6028452;

CheckResult check_census(const H3Census& h3, const std::vector<FixedPoint>& h4);
CheckResult check_duplicate_free(const std::vector<FixedPoint>& points);
/// Tangent sums 10 on H3 and 13 on H4; fiber sums 13 on H4 at degree 6.
CheckResult check_dimensions(const std::vector<FixedPoint>& h3, const std::vector<FixedPoint>& h4);
CheckResult check_no_trivial_tangent(const std::vector<FixedPoint>& points);
/// Stage 1: T_center + N == (V[2] - I) * dual(I). Stage 2: T_center + N ==
/// the first blow-up tangent at the candidate whose ideal is the center.
CheckResult check_center_tables(const std::vector<BlowupCenterDatum>& stage1,
                                const std::vector<BlowupCenterDatum>& stage2);
/// Flattening iteration reproduces every closed-form blow-up ideal and its
/// discard flag.
CheckResult check_flattening_oracle(const std::vector<BlowupCenterDatum>& stage1,
                                    const std::vector<BlowupCenterDatum>& stage2);
CheckResult check_lemma(const std::vector<FixedPoint>& h3);
CheckResult check_orbits(const std::vector<FixedPoint>& h3);
CheckResult check_reference_count(const std::vector<FixedPoint>& h4);
/// `seeds` random valid weight vectors from `range` all give the count.
CheckResult check_weight_independence(const std::vector<FixedPoint>& h4, std::uint64_t first_seed,
                                      int seeds, std::pair<std::int64_t, std::int64_t> range);
CheckResult check_invalid_weights_rejected(const std::vector<FixedPoint>& h4);

struct VerifyOptions {
  std::uint64_t first_seed = 1;
  int seeds = 10;
  std::pair<std::int64_t, std::int64_t> range{1, 10000};
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});
std::vector<CheckResult> run_verification(const std::vector<BlowupCenterDatum>& stage1,
                                          const std::vector<BlowupCenterDatum>& stage2,
                                          const VerifyOptions& options = {});

}  // namespace quartics

#endif  // QUARTICS_VERIFY_HPP
