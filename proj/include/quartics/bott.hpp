#ifndef QUARTICS_BOTT_HPP
#define QUARTICS_BOTT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quartics/fixedpoints.hpp"
#include "quartics/repring.hpp"

namespace quartics {

/// One-parameter subgroup t -> (t^w0, ..., t^w4) of the torus.
struct WeightVector {
  std::array<std::int64_t, 5> w{};

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  std::string to_string() const;
};

/// Weights used by the original computation.
inline constexpr WeightVector kReferenceWeights{{267, 4, 17, 55, 160}};

/// Restriction of the character m to the subgroup w: sum of p_i * w_i.
/// Monomials with fewer than five characters use the leading weights.
std::int64_t weight_of(const LaurentMonomial& m, const WeightVector& w);

/// Product of the weights of all characters of r, with multiplicity.
/// Zero if any weight vanishes. Throws std::domain_error on a negative
/// multiplicity.
mpz_class prod_weights(const RepElement& r, const WeightVector& w);

/// First tangent character (point index, monomial) with weight zero.
struct ZeroWeight {
  std::size_t point;
  LaurentMonomial monomial;
};
std::optional<ZeroWeight> find_zero_weight(const std::vector<FixedPoint>& points,
                                           const WeightVector& w);

/// True iff no tangent character of any point restricts to weight zero.
bool validate_weights(const std::vector<FixedPoint>& points, const WeightVector& w);

struct WeightSearchResult {
  WeightVector weights;
  std::size_t attempts = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 100000;

/// Rejection sampling of weight vectors with pairwise distinct components
/// drawn uniformly from [lo, hi], deterministic in `seed`. Throws
/// std::runtime_error when `budget` attempts are exhausted and
/// std::invalid_argument when the range cannot hold five distinct values.
WeightSearchResult random_weight_search(std::uint64_t seed, std::pair<std::int64_t, std::int64_t> range,
                                        const std::vector<FixedPoint>& points,
                                        std::size_t budget = kDefaultSearchBudget);

struct LocalizationResult {
  mpq_class value;
  /// (label, summand) per point, in input order; filled on request.
  std::vector<std::pair<std::string, mpq_class>> per_point_terms;
};

/// Sum over the fixed points of prod_weights(fiber) / prod_weights(tangent).
/// Throws std::domain_error if a tangent weight vanishes.
LocalizationResult bott_sum(const std::vector<FixedPoint>& points, const WeightVector& w,
                            bool keep_terms = false);

/// "h<hyperplane>:<stage>:<ideal>" identifier of a fixed point.
std::string point_label(const FixedPoint& p);

}  // namespace quartics

#endif  // QUARTICS_BOTT_HPP
