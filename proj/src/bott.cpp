#include "quartics/bott.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace quartics {

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0)
      s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

std::int64_t weight_of(const LaurentMonomial& m, const WeightVector& w) {
  if (m.size() > w.w.size())
    throw std::invalid_argument("monomial has more characters than the weight vector");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    total += static_cast<std::int64_t>(m[i]) * w.w[i];
  return total;
}

mpz_class prod_weights(const RepElement& r, const WeightVector& w) {
  mpz_class product = 1;
  for (const auto& [m, mult] : r.terms()) {
    if (sgn(mult) < 0)
      throw std::domain_error("negative multiplicity of " + m.to_string());
    if (!mult.fits_ulong_p())
      throw std::domain_error("multiplicity too large for " + m.to_string());
    const std::int64_t weight = weight_of(m, w);
    if (weight == 0)
      return 0;
    mpz_class factor;
    const mpz_class base(static_cast<long>(weight));
    mpz_pow_ui(factor.get_mpz_t(), base.get_mpz_t(), mult.get_ui());
    product *= factor;
  }
  return product;
}

std::optional<ZeroWeight> find_zero_weight(const std::vector<FixedPoint>& points,
                                           const WeightVector& w) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const auto& [m, mult] : points[i].tangent.terms())
      if (weight_of(m, w) == 0)
        return ZeroWeight{i, m};
  return std::nullopt;
}

bool validate_weights(const std::vector<FixedPoint>& points, const WeightVector& w) {
  return !find_zero_weight(points, w).has_value();
}

WeightSearchResult random_weight_search(std::uint64_t seed,
                                        std::pair<std::int64_t, std::int64_t> range,
                                        const std::vector<FixedPoint>& points, std::size_t budget) {
  const auto [lo, hi] = range;
  if (lo > hi || hi - lo < 4)
    throw std::invalid_argument("weight range must hold five distinct integers");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    WeightVector candidate;
    std::set<std::int64_t> used;
    for (auto& wi : candidate.w) {
      do {
        wi = dist(rng);
      } while (!used.insert(wi).second);
    }
    if (validate_weights(points, candidate))
      return {candidate, attempt};
  }
  throw std::runtime_error("no valid weight vector found in " + std::to_string(budget) +
                           " attempts");
}

std::string point_label(const FixedPoint& p) {
  std::string label = p.hyperplane ? "h" + std::to_string(*p.hyperplane) + ":" : "";
  label += to_string(p.stage);
  label += ':';
  label += p.ideal.to_string();
  return label;
}

LocalizationResult bott_sum(const std::vector<FixedPoint>& points, const WeightVector& w,
                            bool keep_terms) {
  LocalizationResult result;
  result.value = 0;
  for (const auto& p : points) {
    mpz_class den = prod_weights(p.tangent, w);
    if (den == 0)
      throw std::domain_error("zero tangent weight at " + point_label(p));
    mpq_class term(prod_weights(p.fiber, w), den);
    term.canonicalize();
    result.value += term;
    if (keep_terms)
      result.per_point_terms.emplace_back(point_label(p), term);
  }
  return result;
}

}  // namespace quartics
