#ifndef QUARTICS_FIXEDPOINTS_HPP
#define QUARTICS_FIXEDPOINTS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartics/repring.hpp"

namespace quartics {

/// Degree of the Calabi-Yau hypersurface; fibers are degree-6 sections.
inline constexpr int kCalabiYauDegree = 6;

/// Which stage of the construction of H3 a fixed point first appears in:
/// the Grassmannian of pencils of quadrics, or one of the two blow-ups.
enum class Stage { Grassmannian, Blowup1, Blowup2 };

std::string_view to_string(Stage stage);
Stage stage_from_string(std::string_view name);

/// A torus-fixed point of H3 (4 characters x0..x3) or of H4 (5 characters).
struct FixedPoint {
  MonomialIdeal ideal;
  RepElement tangent;
  /// Degree-6 sections of the structure sheaf of the curve.
  RepElement fiber;
  Stage stage = Stage::Grassmannian;
  /// For H4 points, the index i in 1..4 of the hyperplane {x_i = 0}
  /// spanned by the curve. Absent for H3 points.
  std::optional<int> hyperplane;
  /// Name of the orbit type, e.g. "(x1x2,x1x3,f)".
  std::string orbit;
};

/// Data of one torus-fixed point of a blow-up center: the center's tangent
/// space there and the degree-0 monomials spanning a semi-invariant basis
/// of the normal space.
struct BlowupCenterDatum {
  MonomialIdeal base_ideal;
  RepElement tangent_to_center;
  std::vector<LaurentMonomial> normal_basis;
  /// lcm of the generator pair whose syzygy produces the new generator.
  LaurentMonomial lcm_base;
  Stage produces = Stage::Blowup1;
  std::string orbit;
};

/// Tangent space of the Grassmannian at the pencil I: Hom(I_2, V_2 / I_2),
/// i.e. (V[2] - I) * dual(I).
RepElement grassmann_tangent(const MonomialIdeal& ideal);

/// The 12 fixed points of the Grassmannian lying off the first center.
std::vector<FixedPoint> grassmann_fixed_points(int degree = kCalabiYauDegree);

/// One fixed point over a center point, before the common-factor discard.
struct BlowupCandidate {
  LaurentMonomial direction;
  MonomialIdeal ideal;
  RepElement tangent;
  /// Generators share a variable; the point lies in the next center.
  bool discarded = false;
};

/// Ideal and tangent space (normal line + center tangent + tangent of the
/// projectivised normal space) for every normal direction of `center`.
/// Throws std::domain_error if lcm_base * mu has a negative exponent.
std::vector<BlowupCandidate> blowup_candidates(const BlowupCenterDatum& center,
                                               const LaurentMonomial& lcm_base);

/// Candidates of blowup_candidates() that survive the discard, with
/// fibers computed at `degree`.
std::vector<FixedPoint> blowup_fixed_points(const BlowupCenterDatum& center,
                                            const LaurentMonomial& lcm_base,
                                            int degree = kCalabiYauDegree);

/// Centers of the first blow-up: orbits of (x1x2,x1x3) and (x1^2,x1x2).
std::vector<BlowupCenterDatum> stage1_centers();
/// Centers of the second blow-up: orbits of (x1^2,x1x2,x1x3^2) and
/// (x1^2,x1x2,x1x0^2).
std::vector<BlowupCenterDatum> stage2_centers();

/// Ambient tangent at a center point: tangent_to_center + sum of the
/// normal directions.
RepElement ambient_tangent(const BlowupCenterDatum& center);

/// Flat limit at t = 0 of the family obtained by moving each generator m_i
/// of `base` to m_i + t * c_i * mu * m_i, computed to first order in t by
/// adjoining the leading terms of non-lifting pairwise syzygies until every
/// syzygy of degree <= degree_bound lifts.
///
/// c_i is taken from `coefficients` when given (one per generator, in
/// generator order); otherwise c_i is zero where mu * m_i is not a monomial
/// outside the ideal and pairwise distinct nonzero integers elsewhere.
/// Throws std::invalid_argument if mu is not of degree zero and
/// std::domain_error if a syzygy produces a non-monomial leading term.
MonomialIdeal limit_ideal_oracle(const MonomialIdeal& base, const LaurentMonomial& direction,
                                 int degree_bound,
                                 std::optional<std::vector<long>> coefficients = std::nullopt);

struct H3Census {
  std::vector<FixedPoint> points;
  std::size_t grassmannian = 0;
  std::size_t blowup1 = 0;
  std::size_t blowup2 = 0;
};

/// All 126 fixed points of H3, sorted by (stage, ideal). Throws
/// std::logic_error on a duplicate ideal.
H3Census enumerate_h3(int degree = kCalabiYauDegree);
H3Census enumerate_h3(const std::vector<BlowupCenterDatum>& stage1,
                      const std::vector<BlowupCenterDatum>& stage2,
                      int degree = kCalabiYauDegree);

/// Coordinates x0, x1, x2, x3 of H3 go to these coordinates of P(2,1^4) for
/// the curves in the hyperplane {x_k = 0}, k = 1..4 (row k-1).
inline constexpr std::array<std::array<std::size_t, 4>, 4> kHyperplaneCharts{{
    {0, 2, 3, 4},
    {0, 3, 4, 1},
    {0, 4, 1, 2},
    {0, 1, 2, 3},
}};

/// The 4 * |h3| fixed points of H4, sorted by (hyperplane, stage, ideal).
std::vector<FixedPoint> assemble_h4(const std::vector<FixedPoint>& h3,
                                    int degree = kCalabiYauDegree);
std::vector<FixedPoint> assemble_h4(const std::vector<FixedPoint>& h3,
                                    const std::array<std::array<std::size_t, 4>, 4>& charts,
                                    int degree = kCalabiYauDegree);

/// Tangent of the dual P^3 at the hyperplane {x_i = 0}: sum over j != i,
/// j in 1..4, of x_j / x_i.
RepElement dual_projective_tangent(int hyperplane);

/// V[d] - twist(I, d): the monomials of degree d outside the ideal.
/// Throws std::logic_error if a multiplicity turns negative.
RepElement fiber_rep(const MonomialIdeal& ideal, int degree = kCalabiYauDegree);

/// For an invariant monomial ideal in x0..x3: true iff no invariant cubic m
/// outside I has x1*m, x2*m, x3*m all in I.
bool lemma_injectivity_check(const MonomialIdeal& ideal);

}  // namespace quartics

#endif  // QUARTICS_FIXEDPOINTS_HPP
