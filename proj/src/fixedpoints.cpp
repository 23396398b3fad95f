#include "quartics/fixedpoints.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quartics {

namespace {

constexpr std::size_t kH3Characters = 4;
constexpr std::size_t kH4Characters = 5;

LaurentMonomial mono(std::string_view text) { return LaurentMonomial::parse(text, kH3Characters); }

RepElement rep(std::initializer_list<std::string_view> texts) {
  RepElement r;
  for (auto t : texts)
    r.add(mono(t));
  return r;
}

std::vector<LaurentMonomial> monos(std::initializer_list<std::string_view> texts) {
  std::vector<LaurentMonomial> out;
  for (auto t : texts)
    out.push_back(mono(t));
  return out;
}

using Relabel = std::array<std::size_t, 4>;

// Substitutions (x1,x2,x3) -> (x_a,x_b,x_c) generating the remaining points
// of a type: swaps x1<->x2 and x1<->x3, or all of S3.
constexpr std::array<Relabel, 3> kSwapsOfX1{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 2, 1}}};
constexpr std::array<Relabel, 6> kAllPermutations{{
    {0, 1, 2, 3},
    {0, 2, 1, 3},
    {0, 1, 3, 2},
    {0, 3, 2, 1},
    {0, 3, 1, 2},
    {0, 2, 3, 1},
}};

BlowupCenterDatum relabel(const BlowupCenterDatum& c, const Relabel& p) {
  BlowupCenterDatum out;
  out.base_ideal = c.base_ideal.relabel(p, kH3Characters);
  out.tangent_to_center = c.tangent_to_center.relabel(p, kH3Characters);
  for (const auto& mu : c.normal_basis)
    out.normal_basis.push_back(mu.relabel(p, kH3Characters));
  out.lcm_base = c.lcm_base.relabel(p, kH3Characters);
  out.produces = c.produces;
  out.orbit = c.orbit;
  return out;
}

template <std::size_t N>
void append_orbit(std::vector<BlowupCenterDatum>& out, const BlowupCenterDatum& c,
                  const std::array<Relabel, N>& perms) {
  for (const auto& p : perms)
    out.push_back(relabel(c, p));
}

std::string grassmann_orbit(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  auto is_square = [](const LaurentMonomial& m) {
    return std::any_of(m.exponents().begin(), m.exponents().end(), [](int p) { return p == 2; });
  };
  bool has_x0 = std::any_of(g.begin(), g.end(), [](const auto& m) { return m[0] == 2; });
  int squares = static_cast<int>(std::count_if(g.begin(), g.end(), is_square));
  if (has_x0)
    return squares == 2 ? "(x0^2,x1^2)" : "(x0^2,x1x2)";
  return squares == 2 ? "(x1^2,x2^2)" : "(x1x2,x3^2)";
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Grassmannian:
      return "grassmannian";
    case Stage::Blowup1:
      return "blowup1";
    case Stage::Blowup2:
      return "blowup2";
  }
  return "unknown";
}

Stage stage_from_string(std::string_view name) {
  if (name == "grassmannian")
    return Stage::Grassmannian;
  if (name == "blowup1")
    return Stage::Blowup1;
  if (name == "blowup2")
    return Stage::Blowup2;
  throw std::invalid_argument("unknown stage: " + std::string(name));
}

RepElement grassmann_tangent(const MonomialIdeal& ideal) {
  const std::size_t chars = ideal.characters();
  RepElement quotient = invariant_sections(chars - 1, 2) - ideal.as_rep();
  return quotient * rep_dual(ideal.as_rep());
}

std::vector<FixedPoint> grassmann_fixed_points(int degree) {
  // Pairs of distinct invariant quadrics without a common variable; pairs
  // sharing a variable form the first blow-up center.
  const auto quadrics = invariant_sections(kH3Characters - 1, 2);
  std::vector<LaurentMonomial> q;
  for (const auto& [m, c] : quadrics.terms())
    q.push_back(m);

  std::vector<FixedPoint> out;
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = a + 1; b < q.size(); ++b) {
      if (!gcd(q[a], q[b]).is_trivial())
        continue;
      FixedPoint fp;
      fp.ideal = MonomialIdeal{q[a], q[b]};
      fp.tangent = grassmann_tangent(fp.ideal);
      fp.fiber = fiber_rep(fp.ideal, degree);
      fp.stage = Stage::Grassmannian;
      fp.orbit = grassmann_orbit(fp.ideal);
      out.push_back(std::move(fp));
    }
  }
  return out;
}

RepElement ambient_tangent(const BlowupCenterDatum& center) {
  return center.tangent_to_center + RepElement::from_monomials(center.normal_basis);
}

std::vector<BlowupCandidate> blowup_candidates(const BlowupCenterDatum& center,
                                               const LaurentMonomial& lcm_base) {
  std::vector<BlowupCandidate> out;
  for (const auto& mu : center.normal_basis) {
    LaurentMonomial generator = lcm_base * mu;
    if (!generator.is_polynomial())
      throw std::domain_error("inconsistent center data: " + lcm_base.to_string() + " * " +
                              mu.to_string() + " is not a monomial");
    BlowupCandidate c;
    c.direction = mu;
    c.ideal = center.base_ideal.with(generator);
    // L_xi + T_center + T_{P(N)}(x_xi)
    c.tangent = center.tangent_to_center;
    c.tangent.add(mu);
    const LaurentMonomial mu_inv = mu.inverse();
    for (const auto& eta : center.normal_basis)
      if (eta != mu)
        c.tangent.add(eta * mu_inv);
    c.discarded = c.ideal.has_common_factor();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FixedPoint> blowup_fixed_points(const BlowupCenterDatum& center,
                                            const LaurentMonomial& lcm_base, int degree) {
  std::vector<FixedPoint> out;
  for (auto& c : blowup_candidates(center, lcm_base)) {
    if (c.discarded)
      continue;
    FixedPoint fp;
    fp.fiber = fiber_rep(c.ideal, degree);
    fp.ideal = std::move(c.ideal);
    fp.tangent = std::move(c.tangent);
    fp.stage = center.produces;
    fp.orbit = center.orbit;
    out.push_back(std::move(fp));
  }
  return out;
}

std::vector<BlowupCenterDatum> stage1_centers() {
  BlowupCenterDatum pencil_with_line;
  pencil_with_line.base_ideal = MonomialIdeal{mono("x1*x2"), mono("x1*x3")};
  pencil_with_line.tangent_to_center =
      rep({"x1*x2^-1", "x1*x3^-1", "x2*x1^-1", "x3*x1^-1"});
  pencil_with_line.normal_basis = monos({
      "x0^2*x1^-1*x2^-1",
      "x0^2*x1^-1*x3^-1",
      "x2*x1^-1",
      "x3*x1^-1",
      "x3^2*x1^-1*x2^-1",
      "x2^2*x1^-1*x3^-1",
  });
  pencil_with_line.lcm_base = mono("x1*x2*x3");
  pencil_with_line.produces = Stage::Blowup1;
  pencil_with_line.orbit = "(x1x2,x1x3,f)";

  BlowupCenterDatum pencil_with_double;
  pencil_with_double.base_ideal = MonomialIdeal{mono("x1^2"), mono("x1*x2")};
  pencil_with_double.tangent_to_center =
      rep({"x3*x1^-1", "x3*x2^-1", "x2*x1^-1", "x3*x1^-1"});
  pencil_with_double.normal_basis = monos({
      "x0^2*x1^-1*x2^-1",
      "x0^2*x1^-2",
      "x3^2*x1^-1*x2^-1",
      "x3^2*x1^-2",
      "x2*x3*x1^-2",
      "x2^2*x1^-2",
  });
  pencil_with_double.lcm_base = mono("x1^2*x2");
  pencil_with_double.produces = Stage::Blowup1;
  pencil_with_double.orbit = "(x1^2,x1x2,g)";

  std::vector<BlowupCenterDatum> out;
  append_orbit(out, pencil_with_line, kSwapsOfX1);
  append_orbit(out, pencil_with_double, kAllPermutations);
  return out;
}

std::vector<BlowupCenterDatum> stage2_centers() {
  BlowupCenterDatum cubic_x3;
  cubic_x3.base_ideal = MonomialIdeal{mono("x1^2"), mono("x1*x2"), mono("x1*x3^2")};
  cubic_x3.tangent_to_center = rep({"x3*x1^-1", "x2*x1^-1", "x3*x2^-1", "x0^2*x3^-2"});
  cubic_x3.normal_basis = monos({
      "x1^-1*x3",
      "x1^-1*x2",
      "x1^-1*x2^-1*x3^2",
      "x1^-1*x3^-2*x2^3",
      "x1^-1*x3^-1*x2^2",
      "x1^-1*x3^-2*x2*x0^2",
  });
  cubic_x3.lcm_base = mono("x1*x2*x3^2");
  cubic_x3.produces = Stage::Blowup2;
  cubic_x3.orbit = "(x1^2,x1x2,x1x3^2,f)";

  BlowupCenterDatum cubic_x0;
  cubic_x0.base_ideal = MonomialIdeal{mono("x1^2"), mono("x1*x2"), mono("x1*x0^2")};
  cubic_x0.tangent_to_center = rep({"x3*x1^-1", "x2*x1^-1", "x3*x2^-1", "x3^2*x0^-2"});
  cubic_x0.normal_basis = monos({
      "x3*x1^-1",
      "x0^2*x1^-1*x2^-1",
      "x2^3*x1^-1*x0^-2",
      "x2^2*x3*x0^-2*x1^-1",
      "x2*x1^-1",
      "x2*x3^2*x0^-2*x1^-1",
  });
  cubic_x0.lcm_base = mono("x1*x2*x0^2");
  cubic_x0.produces = Stage::Blowup2;
  cubic_x0.orbit = "(x1^2,x1x2,x1x0^2,g)";

  std::vector<BlowupCenterDatum> out;
  append_orbit(out, cubic_x3, kAllPermutations);
  append_orbit(out, cubic_x0, kAllPermutations);
  return out;
}

MonomialIdeal limit_ideal_oracle(const MonomialIdeal& base, const LaurentMonomial& direction,
                                 int degree_bound, std::optional<std::vector<long>> coefficients) {
  if (direction.degree() != 0)
    throw std::invalid_argument("flattening direction must have degree 0: " +
                                direction.to_string());
  std::vector<LaurentMonomial> gens = base.generators();
  std::vector<long> coeff(gens.size(), 0);
  if (coefficients) {
    if (coefficients->size() != gens.size())
      throw std::invalid_argument("one coefficient per generator required");
    coeff = *coefficients;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (coeff[i] != 0 && !(gens[i] * direction).is_polynomial())
        throw std::domain_error("perturbation of " + gens[i].to_string() + " is not polynomial");
  } else {
    long next = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      LaurentMonomial moved = gens[i] * direction;
      if (moved.is_polynomial() && !base.contains(moved))
        coeff[i] = next++;
    }
  }

  // Lifting h_i m_i(t) - h_j m_j(t) leaves t * (c_i - c_j) * lcm * mu; the
  // syzygy lifts to first order iff that term lies in the current ideal.
  bool changed = true;
  while (changed) {
    changed = false;
    MonomialIdeal current(gens);
    for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < gens.size() && !changed; ++j) {
        const LaurentMonomial l = lcm(gens[i], gens[j]);
        if (l.degree() > degree_bound || coeff[i] == coeff[j])
          continue;
        LaurentMonomial g = l * direction;
        if (!g.is_polynomial())
          throw std::domain_error("syzygy of " + gens[i].to_string() + " and " +
                                  gens[j].to_string() + " has a non-monomial leading term");
        if (current.contains(g))
          continue;
        gens.push_back(g);
        coeff.push_back(0);
        changed = true;
      }
    }
  }
  return MonomialIdeal(std::move(gens));
}

H3Census enumerate_h3(int degree) { return enumerate_h3(stage1_centers(), stage2_centers(), degree); }

H3Census enumerate_h3(const std::vector<BlowupCenterDatum>& stage1,
                      const std::vector<BlowupCenterDatum>& stage2, int degree) {
  H3Census census;
  auto& pts = census.points;
  pts = grassmann_fixed_points(degree);
  census.grassmannian = pts.size();
  for (const auto& c : stage1) {
    auto more = blowup_fixed_points(c, c.lcm_base, degree);
    census.blowup1 += more.size();
    std::move(more.begin(), more.end(), std::back_inserter(pts));
  }
  for (const auto& c : stage2) {
    auto more = blowup_fixed_points(c, c.lcm_base, degree);
    census.blowup2 += more.size();
    std::move(more.begin(), more.end(), std::back_inserter(pts));
  }

  std::stable_sort(pts.begin(), pts.end(), [](const FixedPoint& a, const FixedPoint& b) {
    if (a.stage != b.stage)
      return a.stage < b.stage;
    return a.ideal < b.ideal;
  });
  std::set<MonomialIdeal> seen;
  for (const auto& p : pts)
    if (!seen.insert(p.ideal).second)
      throw std::logic_error("duplicate fixed point " + p.ideal.to_string());
  return census;
}

RepElement dual_projective_tangent(int hyperplane) {
  if (hyperplane < 1 || hyperplane > 4)
    throw std::invalid_argument("hyperplane index must be in 1..4");
  const auto i = static_cast<std::size_t>(hyperplane);
  const LaurentMonomial xi_inv = LaurentMonomial::variable(kH4Characters, i).inverse();
  RepElement t;
  for (std::size_t j = 1; j < kH4Characters; ++j)
    if (j != i)
      t.add(LaurentMonomial::variable(kH4Characters, j) * xi_inv);
  return t;
}

std::vector<FixedPoint> assemble_h4(const std::vector<FixedPoint>& h3, int degree) {
  return assemble_h4(h3, kHyperplaneCharts, degree);
}

std::vector<FixedPoint> assemble_h4(const std::vector<FixedPoint>& h3,
                                    const std::array<std::array<std::size_t, 4>, 4>& charts,
                                    int degree) {
  std::vector<FixedPoint> out;
  out.reserve(4 * h3.size());
  for (int k = 1; k <= 4; ++k) {
    const auto& chart = charts[k - 1];
    std::set<std::size_t> image(chart.begin(), chart.end());
    if (chart[0] != 0 || image.size() != 4 || image.count(static_cast<std::size_t>(k)) ||
        *image.rbegin() >= kH4Characters)
      throw std::invalid_argument("hyperplane chart " + std::to_string(k) +
                                  " must fix x0 and map onto the other coordinates");
    const LaurentMonomial xk = LaurentMonomial::variable(kH4Characters, k);
    const RepElement base_tangent = dual_projective_tangent(k);
    for (const auto& p : h3) {
      if (p.ideal.characters() != kH3Characters)
        throw std::invalid_argument("assemble_h4 expects H3 points in 4 characters");
      FixedPoint q;
      q.ideal = p.ideal.relabel(chart, kH4Characters).with(xk);
      q.tangent = p.tangent.relabel(chart, kH4Characters) + base_tangent;
      q.fiber = fiber_rep(q.ideal, degree);
      q.stage = p.stage;
      q.hyperplane = k;
      q.orbit = p.orbit;
      out.push_back(std::move(q));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FixedPoint& a, const FixedPoint& b) {
    if (a.hyperplane != b.hyperplane)
      return a.hyperplane < b.hyperplane;
    if (a.stage != b.stage)
      return a.stage < b.stage;
    return a.ideal < b.ideal;
  });
  return out;
}

RepElement fiber_rep(const MonomialIdeal& ideal, int degree) {
  if (degree < 0)
    throw std::invalid_argument("negative degree");
  RepElement sections = invariant_sections(ideal.characters() - 1, degree);
  RepElement fiber = sections - ideal_twist(ideal, degree);
  if (fiber.has_negative_multiplicity())
    throw std::logic_error("degree-" + std::to_string(degree) + " part of " + ideal.to_string() +
                           " exceeds the invariant sections");
  return fiber;
}

bool lemma_injectivity_check(const MonomialIdeal& ideal) {
  if (ideal.characters() != kH3Characters)
    throw std::invalid_argument("lemma check expects an ideal in x0..x3");
  const auto cubics = invariant_sections(kH3Characters - 1, 3);
  for (const auto& [m, c] : cubics.terms()) {
    if (ideal.contains(m))
      continue;
    bool all_inside = true;
    for (std::size_t i = 1; i < kH3Characters && all_inside; ++i)
      all_inside = ideal.contains(m * LaurentMonomial::variable(kH3Characters, i));
    if (all_inside)
      return false;
  }
  return true;
}

}  // namespace quartics
