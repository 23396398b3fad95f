#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "quartics/repring.hpp"

using namespace quartics;

namespace {

LaurentMonomial m4(std::string_view s) { return LaurentMonomial::parse(s, 4); }

// Every exponent vector in [0, m]^(n+1) summing to m with even x0 power.
std::size_t brute_force_invariant_count(std::size_t n, int m) {
  std::size_t count = 0;
  std::vector<int> e(n + 1, 0);
  while (true) {
    int sum = 0;
    for (int p : e)
      sum += p;
    if (sum == m && e[0] % 2 == 0)
      ++count;
    std::size_t i = 0;
    while (i < e.size() && e[i] == m)
      e[i++] = 0;
    if (i == e.size())
      break;
    ++e[i];
  }
  return count;
}

RepElement random_rep(std::mt19937& rng, std::size_t chars) {
  std::uniform_int_distribution<int> exp(-2, 2), mult(-3, 3), terms(0, 4);
  RepElement r;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(chars);
    for (int& p : e)
      p = exp(rng);
    r.add(LaurentMonomial(e), mult(rng));
  }
  return r;
}

MonomialIdeal random_invariant_ideal(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 2), count(1, 3);
  std::vector<LaurentMonomial> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    LaurentMonomial g{2 * (exp(rng) / 2), exp(rng), exp(rng), exp(rng)};
    if (g.degree() > 0)
      gens.push_back(g);
  }
  if (gens.empty())
    gens.push_back(m4("x1"));
  return MonomialIdeal(gens);
}

}  // namespace

TEST_CASE("laurent monomials render and parse canonically") {
  auto m = m4("x0^2*x1^-1*x2^-1");
  CHECK(m.to_string() == "x0^2*x1^-1*x2^-1*x3^0");
  CHECK(LaurentMonomial::parse(m.to_string()) == m);
  CHECK(m4("x2*x1") == LaurentMonomial{0, 1, 1, 0});
  CHECK(m.degree() == 0);
  CHECK_FALSE(m.is_polynomial());
  CHECK(m.is_invariant());
  CHECK_FALSE(m4("x0*x1").is_invariant());
  CHECK_THROWS_AS(LaurentMonomial::parse("y1^2"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentMonomial::parse("x5", 4), std::invalid_argument);
  CHECK_THROWS_AS(LaurentMonomial::parse("x1^a"), std::invalid_argument);
}

TEST_CASE("rep_add") {
  const RepElement a{m4("x1*x2^-1")};
  auto sum = rep_add(a, a);
  CHECK(sum.term_count() == 1);
  CHECK(sum.multiplicity(m4("x1*x2^-1")) == 2);

  RepElement neg;
  neg.add(m4("x1*x2^-1"), -1);
  CHECK(rep_add(a, neg).empty());

  RepElement five;
  five.add(LaurentMonomial{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(rep_add(a, five), std::invalid_argument);
}

TEST_CASE("rep_sub and rep_mul") {
  const RepElement x1{m4("x1")};
  CHECK(rep_sub(x1, x1).empty());

  const RepElement lhs{m4("x1"), m4("x2")};
  const RepElement rhs{m4("x0^-2")};
  CHECK(rep_mul(lhs, rhs) == RepElement{m4("x1*x0^-2"), m4("x2*x0^-2")});

  RepElement five;
  five.add(LaurentMonomial{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(rep_mul(x1, five), std::invalid_argument);
}

TEST_CASE("grassmann tangent of (x0^2, x1^2) has dimension 10") {
  // Independent count: 5 residual quadrics times 2 dual generators, all
  // products distinct.
  const RepElement ideal{m4("x0^2"), m4("x1^2")};
  const auto quotient = invariant_sections(3, 2) - ideal;
  CHECK(quotient.term_count() == 5);
  const auto tangent = rep_mul(quotient, rep_dual(ideal));
  CHECK(tangent.dimension() == 10);
}

TEST_CASE("rep_dual") {
  CHECK(rep_dual(RepElement{m4("x1*x2")}) == RepElement{m4("x1^-1*x2^-1")});
  CHECK(rep_dual(RepElement{m4("x1*x2"), m4("x1*x3")}) ==
        RepElement{m4("x1^-1*x2^-1"), m4("x1^-1*x3^-1")});

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto a = random_rep(rng, 4);
    auto b = random_rep(rng, 4);
    CHECK(rep_dual(rep_dual(a)) == a);
    CHECK(rep_dual(rep_mul(a, b)) == rep_mul(rep_dual(a), rep_dual(b)));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto a = random_rep(rng, 5);
    auto b = random_rep(rng, 5);
    auto c = random_rep(rng, 5);
    CHECK(rep_mul(a, b) == rep_mul(b, a));
    CHECK(rep_mul(rep_mul(a, b), c) == rep_mul(a, rep_mul(b, c)));
    CHECK(rep_mul(a, rep_add(b, c)) == rep_add(rep_mul(a, b), rep_mul(a, c)));
    CHECK(rep_sub(rep_add(a, b), b) == a);
    const auto ab = rep_mul(a, b);
    for (const auto& [m, k] : ab.terms())
      CHECK(k != 0);
  }
}

TEST_CASE("multiplicities are arbitrary precision") {
  RepElement r;
  const mpz_class huge("123456789012345678901234567890");
  r.add(m4("x1"), huge);
  auto sq = rep_mul(r, r);
  CHECK(sq.multiplicity(m4("x1^2")) == huge * huge);
}

TEST_CASE("invariant_sections") {
  CHECK(invariant_sections(3, 1) == RepElement{m4("x1"), m4("x2"), m4("x3")});
  CHECK(invariant_sections(3, 2) == RepElement{m4("x0^2"), m4("x1^2"), m4("x2^2"), m4("x3^2"),
                                               m4("x1*x2"), m4("x1*x3"), m4("x2*x3")});
  CHECK(invariant_sections(3, 6).term_count() == 50);
  CHECK(invariant_sections(4, 6).term_count() == 130);
  CHECK(invariant_sections(3, 0) == RepElement{LaurentMonomial::one(4)});

  for (std::size_t n = 1; n <= 4; ++n)
    for (int m = 0; m <= 8; ++m) {
      auto v = invariant_sections(n, m);
      CHECK(v.term_count() == brute_force_invariant_count(n, m));
      for (const auto& [mono, k] : v.terms()) {
        CHECK(k == 1);
        CHECK(mono.degree() == m);
        CHECK(mono[0] % 2 == 0);
      }
    }

  // The filter is parameterised: invariants of x1 -> i*x1 in degree 4.
  auto quartic = invariant_sections(2, 4, {1, 4});
  CHECK(quartic.term_count() == 6);
  CHECK(quartic.contains(LaurentMonomial{0, 4, 0}));
}

TEST_CASE("monomial ideals are kept minimal") {
  MonomialIdeal I{m4("x1*x2"), m4("x1*x2*x3"), m4("x1*x2")};
  CHECK(I.generators().size() == 1);
  CHECK(I.contains(m4("x1^2*x2")));
  CHECK_FALSE(I.contains(m4("x1*x3")));
  CHECK(I.has_common_factor());
  CHECK_FALSE((MonomialIdeal{m4("x0^2"), m4("x1^2")}).has_common_factor());
  CHECK_THROWS_AS(MonomialIdeal{m4("x1^-1")}, std::invalid_argument);
}

TEST_CASE("ideal_twist") {
  const MonomialIdeal I{m4("x1*x2"), m4("x1*x3")};
  const auto t = ideal_twist(I, 3);
  CHECK(t == RepElement{m4("x1^2*x2"), m4("x1*x2^2"), m4("x1*x2*x3"), m4("x1^2*x3"),
                        m4("x1*x3^2")});
  CHECK(t.multiplicity(m4("x1*x2*x3")) == 1);

  CHECK(ideal_twist(MonomialIdeal{m4("x0^2")}, 2) == RepElement{m4("x0^2")});
  CHECK(ideal_twist(MonomialIdeal{m4("x1^3")}, 2).empty());
}

TEST_CASE("ideal_twist agrees with a divisibility oracle and is monotone") {
  std::mt19937 rng(3);
  const auto v1 = invariant_sections(3, 1);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_invariant_ideal(rng);
    for (int k = 0; k <= 6; ++k) {
      RepElement oracle;
      const auto sections = invariant_sections(3, k);
      for (const auto& [m, c] : sections.terms()) {
        bool inside = false;
        for (const auto& g : I.generators())
          inside = inside || g.divides(m);
        if (inside)
          oracle.add(m);
      }
      const auto twisted = ideal_twist(I, k);
      CHECK(twisted == oracle);

      const auto next = ideal_twist(I, k + 1);
      const auto shifted = rep_mul(twisted, v1);
      for (const auto& [m, c] : shifted.terms())
        CHECK(next.contains(m));
    }
  }
}
