#ifndef QUARTICS_REPRING_HPP
#define QUARTICS_REPRING_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace quartics {

/// A character of the diagonal torus acting on x0..xn, written as the
/// Laurent monomial x0^p0 * ... * xn^pn. Exponents may be negative.
///
/// The number of characters is fixed per ring context; combining
/// monomials of different lengths throws std::invalid_argument.
class LaurentMonomial {
public:
  LaurentMonomial() = default;
  explicit LaurentMonomial(std::vector<int> exponents)
      : exps_(std::move(exponents)) {}
  LaurentMonomial(std::initializer_list<int> exponents) : exps_(exponents) {}

  /// The trivial character 1 in a ring with `characters` variables.
  static LaurentMonomial one(std::size_t characters) {
    return LaurentMonomial(std::vector<int>(characters, 0));
  }
  /// The coordinate x_index in a ring with `characters` variables.
  static LaurentMonomial variable(std::size_t characters, std::size_t index);

  /// Parses the canonical `x0^a0*...*xn^an` rendering. Factors may be given
  /// in any order and without the `^1`; the ring size is taken from
  /// `characters`, or inferred from the largest index when zero.
  static LaurentMonomial parse(std::string_view text, std::size_t characters = 0);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }

  /// Sum of exponents.
  int degree() const;
  bool is_trivial() const;
  /// True if every exponent is nonnegative.
  bool is_polynomial() const;
  /// Invariance under x_index -> zeta * x_index for a primitive order-th
  /// root of unity, i.e. the exponent of x_index is divisible by `order`.
  bool is_invariant(std::size_t index = 0, int order = 2) const;
  /// this | other, for polynomial monomials of the same ring.
  bool divides(const LaurentMonomial& other) const;

  LaurentMonomial inverse() const;
  LaurentMonomial& operator*=(const LaurentMonomial& other);
  LaurentMonomial& operator/=(const LaurentMonomial& other);
  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }
  friend LaurentMonomial operator/(LaurentMonomial a, const LaurentMonomial& b) { return a /= b; }

  /// Moves variable i to position target[i] in a ring with `characters`
  /// variables. Used both for permuting x1,x2,x3 and for embedding a
  /// 4-character monomial into the 5-character ring.
  LaurentMonomial relabel(std::span<const std::size_t> target, std::size_t characters) const;

  /// Canonical rendering `x0^a0*x1^a1*...*xn^an`, every exponent written.
  std::string to_string() const;

  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
  friend auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;

private:
  void check_size(const LaurentMonomial& other) const;

  std::vector<int> exps_;
};

LaurentMonomial lcm(const LaurentMonomial& a, const LaurentMonomial& b);
LaurentMonomial gcd(const LaurentMonomial& a, const LaurentMonomial& b);

/// Element of the representation ring of the torus: a finite integer
/// combination of characters. Zero multiplicities are never stored and
/// terms iterate in lexicographic order of their exponent vectors.
class RepElement {
public:
  using Terms = std::map<LaurentMonomial, mpz_class>;

  RepElement() = default;
  /// Every listed monomial with multiplicity one (repeats accumulate).
  RepElement(std::initializer_list<LaurentMonomial> monomials);
  static RepElement from_monomials(std::span<const LaurentMonomial> monomials);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Number of distinct characters.
  std::size_t term_count() const { return terms_.size(); }
  /// Sum of multiplicities; may be negative for formal differences.
  mpz_class dimension() const;
  /// Multiplicity of `m` (zero when absent).
  mpz_class multiplicity(const LaurentMonomial& m) const;
  bool contains(const LaurentMonomial& m) const { return terms_.count(m) != 0; }
  /// Number of characters of the ring, or 0 for the empty element.
  std::size_t characters() const;
  bool has_negative_multiplicity() const;

  void add(const LaurentMonomial& m, const mpz_class& mult = 1);

  RepElement& operator+=(const RepElement& other);
  RepElement& operator-=(const RepElement& other);
  friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
  friend RepElement operator-(RepElement a, const RepElement& b) { return a -= b; }
  friend RepElement operator*(const RepElement& a, const RepElement& b);
  /// Multiplies every character by `m`.
  friend RepElement operator*(const RepElement& a, const LaurentMonomial& m);

  /// Same terms, each with multiplicity one.
  RepElement support() const;
  RepElement relabel(std::span<const std::size_t> target, std::size_t characters) const;
  std::string to_string() const;

  friend bool operator==(const RepElement&, const RepElement&) = default;

private:
  void check_size(const LaurentMonomial& m) const;

  Terms terms_;
};

RepElement rep_add(const RepElement& a, const RepElement& b);
RepElement rep_sub(const RepElement& a, const RepElement& b);
RepElement rep_mul(const RepElement& a, const RepElement& b);
/// Negates every exponent vector.
RepElement rep_dual(const RepElement& a);

/// Subgroup of the torus whose invariants we keep: x_index -> zeta * x_index
/// with zeta of order `order`. The quotient P(2,1^n) = P^n / Gamma uses
/// index 0, order 2.
struct InvarianceFilter {
  std::size_t index = 0;
  int order = 2;
};

/// All monomials of degree m in x0..xn (n+1 characters) that are invariant
/// under `filter`, each with multiplicity one.
RepElement invariant_sections(std::size_t n, int m, InvarianceFilter filter = {});

/// Ideal generated by (ordinary) monomials. The generator set is kept
/// minimal and sorted.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<LaurentMonomial> generators);
  MonomialIdeal(std::initializer_list<LaurentMonomial> generators)
      : MonomialIdeal(std::vector<LaurentMonomial>(generators)) {}

  const std::vector<LaurentMonomial>& generators() const { return gens_; }
  std::size_t characters() const { return gens_.empty() ? 0 : gens_.front().size(); }

  bool contains(const LaurentMonomial& m) const;
  /// The ideal with `m` adjoined.
  MonomialIdeal with(const LaurentMonomial& m) const;
  /// gcd of all generators.
  LaurentMonomial common_factor() const;
  bool has_common_factor() const;
  bool is_invariant(InvarianceFilter filter = {}) const;
  int max_degree() const;

  MonomialIdeal relabel(std::span<const std::size_t> target, std::size_t characters) const;
  /// The generators as a representation (multiplicity one each).
  RepElement as_rep() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::vector<LaurentMonomial> gens_;
};

/// Degree-k part of the ideal as a set of monomials: the support of the
/// union of g * V[k - deg g] over the generators g. Each monomial appears
/// once even if several generators reach it.
RepElement ideal_twist(const MonomialIdeal& ideal, int k, InvarianceFilter filter = {});

}  // namespace quartics

#endif  // QUARTICS_REPRING_HPP
