#include "quartics/repring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quartics {

// ---------------------------------------------------------------------------
// LaurentMonomial

LaurentMonomial LaurentMonomial::variable(std::size_t characters, std::size_t index) {
  if (index >= characters)
    throw std::invalid_argument("variable index out of range");
  std::vector<int> e(characters, 0);
  e[index] = 1;
  return LaurentMonomial(std::move(e));
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed monomial: " + std::string(whole));
  return value;
}

}  // namespace

LaurentMonomial LaurentMonomial::parse(std::string_view text, std::size_t characters) {
  std::vector<std::pair<std::size_t, int>> factors;
  std::size_t max_index = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (factor.size() < 2 || factor[0] != 'x')
      throw std::invalid_argument("malformed monomial: " + std::string(text));
    auto caret = factor.find('^');
    auto index = static_cast<std::size_t>(parse_int(factor.substr(1, caret - 1), text));
    int exponent = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), text);
    factors.emplace_back(index, exponent);
    max_index = std::max(max_index, index);
  }
  if (factors.empty())
    throw std::invalid_argument("empty monomial");
  if (characters == 0)
    characters = max_index + 1;
  if (max_index >= characters)
    throw std::invalid_argument("monomial has more characters than the ring: " + std::string(text));
  std::vector<int> e(characters, 0);
  for (auto [i, p] : factors)
    e[i] += p;
  return LaurentMonomial(std::move(e));
}

int LaurentMonomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool LaurentMonomial::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int p) { return p == 0; });
}

bool LaurentMonomial::is_polynomial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int p) { return p >= 0; });
}

bool LaurentMonomial::is_invariant(std::size_t index, int order) const {
  return index >= exps_.size() || exps_[index] % order == 0;
}

bool LaurentMonomial::divides(const LaurentMonomial& other) const {
  check_size(other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

LaurentMonomial LaurentMonomial::inverse() const {
  LaurentMonomial r = *this;
  for (int& p : r.exps_)
    p = -p;
  return r;
}

LaurentMonomial& LaurentMonomial::operator*=(const LaurentMonomial& other) {
  check_size(other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    exps_[i] += other.exps_[i];
  return *this;
}

LaurentMonomial& LaurentMonomial::operator/=(const LaurentMonomial& other) {
  check_size(other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    exps_[i] -= other.exps_[i];
  return *this;
}

LaurentMonomial LaurentMonomial::relabel(std::span<const std::size_t> target,
                                         std::size_t characters) const {
  if (target.size() != exps_.size())
    throw std::invalid_argument("relabel map does not match character count");
  std::vector<int> e(characters, 0);
  std::vector<bool> used(characters, false);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (target[i] >= characters || used[target[i]])
      throw std::invalid_argument("relabel map is not injective into the target ring");
    used[target[i]] = true;
    e[target[i]] = exps_[i];
  }
  return LaurentMonomial(std::move(e));
}

std::string LaurentMonomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i > 0)
      s += '*';
    s += 'x';
    s += std::to_string(i);
    s += '^';
    s += std::to_string(exps_[i]);
  }
  return s;
}

void LaurentMonomial::check_size(const LaurentMonomial& other) const {
  if (other.exps_.size() != exps_.size())
    throw std::invalid_argument("mismatched character count: " + std::to_string(exps_.size()) +
                                " vs " + std::to_string(other.exps_.size()));
}

LaurentMonomial lcm(const LaurentMonomial& a, const LaurentMonomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mismatched character count");
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    e[i] = std::max(a[i], b[i]);
  return LaurentMonomial(std::move(e));
}

LaurentMonomial gcd(const LaurentMonomial& a, const LaurentMonomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mismatched character count");
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    e[i] = std::min(a[i], b[i]);
  return LaurentMonomial(std::move(e));
}

// ---------------------------------------------------------------------------
// RepElement

RepElement::RepElement(std::initializer_list<LaurentMonomial> monomials) {
  for (const auto& m : monomials)
    add(m);
}

RepElement RepElement::from_monomials(std::span<const LaurentMonomial> monomials) {
  RepElement r;
  for (const auto& m : monomials)
    r.add(m);
  return r;
}

mpz_class RepElement::dimension() const {
  mpz_class total = 0;
  for (const auto& [m, c] : terms_)
    total += c;
  return total;
}

mpz_class RepElement::multiplicity(const LaurentMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::size_t RepElement::characters() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

bool RepElement::has_negative_multiplicity() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) < 0; });
}

void RepElement::check_size(const LaurentMonomial& m) const {
  if (!terms_.empty() && terms_.begin()->first.size() != m.size())
    throw std::invalid_argument("mismatched character count: " +
                                std::to_string(terms_.begin()->first.size()) + " vs " +
                                std::to_string(m.size()));
}

void RepElement::add(const LaurentMonomial& m, const mpz_class& mult) {
  if (mult == 0)
    return;
  check_size(m);
  auto [it, inserted] = terms_.try_emplace(m, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0)
      terms_.erase(it);
  }
}

RepElement& RepElement::operator+=(const RepElement& other) {
  for (const auto& [m, c] : other.terms_)
    add(m, c);
  return *this;
}

RepElement& RepElement::operator-=(const RepElement& other) {
  for (const auto& [m, c] : other.terms_)
    add(m, -c);
  return *this;
}

RepElement operator*(const RepElement& a, const RepElement& b) {
  RepElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add(ma * mb, ca * cb);
  return r;
}

RepElement operator*(const RepElement& a, const LaurentMonomial& m) {
  RepElement r;
  for (const auto& [ma, ca] : a.terms_)
    r.terms_.emplace(ma * m, ca);
  return r;
}

RepElement RepElement::support() const {
  RepElement r;
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(m, 1);
  return r;
}

RepElement RepElement::relabel(std::span<const std::size_t> target, std::size_t characters) const {
  RepElement r;
  for (const auto& [m, c] : terms_)
    r.add(m.relabel(target, characters), c);
  return r;
}

std::string RepElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    if (c != 1)
      os << c.get_str() << '*';
    os << m.to_string();
  }
  return os.str();
}

RepElement rep_add(const RepElement& a, const RepElement& b) { return a + b; }
RepElement rep_sub(const RepElement& a, const RepElement& b) { return a - b; }
RepElement rep_mul(const RepElement& a, const RepElement& b) { return a * b; }

RepElement rep_dual(const RepElement& a) {
  RepElement r;
  for (const auto& [m, c] : a.terms())
    r.add(m.inverse(), c);
  return r;
}

// ---------------------------------------------------------------------------
// invariant sections

namespace {

void enumerate_degree(std::vector<int>& e, std::size_t pos, int remaining,
                      const InvarianceFilter& filter, RepElement& out) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    LaurentMonomial m(e);
    if (m.is_invariant(filter.index, filter.order))
      out.add(m);
    return;
  }
  for (int p = remaining; p >= 0; --p) {
    e[pos] = p;
    enumerate_degree(e, pos + 1, remaining - p, filter, out);
  }
}

}  // namespace

RepElement invariant_sections(std::size_t n, int m, InvarianceFilter filter) {
  if (m < 0)
    throw std::invalid_argument("negative degree");
  RepElement out;
  std::vector<int> e(n + 1, 0);
  enumerate_degree(e, 0, m, filter, out);
  return out;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::vector<LaurentMonomial> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    if (!g.is_polynomial())
      throw std::invalid_argument("ideal generator with negative exponent: " + g.to_string());
    if (!generators.empty() && g.size() != generators.front().size())
      throw std::invalid_argument("mismatched character count in ideal generators");
  }
  for (const auto& g : generators) {
    bool redundant = std::any_of(generators.begin(), generators.end(), [&](const auto& h) {
      return h != g && h.divides(g);
    });
    if (!redundant)
      gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const LaurentMonomial& m) const {
  if (!m.is_polynomial())
    return false;
  return std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::with(const LaurentMonomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return MonomialIdeal(std::move(gens));
}

LaurentMonomial MonomialIdeal::common_factor() const {
  if (gens_.empty())
    throw std::logic_error("common factor of the zero ideal");
  LaurentMonomial g = gens_.front();
  for (const auto& h : gens_)
    g = gcd(g, h);
  return g;
}

bool MonomialIdeal::has_common_factor() const {
  return !gens_.empty() && !common_factor().is_trivial();
}

bool MonomialIdeal::is_invariant(InvarianceFilter filter) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const auto& g) { return g.is_invariant(filter.index, filter.order); });
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_)
    d = std::max(d, g.degree());
  return d;
}

MonomialIdeal MonomialIdeal::relabel(std::span<const std::size_t> target,
                                     std::size_t characters) const {
  std::vector<LaurentMonomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_)
    gens.push_back(g.relabel(target, characters));
  return MonomialIdeal(std::move(gens));
}

RepElement MonomialIdeal::as_rep() const { return RepElement::from_monomials(gens_); }

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0)
      s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

RepElement ideal_twist(const MonomialIdeal& ideal, int k, InvarianceFilter filter) {
  if (k < 0)
    throw std::invalid_argument("negative degree");
  RepElement sum;
  const std::size_t chars = ideal.characters();
  for (const auto& g : ideal.generators()) {
    if (g.degree() > k)
      continue;
    sum += invariant_sections(chars - 1, k - g.degree(), filter) * g;
  }
  return sum.support();
}

}  // namespace quartics
