#include "sctk/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "sctk/errors.hpp"

namespace sctk {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::withExponent(std::size_t var, std::uint32_t e) const {
  Monomial out = *this;
  out.degree_ = out.degree_ - out.exps_[var] + e;
  out.exps_[var] = e;
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ -= divisor.degree_;
  return out;
}

Rational powRational(const Rational& base, std::uint32_t exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

namespace {

// Merge two descending term lists; `sign` is +1 or -1 for b.
std::vector<Term> mergeTerms(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].monomial <=> b[j].monomial;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw UsageError("polynomial requires a parameter space");
}

Polynomial::Polynomial(SpacePtr space, std::vector<Term> sorted_terms)
    : space_(std::move(space)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(SpacePtr space, const Rational& value) {
  Polynomial p(std::move(space));
  Rational c = value;
  c.canonicalize();
  if (c != 0) p.terms_.push_back(Term{Monomial(p.space_->numVars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::size_t var) {
  Polynomial p(std::move(space));
  if (var >= p.space_->numVars()) throw UsageError("variable index out of range");
  p.terms_.push_back(Term{Monomial(p.space_->numVars()).withExponent(var, 1), Rational(1)});
  return p;
}

Polynomial Polynomial::fromTerms(SpacePtr space, std::vector<Term> terms) {
  Polynomial p(std::move(space));
  const std::size_t nvars = p.space_->numVars();
  std::map<Monomial, Rational, std::greater<>> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != nvars) throw UsageError("monomial arity does not match space");
    t.coeff.canonicalize();
    acc[t.monomial] += t.coeff;
  }
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back(Term{m, c});
  }
  return p;
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.isOne());
}

bool Polynomial::isOne() const {
  return terms_.size() == 1 && terms_.front().monomial.isOne() && terms_.front().coeff == 1;
}

Rational Polynomial::constantValue() const {
  if (!isConstant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

int Polynomial::degreeIn(std::size_t var) const {
  if (terms_.empty()) return kDegreeOfZero;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return static_cast<int>(d);
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.monomial[var] > 0; });
}

std::uint32_t Polynomial::totalDegree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::vector<Polynomial> Polynomial::coefficientsIn(std::size_t var) const {
  if (terms_.empty()) return {};
  const auto deg = static_cast<std::size_t>(degreeIn(var));
  std::vector<std::vector<Term>> buckets(deg + 1);
  // Stripping one variable preserves the relative order of terms sharing
  // that variable's exponent, so each bucket stays sorted.
  for (const auto& t : terms_) {
    buckets[t.monomial[var]].push_back(Term{t.monomial.withExponent(var, 0), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial(space_, std::move(b)));
  return out;
}

Polynomial Polynomial::fromCoefficientsIn(SpacePtr space, std::size_t var,
                                          std::span<const Polynomial> coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    requireSameSpace(space, coeffs[k].space());
    for (const auto& t : coeffs[k].terms()) {
      if (t.monomial[var] != 0) throw UsageError("coefficient involves the main variable");
      terms.push_back(Term{t.monomial.withExponent(var, static_cast<std::uint32_t>(k)), t.coeff});
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  return Polynomial(std::move(space), std::move(terms));
}

Polynomial Polynomial::leadingCoefficientIn(std::size_t var) const {
  if (terms_.empty()) return *this;
  const auto deg = static_cast<std::uint32_t>(degreeIn(var));
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial[var] == deg) out.push_back(Term{t.monomial.withExponent(var, 0), t.coeff});
  }
  return Polynomial(space_, std::move(out));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    out.push_back(Term{t.monomial.withExponent(var, e - 1), t.coeff * e});
  }
  // Lowering one exponent can reorder terms under a graded order.
  return fromTerms(space_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return Polynomial(space_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return Polynomial(space_, std::move(out));
}

Polynomial Polynomial::mulTerm(const Term& term) const {
  if (term.coeff == 0) return Polynomial(space_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.monomial * term.monomial, t.coeff * term.coeff});
  return Polynomial(space_, std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(space_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return abs(c);
}

Polynomial Polynomial::integerPrimitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leadingCoefficient() < 0) c = -c;
  return scaled(1 / c);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != space_->numVars()) {
    throw UsageError("evaluation point must assign every variable");
  }
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      if (t.monomial[i] > 0) v *= powRational(point[i], t.monomial[i]);
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(space_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  requireSameSpace(space_, other.space_);
  terms_ = mergeTerms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  requireSameSpace(space_, other.space_);
  terms_ = mergeTerms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameSpace(a.space_, b.space_);
  if (a.isZero() || b.isZero()) return Polynomial(a.space_);
  if (a.size() == 1) return b.mulTerm(a.terms_.front());
  if (b.size() == 1) return a.mulTerm(b.terms_.front());
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) acc[x.monomial * y.monomial] += x.coeff * y.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, c});
  }
  return Polynomial(a.space_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!sameSpace(a.space_, b.space_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::optional<Polynomial> exactQuotient(const Polynomial& p, const Polynomial& q) {
  requireSameSpace(p.space(), q.space());
  if (q.isZero()) throw PoleError("division by the zero polynomial");
  if (p.isZero()) return Polynomial(p.space());
  if (q.isConstant()) return p.scaled(1 / q.constantValue());
  const std::size_t nvars = p.space()->numVars();
  for (std::size_t v = 0; v < nvars; ++v) {
    if (p.degreeIn(v) < q.degreeIn(v)) return std::nullopt;
  }
  const Term& lead = q.leadingTerm();
  std::vector<Term> quotient;
  Polynomial rem = p;
  while (!rem.isZero()) {
    const Term& r = rem.leadingTerm();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Term t{r.monomial / lead.monomial, r.coeff / lead.coeff};
    rem -= q.mulTerm(t);
    quotient.push_back(std::move(t));
  }
  // Leading terms of the remainder strictly decrease, so quotient terms are
  // produced in descending order.
  return Polynomial::fromTerms(p.space(), std::move(quotient));
}

Polynomial divideExact(const Polynomial& p, const Polynomial& q) {
  auto out = exactQuotient(p, q);
  if (!out) throw std::logic_error("polynomial division was expected to be exact");
  return std::move(*out);
}

}  // namespace sctk
