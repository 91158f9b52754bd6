#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sctk/param_space.hpp"

namespace sctk {

using Rational = mpq_class;

// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// Exponent vector over all variables of a ParamSpace, the indeterminate
/// last. Ordered graded-lexicographically: total degree first, then the
/// earliest variable with the larger exponent ranks higher.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t var) const { return exps_[var]; }
  std::uint32_t degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial withExponent(std::size_t var, std::uint32_t e) const;

  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in strictly descending monomial order with no zero coefficients, so
/// structural equality is mathematical equality.
class Polynomial {
 public:
  explicit Polynomial(SpacePtr space);

  static Polynomial constant(SpacePtr space, const Rational& value);
  static Polynomial variable(SpacePtr space, std::size_t var);
  // Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial fromTerms(SpacePtr space, std::vector<Term> terms);

  const SpacePtr& space() const { return space_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool isZero() const { return terms_.empty(); }
  // True for the zero polynomial as well.
  bool isConstant() const;
  bool isOne() const;
  Rational constantValue() const;

  const Term& leadingTerm() const { return terms_.front(); }
  const Rational& leadingCoefficient() const { return terms_.front().coeff; }

  int degreeIn(std::size_t var) const;
  int sDegree() const { return degreeIn(space_->sIndex()); }
  bool involves(std::size_t var) const;
  std::uint32_t totalDegree() const;

  // coefficientsIn(v)[k] is the coefficient of v^k, a polynomial free of v.
  std::vector<Polynomial> coefficientsIn(std::size_t var) const;
  static Polynomial fromCoefficientsIn(SpacePtr space, std::size_t var,
                                       std::span<const Polynomial> coeffs);
  Polynomial leadingCoefficientIn(std::size_t var) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial mulTerm(const Term& term) const;
  Polynomial pow(unsigned exponent) const;

  // Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const;
  // this / (±content) with a positive leading coefficient; zero stays zero.
  Polynomial integerPrimitive() const;

  // point[v] is the value of variable v; must cover every variable.
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(SpacePtr space, std::vector<Term> sorted_terms);

  SpacePtr space_;
  std::vector<Term> terms_;
};

// Exact quotient p / q when q divides p in Q[vars]; nullopt otherwise.
std::optional<Polynomial> exactQuotient(const Polynomial& p, const Polynomial& q);
// As exactQuotient, but a non-zero remainder is a logic error.
Polynomial divideExact(const Polynomial& p, const Polynomial& q);

Rational powRational(const Rational& base, std::uint32_t exponent);

}  // namespace sctk
