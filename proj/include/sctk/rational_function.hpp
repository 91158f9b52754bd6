#pragma once

#include <cstddef>
#include <span>

#include "sctk/polynomial.hpp"

namespace sctk {

/// Element of F(z)(s) stored as num/den.
///
/// Normalization: the denominator is always scaled to coprime integer
/// coefficients with a positive leading coefficient, and a denominator that
/// divides the numerator exactly is absorbed. Full multivariate gcd
/// cancellation runs only when num.size() + den.size() exceeds the reduction
/// threshold, or on demand via reduced(). Equality is decided by
/// cross-multiplication and never depends on how far a value was reduced.
class RationalFunction {
 public:
  explicit RationalFunction(SpacePtr space);
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  // Throws PoleError when den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(SpacePtr space, const Rational& value);
  static RationalFunction variable(SpacePtr space, std::size_t var);

  const SpacePtr& space() const { return num_.space(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isConstant() const;
  bool isPolynomial() const { return den_.isOne(); }
  // True iff the value is independent of s, i.e. num' * den - num * den' = 0
  // for the derivative in s. Unaffected by uncancelled common factors.
  bool isSFree() const;

  // Fully gcd-reduced representative of the same element.
  RationalFunction reduced() const;

  // Throws PoleError if the denominator vanishes at point.
  Rational evaluate(std::span<const Rational> point) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  // Throws PoleError when other is zero.
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  static std::size_t reductionThreshold();
  static void setReductionThreshold(std::size_t terms);

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized);
  void normalize(bool force_gcd);

  Polynomial num_;
  Polynomial den_;
};

inline constexpr std::size_t kDefaultReductionThreshold = 64;

}  // namespace sctk
