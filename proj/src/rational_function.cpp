#include "sctk/rational_function.hpp"

#include <atomic>
#include <utility>

#include "sctk/errors.hpp"
#include "sctk/poly_gcd.hpp"

namespace sctk {
namespace {

std::atomic<std::size_t> g_reduction_threshold{kDefaultReductionThreshold};

}  // namespace

std::size_t RationalFunction::reductionThreshold() { return g_reduction_threshold.load(); }

void RationalFunction::setReductionThreshold(std::size_t terms) { g_reduction_threshold.store(terms); }

RationalFunction::RationalFunction(SpacePtr space)
    : num_(space), den_(Polynomial::constant(space, 1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.space(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  requireSameSpace(num_.space(), den_.space());
  if (den_.isZero()) throw PoleError("rational function with zero denominator");
  normalize(false);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Normalized)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::constant(SpacePtr space, const Rational& value) {
  return RationalFunction(Polynomial::constant(std::move(space), value));
}

RationalFunction RationalFunction::variable(SpacePtr space, std::size_t var) {
  return RationalFunction(Polynomial::variable(std::move(space), var));
}

void RationalFunction::normalize(bool force_gcd) {
  if (num_.isZero()) {
    den_ = Polynomial::constant(num_.space(), 1);
    return;
  }
  if (den_.isConstant()) {
    num_ = num_.scaled(1 / den_.constantValue());
    den_ = Polynomial::constant(num_.space(), 1);
    return;
  }
  if (force_gcd || num_.size() + den_.size() > reductionThreshold()) {
    Polynomial g = gcd(num_, den_);
    if (!g.isConstant()) {
      num_ = divideExact(num_, g);
      den_ = divideExact(den_, g);
    }
  } else if (auto q = exactQuotient(num_, den_)) {
    num_ = std::move(*q);
    den_ = Polynomial::constant(num_.space(), 1);
    return;
  }
  if (den_.isConstant()) {
    num_ = num_.scaled(1 / den_.constantValue());
    den_ = Polynomial::constant(num_.space(), 1);
    return;
  }
  Rational c = den_.content();
  if (den_.leadingCoefficient() < 0) c = -c;
  if (c != 1) {
    num_ = num_.scaled(1 / c);
    den_ = den_.scaled(1 / c);
  }
}

bool RationalFunction::isConstant() const {
  return num_.isConstant() && den_.isConstant();
}

bool RationalFunction::isSFree() const {
  const std::size_t s = space()->sIndex();
  if (!num_.involves(s) && !den_.involves(s)) return true;
  return (num_.derivative(s) * den_ - num_ * den_.derivative(s)).isZero();
}

RationalFunction RationalFunction::reduced() const {
  RationalFunction out(num_, den_, Normalized{});
  out.normalize(true);
  return out;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Normalized{});
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  requireSameSpace(space(), other.space());
  if (other.isZero()) return *this;
  if (isZero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize(false);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  requireSameSpace(space(), other.space());
  if (isZero()) return *this;
  if (other.isZero()) return *this = RationalFunction(space());
  num_ *= other.num_;
  den_ *= other.den_;
  normalize(false);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  requireSameSpace(space(), other.space());
  if (other.isZero()) throw PoleError("division by the zero rational function");
  if (isZero()) return *this;
  num_ *= other.den_;
  den_ *= other.num_;
  normalize(false);
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!sameSpace(a.space(), b.space())) return false;
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return (a.num_ * b.den_ - b.num_ * a.den_).isZero();
}

}  // namespace sctk
