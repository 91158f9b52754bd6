#include "sctk/poly_gcd.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "sctk/errors.hpp"

namespace sctk {
namespace {

Polynomial one(const SpacePtr& space) { return Polynomial::constant(space, 1); }

int degreeOrMinusOne(const Polynomial& p, std::size_t var) {
  return p.isZero() ? -1 : p.degreeIn(var);
}

// Subresultant PRS (Collins, Brown) on a and b, both primitive in var and
// involving it. Returns a gcd in Q[others][var] up to a factor free of var.
Polynomial subresultantGcd(Polynomial a, Polynomial b, std::size_t var) {
  const auto& space = a.space();
  if (a.degreeIn(var) < b.degreeIn(var)) std::swap(a, b);
  Polynomial g = one(space);
  Polynomial h = one(space);
  while (true) {
    const int delta = a.degreeIn(var) - b.degreeIn(var);
    Polynomial r = pseudoRemainder(a, b, var);
    if (r.isZero()) return b;
    if (r.degreeIn(var) == 0) return one(space);
    a = std::move(b);
    b = divideExact(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.leadingCoefficientIn(var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divideExact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

// Images modulo the Mersenne prime 2^61 - 1. For each variable x the other
// variables are evaluated at a random point; if lc_x of both inputs survives
// and the univariate images are coprime mod P, then gcd(p, q) is free of x:
// lc_x of any common factor divides lc_x(p), so its image keeps its x-degree.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powMod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e > 0; e >>= 1, a = mulMod(a, a)) {
    if (e & 1) r = mulMod(r, a);
  }
  return r;
}

std::uint64_t invMod(std::uint64_t a) { return powMod(a, kPrime - 2); }

std::optional<std::uint64_t> reduceMod(const Rational& c) {
  const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mulMod(mpz_fdiv_ui(c.get_num_mpz_t(), kPrime), invMod(den));
}

using ModPoly = std::vector<std::uint64_t>;  // low degree first, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Image of p in Z_P[x] with every other variable replaced by point[v].
std::optional<ModPoly> image(const Polynomial& p, std::size_t x, const std::vector<std::uint64_t>& point) {
  ModPoly out(static_cast<std::size_t>(p.degreeIn(x)) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = reduceMod(t.coeff);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t var = 0; var < t.monomial.size(); ++var) {
      if (var != x && t.monomial[var] > 0) v = mulMod(v, powMod(point[var], t.monomial[var]));
    }
    auto& slot = out[t.monomial[x]];
    slot = (slot + v) % kPrime;
  }
  if (out.back() == 0) return std::nullopt;  // lc_x vanished at the point
  return out;
}

std::size_t gcdDegreeMod(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = invMod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulMod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + kPrime - mulMod(f, b[i])) % kPrime;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// False only when gcd(p, q) provably does not involve x.
bool mayShareIn(const Polynomial& p, const Polynomial& q, std::size_t x) {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (x * 0xbf58476d1ce4e5b9ULL) ^ p.size() ^ (q.size() << 20);
  std::vector<std::uint64_t> point(p.space()->numVars());
  for (int attempt = 0; attempt < 3; ++attempt) {
    for (auto& v : point) {
      state += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      v = (z ^ (z >> 31)) % kPrime;
    }
    auto a = image(p, x, point);
    auto b = image(q, x, point);
    if (a && b) return gcdDegreeMod(std::move(*a), std::move(*b)) > 0;
  }
  return true;
}

// Coefficients of p viewed as a polynomial in the variables with keep[v]
// false, each a polynomial in the kept variables.
std::vector<Polynomial> coefficientsOver(const Polynomial& p, const std::vector<bool>& keep) {
  std::map<std::vector<std::uint32_t>, std::vector<Term>> groups;
  const std::size_t nv = keep.size();
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> outer(nv, 0), inner(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) (keep[v] ? inner : outer)[v] = t.monomial[v];
    groups[outer].push_back(Term{Monomial(std::move(inner)), t.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& [key, terms] : groups) out.push_back(Polynomial::fromTerms(p.space(), std::move(terms)));
  return out;
}

}  // namespace

Polynomial pseudoRemainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  requireSameSpace(a.space(), b.space());
  if (b.isZero()) throw PoleError("pseudo-remainder by the zero polynomial");
  const int db = b.degreeIn(var);
  if (db == 0) return Polynomial(a.space());
  int da = degreeOrMinusOne(a, var);
  if (da < db) return a;
  const Polynomial lb = b.leadingCoefficientIn(var);
  Polynomial r = a;
  int e = da - db + 1;
  const Monomial unit(a.space()->numVars());
  while (!r.isZero() && r.degreeIn(var) >= db) {
    const int dr = r.degreeIn(var);
    Polynomial lr = r.leadingCoefficientIn(var);
    Term shift{unit.withExponent(var, static_cast<std::uint32_t>(dr - db)), Rational(1)};
    r = lb * r - (lr * b).mulTerm(shift);
    --e;
  }
  if (e > 0) r *= lb.pow(static_cast<unsigned>(e));
  return r;
}

Polynomial contentIn(const Polynomial& p, std::size_t var) {
  if (p.isZero()) return p;
  auto coeffs = p.coefficientsIn(var);
  Polynomial c(p.space());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (it->isZero()) continue;
    c = gcd(c, *it);
    if (c.isConstant()) break;
  }
  return c;
}

Polynomial primitivePartIn(const Polynomial& p, std::size_t var) {
  if (p.isZero()) return p;
  return divideExact(p, contentIn(p, var)).integerPrimitive();
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  requireSameSpace(p.space(), q.space());
  if (p.isZero()) return q.integerPrimitive();
  if (q.isZero()) return p.integerPrimitive();
  if (p.isConstant() || q.isConstant()) return one(p.space());
  if (p == q) return p.integerPrimitive();

  // Keep only the variables the gcd may involve; the others are folded
  // into contents, which are smaller gcd problems.
  const std::size_t nv = p.space()->numVars();
  std::vector<bool> keep(nv, false);
  bool dropped = false;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!p.involves(v) && !q.involves(v)) continue;
    keep[v] = p.involves(v) && q.involves(v) && mayShareIn(p, q, v);
    dropped = dropped || !keep[v];
  }
  if (std::none_of(keep.begin(), keep.end(), [](bool k) { return k; })) return one(p.space());
  if (dropped) {
    std::vector<Polynomial> parts = coefficientsOver(p, keep);
    auto more = coefficientsOver(q, keep);
    parts.insert(parts.end(), more.begin(), more.end());
    std::sort(parts.begin(), parts.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
    Polynomial g(p.space());
    for (const auto& part : parts) {
      g = gcd(g, part);
      if (g.isConstant()) return one(p.space());
    }
    return g;
  }

  // PRS in the kept variable of lowest degree.
  std::size_t var = nv;
  int best = std::numeric_limits<int>::max();
  for (std::size_t v = 0; v < nv; ++v) {
    if (!keep[v]) continue;
    const int d = std::max(p.degreeIn(v), q.degreeIn(v));
    if (d < best) best = d, var = v;
  }

  Polynomial cp = contentIn(p, var);
  Polynomial cq = contentIn(q, var);
  Polynomial c = gcd(cp, cq);
  Polynomial g = subresultantGcd(divideExact(p, cp), divideExact(q, cq), var);
  return (c * primitivePartIn(g, var)).integerPrimitive();
}

Polynomial lcm(const Polynomial& p, const Polynomial& q) {
  if (p.isZero() || q.isZero()) return Polynomial(p.space());
  return divideExact(p * q, gcd(p, q)).integerPrimitive();
}

Polynomial gcdInS(const Polynomial& p, const Polynomial& q) {
  requireSameSpace(p.space(), q.space());
  const std::size_t s = p.space()->sIndex();
  auto sPrimitive = [&](const Polynomial& x) {
    if (!x.involves(s)) return one(x.space());
    Polynomial g = primitivePartIn(x, s);
    return g.leadingCoefficientIn(s).leadingCoefficient() < 0 ? -g : g;
  };
  if (p.isZero() && q.isZero()) return p;
  if (p.isZero()) return sPrimitive(q);
  if (q.isZero()) return sPrimitive(p);
  if (!p.involves(s) || !q.involves(s)) return one(p.space());
  Polynomial g = subresultantGcd(primitivePartIn(p, s), primitivePartIn(q, s), s);
  return sPrimitive(g);
}

}  // namespace sctk
