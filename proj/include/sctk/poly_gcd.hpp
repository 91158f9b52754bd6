#pragma once

#include <cstddef>

#include "sctk/polynomial.hpp"

namespace sctk {

// lc_v(b)^(deg_v a - deg_v b + 1) * a  mod b, viewing both as polynomials in
// `var` over the remaining variables. Requires b to involve var or be nonzero.
Polynomial pseudoRemainder(const Polynomial& a, const Polynomial& b, std::size_t var);

// gcd of the coefficients of p viewed as a polynomial in `var`.
Polynomial contentIn(const Polynomial& p, std::size_t var);
Polynomial primitivePartIn(const Polynomial& p, std::size_t var);

/// Greatest common divisor in Q[z, s], computed recursively. Variables the
/// gcd cannot involve (shown by coprime modular images) are folded into
/// contents; otherwise primitive parts go through a subresultant
/// pseudo-remainder sequence in the variable of lowest degree.
/// Normalized to coprime integer coefficients with a positive leading
/// coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
Polynomial lcm(const Polynomial& p, const Polynomial& q);

/// gcd in F(z)[s]. Every nonzero s-free polynomial is a unit there, so the
/// result is the s-primitive associate (z-content removed) with coprime
/// integer coefficients, signed so that its leading coefficient in s has a
/// positive leading term. It is 1 whenever the gcd has s-degree 0, and 0
/// only for gcd(0, 0).
Polynomial gcdInS(const Polynomial& p, const Polynomial& q);

}  // namespace sctk
