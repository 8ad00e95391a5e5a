#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twostar/gf.hpp"

namespace twostar::detail {

// Polynomials over GF(p), coefficient i of x^i, no trailing zeros. The zero
// polynomial is the empty vector.
using Poly = std::vector<unsigned>;

std::size_t degree(const Poly& f);  // 0 for constants and for zero
void trim(Poly& f);
Poly poly_sub(const Poly& a, const Poly& b, unsigned p);
Poly poly_mul(const Poly& a, const Poly& b, unsigned p);
/// a = q * b + r with deg r < deg b; b nonzero.
void poly_divmod(const Poly& a, const Poly& b, unsigned p, Poly& q, Poly& r);
Poly poly_mod(const Poly& a, const Poly& m, unsigned p);
Poly poly_monic(const Poly& f, unsigned p);
Poly poly_gcd(Poly a, Poly b, unsigned p);  // monic
Poly poly_derivative(const Poly& f, unsigned p);
Poly poly_powmod(Poly base, unsigned long long e, const Poly& m, unsigned p);

/// Characteristic polynomial det(xI - A), reduced to Hessenberg form first.
Poly charpoly(const GFMatrix& a);

/// The distinct monic irreducible factors of f, sorted by (degree, coefficients).
std::vector<Poly> irreducible_factors(const Poly& f, unsigned p, std::mt19937_64& rng);

/// f(A) by Horner's rule.
GFMatrix evaluate(const Poly& f, const GFMatrix& a);

}  // namespace twostar::detail
