#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tsgreen/fq.hpp"

namespace tsgreen {

using Int = boost::multiprecision::cpp_int;

// Polynomials over GF(q): coefficient vector, constant term first, no trailing
// zeros (the zero polynomial is the empty vector).
using FqPoly = std::vector<FqEl>;

int poly_deg(const FqPoly& a);  // -1 for the zero polynomial
FqPoly poly_trim(FqPoly a);
FqPoly poly_add(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const Fq& F, const FqPoly& a, FqEl c);
FqPoly poly_mul(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_monic(const Fq& F, const FqPoly& a);
// Quotient and remainder; b must be nonzero.
std::pair<FqPoly, FqPoly> poly_divmod(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(const Fq& F, FqPoly a, FqPoly b);  // monic (or zero)
// g = gcd(a, b) monic with g = u*a + v*b.
struct PolyExtGcd {
  FqPoly g, u, v;
};
PolyExtGcd poly_ext_gcd(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_powmod(const Fq& F, FqPoly base, Int e, const FqPoly& mod);
FqPoly poly_derivative(const Fq& F, const FqPoly& a);
FqEl poly_eval(const Fq& F, const FqPoly& a, FqEl x);
// g(h) mod f by Horner.
FqPoly poly_compose_mod(const Fq& F, const FqPoly& g, const FqPoly& h, const FqPoly& f);
bool poly_is_irreducible(const Fq& F, const FqPoly& f);

// Monic irreducible factors with multiplicities, sorted by (degree, coeffs).
// Uses seeded Cantor-Zassenhaus for equal-degree splitting, so the result is
// reproducible for a fixed seed (and the set of factors is seed-independent).
std::vector<std::pair<FqPoly, int>> poly_factor(const Fq& F, const FqPoly& f,
                        std::uint64_t seed);

}  // namespace tsgreen
