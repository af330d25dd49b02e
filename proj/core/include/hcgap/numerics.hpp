#pragma once
// Exact integer evaluation of the numerical bound functions on the
// (d,g)-plane: the Castelnuovo-type maximal-genus profiles pi_p, the band
// profiles alpha_p with their companion and congruence-switch variants, the
// outer boundary B(d,n) with its exact irrational threshold d1(n), the genus
// polynomial in Gruson-Peskine coordinates, and four-square decompositions.
//
// Everything here is a pure function of its integer inputs; no floating
// point is exposed and no state is shared, so concurrent use is safe.

#include "hcgap/int_math.hpp"

namespace hcgap {

// Profile of pi_p(d,n), the classical maximal-genus bounds for non-degenerate
// degree-d curves in projective n-space (p = 0 is the Castelnuovo bound).
// The closed form is valid for 0 <= p <= n-2 and d >= n.
struct PiProfile {
    Int p = 0, d = 0, n = 0;
    Int m = 0;      // quotient part
    Int eps = 0;    // remainder, 0 <= eps <= n+p-2
    Int mu = 0;     // correction term, mu = 0 when p = 0
    Int value = 0;
};

PiProfile pi_profile(Int p, Int d, Int n);
Int pi_value(Int p, Int d, Int n);

// Smallest admissible degree for the alpha_p profile.
Int alpha_start(Int p, Int n);

// Profile of alpha_p(d,n): the band boundary functions.  Defined for
// p >= 0, n >= 3, d >= alpha_start(p,n).
struct AlphaProfile {
    Int p = 0, d = 0, n = 0;
    Int a_start = 0;
    Int x = 0;      // quotient part; shifts by 1 per period n+p-1
    Int t = 0;      // t = d-1-x(n+p-1)
    Int u = 0;      // u = floor((p-n+1+t)/2), may be negative near a_start
    Int value = 0;
};

AlphaProfile alpha_profile(Int p, Int d, Int n);
Int alpha_value(Int p, Int d, Int n);

// Companion value alpha'_p(d,n) = alpha_{p-1}(d+1, n+1).
Int alpha_prime(Int p, Int d, Int n);

// Congruence switch: alpha_p(d,n) when d = alpha_start(p,n) mod (n+p-1),
// otherwise alpha'_p(d,n).
Int beta_value(Int p, Int d, Int n);

// Outer boundary of the low domain for d >= 2n+1.  d1 is the least integer
// d >= 2n+1 lying strictly above the irrational threshold expression; the
// comparison is decided exactly on integers (no floating point).
struct BoundaryProfile {
    Int n = 0;
    Int k = 0;      // floor(n/3)
    Int d1 = 0;
    Int big_a(Int d) const;
    Int big_b(Int d) const;
};

BoundaryProfile boundary_profile(Int n);

// Genus polynomial in Gruson-Peskine coordinates:
//   F(d,r) = (1/2)[d(r-1) + (p-1)r - ((n+p-1)/4) r^2] + 1, exact rational.
Rational gp_genus_poly(Int d, Int r, Int p, Int n);

// Margin of condition (C5) at the canonical radius r = 2(x_p(d,n)+1):
//   d - 2(p-1)(x_p(d,n)+1) - 2.  (C5) holds there iff the margin is >= 0.
Int c5_margin(Int d, Int p, Int n);

// Four-square decomposition c1 >= c2 >= c3 >= c4 >= 0 of b >= 0, chosen as
// the lexicographically greatest such tuple for reproducibility.
struct FourSquares {
    Int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    Int sum_squares() const { return c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4; }
    bool operator==(const FourSquares&) const = default;
};

FourSquares four_squares(Int b);

// Variant that skips tuples with c1 == avoid_c1 when an alternative exists,
// used to keep the leading coordinate strictly below r/2 at r = 4
// (it turns (2,0,0,0) into (1,1,1,1)).
FourSquares four_squares_avoiding(Int b, Int avoid_c1);

}  // namespace hcgap
