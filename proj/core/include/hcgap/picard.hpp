#pragma once
// Divisor-class arithmetic in the Picard lattice of the plane blown up at
// s+1 points.  A class (a; b_0,...,b_s) stands for a*l - sum b_i e_i in the
// basis (line class; exceptional classes); the intersection form is
// l^2 = 1, e_i^2 = -1, mixed products 0.
//
// Surface(n,p) is the blown-up plane embedded by (p+2; p, 1^s) with
// s = 3p-n+5; it has degree n+p-1 and hyperelliptic hyperplane sections of
// sectional genus p.  Classes are plain integer vectors: effectivity and
// smoothability are decided elsewhere, never encoded in the type.

#include <vector>

#include "hcgap/errors.hpp"
#include "hcgap/int_math.hpp"

namespace hcgap {

struct DivisorClass {
    Int a = 0;
    std::vector<Int> b;  // b_0..b_s

    bool operator==(const DivisorClass&) const = default;

    DivisorClass& operator+=(const DivisorClass& o);  // throws SizeMismatch
    friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) {
        x += y;
        return x;
    }
    friend DivisorClass operator*(Int k, DivisorClass x) {
        x.a *= k;
        for (auto& v : x.b) v *= k;
        return x;
    }
};

struct Surface {
    Int n = 0;
    Int p = 0;

    Int s() const { return 3 * p - n + 5; }
    Int point_count() const { return s() + 1; }
    Int surface_degree() const { return n + p - 1; }
    DivisorClass hyperplane() const;  // (p+2; p, 1^s)
    DivisorClass canonical() const;   // (-3; -1,...,-1)

    bool operator==(const Surface&) const = default;
};

// Validating factory.  The construction window is ceil(n/3) <= p <= n-4;
// pass relaxed = true for staging surfaces outside it (s >= 0 still required).
Surface make_surface(Int n, Int p, bool relaxed = false);

Int intersect(const DivisorClass& d1, const DivisorClass& d2, const Surface& surf);
Int degree(const DivisorClass& d, const Surface& surf);

// Adjunction genus: (a-1)(a-2)/2 - sum b_i(b_i-1)/2.
Int arithmetic_genus(const DivisorClass& d, const Surface& surf);

// Gruson-Peskine coordinates (d, r; theta_1..theta_s) of a class, with
// r = a - b_0 and theta_i = r/2 - b_i.  The thetas are half-integers, so we
// store their doubles: theta2[i] = 2*theta_{i+1}.
struct GPCoords {
    Int d = 0;
    Int r = 0;
    std::vector<Int> theta2;

    bool operator==(const GPCoords&) const = default;
};

GPCoords to_gp(const DivisorClass& d, const Surface& surf);

// Inverse coordinate change.  Requires the integrality conditions
//   (C1)  theta_i = r/2 (mod 1)   and
//   (C2)  the degree equation solvable for an integer a,
// otherwise throws IntegralityError.
DivisorClass from_gp(const GPCoords& c, const Surface& surf);

}  // namespace hcgap
