#include "hcgap/numerics.hpp"

#include <cassert>

namespace hcgap {

PiProfile pi_profile(Int p, Int d, Int n) {
    if (n < 3) throw std::domain_error("pi_profile: n must be >= 3");
    if (p < 0 || p > n - 2)
        throw std::domain_error("pi_profile: p outside [0, n-2]");
    if (d < n) throw std::domain_error("pi_profile: d must be >= n");
    PiProfile pr;
    pr.p = p; pr.d = d; pr.n = n;
    const Int period = n + p - 1;
    pr.m = floor_div(d - 1, period);
    pr.eps = d - 1 - pr.m * period;
    pr.mu = std::max<Int>(0, floor_div(p - n + 2 + pr.eps, 2));
    if (p == 0) assert(pr.mu == 0);  // eps <= n-2 forces the max to clamp
    pr.value = pr.m * (pr.m - 1) / 2 * period + pr.m * (pr.eps + p) + pr.mu;
    assert(pr.value >= 0);
    return pr;
}

Int pi_value(Int p, Int d, Int n) { return pi_profile(p, d, n).value; }

Int alpha_start(Int p, Int n) { return floor_div(n - p, 2) + 1; }

AlphaProfile alpha_profile(Int p, Int d, Int n) {
    if (n < 3) throw std::domain_error("alpha_profile: n must be >= 3");
    if (p < 0) throw std::domain_error("alpha_profile: p must be >= 0");
    AlphaProfile ap;
    ap.p = p; ap.d = d; ap.n = n;
    ap.a_start = alpha_start(p, n);
    if (d < ap.a_start)
        throw std::domain_error("alpha_profile: d below the admissible start");
    const Int period = n + p - 1;
    ap.x = floor_div(d - ap.a_start, period);
    ap.t = d - 1 - ap.x * period;
    ap.u = floor_div(p - n + 1 + ap.t, 2);
    ap.value = ap.x * (ap.x - 1) / 2 * period + ap.x * (ap.t + p) + ap.u;
    return ap;
}

Int alpha_value(Int p, Int d, Int n) { return alpha_profile(p, d, n).value; }

Int alpha_prime(Int p, Int d, Int n) {
    if (p < 1) throw std::domain_error("alpha_prime: p must be >= 1");
    return alpha_value(p - 1, d + 1, n + 1);
}

Int beta_value(Int p, Int d, Int n) {
    const Int a = alpha_start(p, n);
    if (d < a) throw std::domain_error("beta_value: d below the admissible start");
    if ((d - a) % (n + p - 1) == 0) return alpha_value(p, d, n);
    return alpha_prime(p, d, n);
}

namespace {

// Decides d > threshold(n) exactly, where threshold is the irrational
// expression attached to each residue of n mod 3 (k = floor(n/3)).
bool above_threshold(Int d, Int n, Int k) {
    switch (n % 3) {
        case 0: {
            // threshold = (3 + (4k-1) sqrt(24k-33)) / 6, radicand > 0 for n >= 6
            Int lhs = 6 * d - 3;
            return lhs > 0 && lhs * lhs > (4 * k - 1) * (4 * k - 1) * (24 * k - 33);
        }
        case 1: {
            // threshold = (4k/(4k+1)) (-4k + sqrt(32k^3 + 16k^2 - 2k - 1))
            Int radicand = 32 * k * k * k + 16 * k * k - 2 * k - 1;
            Int lhs = d * (4 * k + 1) + 16 * k * k;  // both sides positive
            return lhs * lhs > radicand * 16 * k * k;
        }
        default: {
            // threshold = 5k + 3 + (2k+1) sqrt(48k+6)
            Int lhs = d - 5 * k - 3;
            return lhs > 0 && lhs * lhs > (2 * k + 1) * (2 * k + 1) * (48 * k + 6);
        }
    }
}

}  // namespace

Int BoundaryProfile::big_a(Int d) const {
    PiProfile pr = pi_profile(k, d, n);
    if (n % 3 == 0 || n % 3 == 1) return pr.value;
    return pr.value - pr.mu + std::max<Int>(0, pr.eps - 3 * k - 1);
}

Int BoundaryProfile::big_b(Int d) const {
    if (d < 2 * n + 1)
        throw std::domain_error("big_b: defined for d >= 2n+1");
    if (d >= d1) return big_a(d);
    return n % 3 == 0 ? alpha_value(k, d, n) : alpha_value(k + 1, d, n);
}

BoundaryProfile boundary_profile(Int n) {
    if (n < 4) throw std::domain_error("boundary_profile: n must be >= 4");
    BoundaryProfile bp;
    bp.n = n;
    bp.k = floor_div(n, 3);
    Int d = 2 * n + 1;
    while (!above_threshold(d, n, bp.k)) ++d;
    bp.d1 = d;
    return bp;
}

Rational gp_genus_poly(Int d, Int r, Int p, Int n) {
    return Rational(4 * d * (r - 1) + 4 * (p - 1) * r - (n + p - 1) * r * r + 8, 8);
}

Int c5_margin(Int d, Int p, Int n) {
    const AlphaProfile ap = alpha_profile(p, d, n);
    return d - 2 * (p - 1) * (ap.x + 1) - 2;
}

namespace {

// Descending lexicographic search; the first complete tuple found is the
// greatest one.  skip_c1 < 0 disables the skip.
bool four_squares_search(Int b, Int skip_c1, FourSquares& out) {
    for (Int c1 = isqrt(b); c1 >= 0; --c1) {
        if (c1 == skip_c1) continue;
        const Int r1 = b - c1 * c1;
        for (Int c2 = std::min(c1, isqrt(r1)); c2 >= 0; --c2) {
            const Int r2 = r1 - c2 * c2;
            for (Int c3 = std::min(c2, isqrt(r2)); c3 >= 0; --c3) {
                const Int r3 = r2 - c3 * c3;
                const Int c4 = isqrt(r3);
                if (c4 * c4 == r3 && c4 <= c3) {
                    out = {c1, c2, c3, c4};
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

FourSquares four_squares(Int b) {
    if (b < 0) throw std::domain_error("four_squares: negative argument");
    FourSquares fs;
    four_squares_search(b, -1, fs);  // always succeeds (Lagrange)
    assert(fs.sum_squares() == b);
    return fs;
}

FourSquares four_squares_avoiding(Int b, Int avoid_c1) {
    if (b < 0) throw std::domain_error("four_squares: negative argument");
    FourSquares fs;
    if (four_squares_search(b, avoid_c1, fs)) {
        assert(fs.sum_squares() == b);
        return fs;
    }
    return four_squares(b);
}

}  // namespace hcgap
