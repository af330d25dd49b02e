#include "hcgap/builder.hpp"

#include <cassert>
#include <sstream>

namespace hcgap {

std::string_view to_string(Route r) {
    switch (r) {
        case Route::Step1: return "step1";
        case Route::ConstructionA: return "construction-a";
        case Route::ConstructionB: return "construction-b";
        case Route::Step3Lift: return "step3-lift";
        case Route::Step4Fill: return "step4-fill";
        case Route::LowDegreeGP: return "low-degree-gp";
    }
    return "?";
}

Route route_from_string(std::string_view s) {
    if (s == "step1") return Route::Step1;
    if (s == "construction-a") return Route::ConstructionA;
    if (s == "construction-b") return Route::ConstructionB;
    if (s == "step3-lift") return Route::Step3Lift;
    if (s == "step4-fill") return Route::Step4Fill;
    if (s == "low-degree-gp") return Route::LowDegreeGP;
    throw std::domain_error("unknown route: " + std::string(s));
}

DivisorClass standard_sheaf(const Surface& surf, int index) {
    if (index < 1 || index > 6)
        throw std::domain_error("standard_sheaf: index must be in 1..6");
    if (index == 1) return surf.hyperplane();
    if (index == 2) {
        DivisorClass h = surf.hyperplane();
        h.b.back() = 0;
        return h;
    }
    const Int s = surf.s();
    const Int j = index - 2;        // 1..4
    const Int pad = s - 3 - 2 * j;  // ones before the zero pair
    if (pad < 0)
        throw std::domain_error("standard_sheaf: surface too small for this index");
    DivisorClass c;
    c.a = surf.p + 1;
    c.b.reserve(static_cast<std::size_t>(s) + 1);
    c.b.push_back(surf.p - 1);
    for (Int i = 0; i < pad; ++i) c.b.push_back(1);
    c.b.push_back(0);
    c.b.push_back(0);
    for (Int i = 0; i < 2 * j; ++i) c.b.push_back(1);
    c.b.push_back(0);
    return c;
}

StandardSheaves StandardSheaves::on(const Surface& surf) {
    return {standard_sheaf(surf, 1), standard_sheaf(surf, 2), standard_sheaf(surf, 3),
            standard_sheaf(surf, 4), standard_sheaf(surf, 5), standard_sheaf(surf, 6)};
}

const DivisorClass& StandardSheaves::at(int index) const {
    switch (index) {
        case 1: return h1;
        case 2: return h2;
        case 3: return h3;
        case 4: return h4;
        case 5: return h5;
        case 6: return h6;
    }
    throw std::domain_error("StandardSheaves::at: index must be in 1..6");
}

DivisorClass staging_sheaf(const Surface& staging, int index) {
    if (index == 1) return staging.hyperplane();
    if (index < 3 || index > 6)
        throw std::domain_error("staging_sheaf: index must be 1 or 3..6");
    const Int s = staging.s();
    const Int j = index - 2;
    const Int pad = s - 2 - 2 * j;
    if (pad < 0)
        throw std::domain_error("staging_sheaf: surface too small for this index");
    DivisorClass c;
    c.a = staging.p + 1;
    c.b.reserve(static_cast<std::size_t>(s) + 1);
    c.b.push_back(staging.p - 1);
    for (Int i = 0; i < pad; ++i) c.b.push_back(1);
    c.b.push_back(0);
    c.b.push_back(0);
    for (Int i = 0; i < 2 * j; ++i) c.b.push_back(1);
    return c;
}

Int epsilon_value(const DivisorClass& d, const Surface& staging) {
    const Int s = staging.s();
    if (static_cast<Int>(d.b.size()) != s + 1)
        throw SizeMismatch("epsilon_value: class not sized for the surface");
    if (s < 3) throw std::domain_error("epsilon_value: surface too small");
    return d.a - d.b[0] - d.b[static_cast<std::size_t>(s - 3)] -
           d.b[static_cast<std::size_t>(s - 2)];
}

Int Certificate::count_total() const {
    Int t = 0;
    for (Int c : counts) t += c;
    return t;
}

DivisorClass Certificate::base_class() const {
    if (base.gp) {
        if (base.eps == 0) return from_gp(*base.gp, surf);
        const Surface staging{surf.n + 1, surf.p};
        DivisorClass b = from_gp(*base.gp, staging);
        b.b.push_back(1);
        return b;
    }
    DivisorClass b;
    b.a = base.a + 2;
    b.b.reserve(static_cast<std::size_t>(surf.point_count()));
    b.b.push_back(base.a);
    for (Int i = 0; i < base.u; ++i) b.b.push_back(1);
    while (static_cast<Int>(b.b.size()) < surf.point_count()) b.b.push_back(0);
    if (base.eps == 1) b.b.back() = 1;
    return b;
}

DivisorClass Certificate::trace_sheaf(int index) const {
    const bool on_staging =
        route == Route::ConstructionA || route == Route::ConstructionB;
    return on_staging ? staging_sheaf(surf, index) : standard_sheaf(surf, index);
}

namespace {

// Every construction ends here: the recorded degree/genus must agree with
// the intersection form, independently of the bookkeeping that produced
// the class.
Certificate finish(Certificate c) {
    const Int dd = degree(c.cls, c.surf);
    const Int gg = arithmetic_genus(c.cls, c.surf);
    if (dd != c.target_d || gg != c.target_g) {
        std::ostringstream msg;
        msg << "certificate bookkeeping mismatch: class realizes (" << dd << ","
            << gg << "), target (" << c.target_d << "," << c.target_g << ")";
        throw BuildError(msg.str());
    }
    return c;
}

}  // namespace

Certificate step1_build(const Surface& surf, Int d, Int g) {
    const Int n = surf.n, p = surf.p;
    if (d < alpha_start(p + 1, n) + 1)
        throw OutOfStrip("step1_build: degree below the strip");
    const Int lo = alpha_prime(p + 1, d - 1, n);
    const Int hi = beta_value(p + 1, d, n) - alpha_profile(p + 1, d, n).x;
    if (g < lo || g > hi) throw OutOfStrip("step1_build: genus outside the strip");
    Int dc = d, gc = g, t2 = 0;
    while (alpha_profile(p + 1, dc - 1, n).x > 0) {
        dc -= n + p;
        gc -= dc + p - 1;
        ++t2;
    }
    const Int u = 2 * gc + 2 * p + 4 - dc;
    if (u < 3 * p - n + 2 || u > 3 * p - n + 4)
        throw BuildError("step1_build: base family parameter out of window");
    Certificate c;
    c.surf = surf;
    c.target_d = d;
    c.target_g = g;
    c.route = Route::Step1;
    c.base = BaseRecord{gc, u, 0, std::nullopt};
    c.counts[1] = t2;
    c.cls = c.base_class();
    if (t2 > 0) {
        const DivisorClass h2 = standard_sheaf(surf, 2);
        for (Int i = 0; i < t2; ++i) c.cls += h2;
    }
    return finish(std::move(c));
}

Certificate construction_a(const Surface& staging, Int d, Int g) {
    const Int n = staging.n - 1, p = staging.p;
    if (3 * p < n + 6)
        throw RegionError("construction_a: needs 3p >= n+6 (at least 12 blown-up points)");
    const AlphaProfile ap = alpha_profile(p, d, staging.n);
    const Int f = ap.value - g;
    if (f < 0 || f > ap.x)
        throw OutOfStrip("construction_a: genus outside the staging strip");
    const FourSquares sq = four_squares(f);
    const Int t1 = (sq.c1 * sq.c1 - sq.c1) + (sq.c2 * sq.c2 - sq.c2) +
                   (sq.c3 * sq.c3 - sq.c3) + (sq.c4 * sq.c4 - sq.c4) + (ap.x - f);
    const Int adds = t1 + sq.c1 + sq.c2 + sq.c3 + sq.c4;
    assert(adds == ap.x);  // every addition advances x by one
    const Int d0 = d - (n + p) * adds;
    const AlphaProfile base_ap = alpha_profile(p, d0, staging.n);
    assert(base_ap.x == 0);
    const Int g0 = base_ap.value;
    const Int u = 2 * g0 + 2 * p + 4 - d0;
    if (u != 3 * p - n + 2 && u != 3 * p - n + 3)
        throw BuildError("construction_a: base family parameter out of window");
    Certificate c;
    c.surf = staging;
    c.target_d = d;
    c.target_g = g;
    c.route = Route::ConstructionA;
    c.base = BaseRecord{g0, u, 0, std::nullopt};
    c.counts = {t1, 0, sq.c1, sq.c2, sq.c3, sq.c4};
    c.squares_used.push_back(sq);
    c.cls = c.base_class();
    const DivisorClass h = staging_sheaf(staging, 1);
    for (Int i = 0; i < t1; ++i) c.cls += h;
    for (int idx = 3; idx <= 6; ++idx) {
        const Int cnt = c.counts[static_cast<std::size_t>(idx - 1)];
        if (cnt == 0) continue;
        const DivisorClass sh = staging_sheaf(staging, idx);
        for (Int i = 0; i < cnt; ++i) c.cls += sh;
    }
    return finish(std::move(c));
}

Certificate construction_b(const Surface& staging, Int d, Int g) {
    if (staging.s() < 4)
        throw RegionError("construction_b: needs at least 4 lattice coordinates past b_0");
    const AlphaProfile ap = alpha_profile(staging.p, d, staging.n);
    const Int r = 2 * (ap.x + 1);
    const Rational two_f = 2 * gp_genus_poly(d, r, staging.p, staging.n);
    if (!two_f.is_integer())
        throw BuildError("construction_b: genus polynomial not half-integral");
    // b in [1, r] is equivalent to strip membership by the floor identity
    const Int b = two_f.num - 2 * g;
    if (b < 1 || b > r)
        throw RegionError("construction_b: square budget outside [1, r]");
    const FourSquares cs = r == 4 ? four_squares_avoiding(b, 2) : four_squares(b);
    GPCoords gp;
    gp.d = d;
    gp.r = r;
    gp.theta2.assign(static_cast<std::size_t>(staging.s()), 0);
    const std::size_t s = gp.theta2.size();
    gp.theta2[s - 1] = 2 * cs.c1;
    gp.theta2[s - 2] = 2 * cs.c2;
    gp.theta2[s - 3] = 2 * cs.c3;
    gp.theta2[s - 4] = 2 * cs.c4;
    Certificate c;
    c.surf = staging;
    c.target_d = d;
    c.target_g = g;
    c.route = Route::ConstructionB;
    c.base.gp = gp;
    c.squares_used.push_back(cs);
    c.cls = from_gp(gp, staging);  // (C1)/(C2) hold by construction
    return finish(std::move(c));
}

Certificate step3_lift(const Certificate& on_staging) {
    if (on_staging.route != Route::ConstructionA &&
        on_staging.route != Route::ConstructionB)
        throw LiftError("step3_lift: only staging-surface certificates can be lifted");
    if (on_staging.base.eps != 0)
        throw LiftError("step3_lift: last component already 1");
    const Surface target = make_surface(on_staging.surf.n - 1, on_staging.surf.p, true);
    Certificate c;
    c.surf = target;
    c.target_d = on_staging.target_d - 1;
    c.target_g = on_staging.target_g;
    c.route = Route::Step3Lift;
    c.base = on_staging.base;
    c.base.eps = 1;
    c.counts = {0,
                on_staging.counts[0],  // staging hyperplanes become tilde copies
                on_staging.counts[2], on_staging.counts[3], on_staging.counts[4],
                on_staging.counts[5]};
    c.squares_used = on_staging.squares_used;
    c.cls = on_staging.cls;
    c.cls.b.push_back(1);
    return finish(std::move(c));
}

Certificate step4_fill(const Surface& surf, Int d, Int g) {
    const Int n = surf.n, p = surf.p;
    if (d < alpha_start(p, n) + 1 || g > alpha_value(p, d, n) ||
        g < alpha_value(p + 1, d - 1, n))
        throw UnreachableError("step4_fill: point outside the band");
    Int dc = d, gc = g, t1 = 0;
    Certificate leaf;
    for (;;) {
        if (alpha_profile(p, dc - 1, n).x == 0) {
            const Int lo = floor_div(dc - n + p, 2);
            const Int hi = floor_div(dc - n + p + 1, 2);
            if (lo <= gc && gc <= hi) {
                const Int u = 2 * gc + 2 * p + 4 - dc;
                if (u < 3 * p - n + 3 || u > 3 * p - n + 5)
                    throw BuildError("step4_fill: base family parameter out of window");
                leaf.surf = surf;
                leaf.target_d = dc;
                leaf.target_g = gc;
                leaf.route = Route::Step4Fill;
                leaf.base = BaseRecord{gc, u, 0, std::nullopt};
                leaf.cls = leaf.base_class();
                leaf = finish(std::move(leaf));
                break;
            }
        }
        if (dc - 1 >= alpha_start(p + 1, n)) {
            const Int strip_lo = alpha_prime(p + 1, dc - 1, n);
            const Int strip_hi = alpha_prime(p + 1, dc, n);
            if (strip_lo <= gc && gc <= strip_hi) {
                const Int step1_hi =
                    beta_value(p + 1, dc, n) - alpha_profile(p + 1, dc, n).x;
                if (gc <= step1_hi) {
                    leaf = step1_build(surf, dc, gc);
                } else {
                    const Surface staging = make_surface(n + 1, p, true);
                    leaf = step3_lift(3 * p >= n + 6
                                          ? construction_a(staging, dc + 1, gc)
                                          : construction_b(staging, dc + 1, gc));
                }
                break;
            }
        }
        const Int dn = dc - (n + p - 1);
        const Int gn = gc - (dc - n);
        if (!(dn >= alpha_start(p, n) + 1 && gn >= alpha_value(p + 1, dn - 1, n) &&
              gn <= alpha_value(p, dn, n)))
            throw UnreachableError("step4_fill: no route reaches the target");
        dc = dn;
        gc = gn;
        ++t1;
    }
    if (t1 > 0) {
        const DivisorClass h = standard_sheaf(surf, 1);
        for (Int i = 0; i < t1; ++i) leaf.cls += h;
        leaf.counts[0] += t1;
        leaf.route = Route::Step4Fill;
        leaf.target_d = d;
        leaf.target_g = g;
    }
    return finish(std::move(leaf));
}

Certificate low_degree_build(Int n, Int d, Int g) {
    if (n < 6) throw RegionError("low_degree_build: needs n >= 6");
    if (d < 2 * n + 1) throw RegionError("low_degree_build: needs d >= 2n+1");
    const Int t = 3 * d - 4 * n + 2 - 2 * g;
    if (t < 1 || t > 5)
        throw RegionError("low_degree_build: no parity-matching tail length in 1..5");
    const Int k = floor_div(n, 3);
    const Surface surf = make_surface(n, n % 3 == 0 ? k : k + 1);
    GPCoords gp;
    gp.d = d;
    gp.r = 4;
    gp.theta2.assign(static_cast<std::size_t>(surf.s()), 0);
    for (Int i = 0; i < t; ++i) gp.theta2[gp.theta2.size() - 1 - static_cast<std::size_t>(i)] = 2;
    Certificate c;
    c.surf = surf;
    c.target_d = d;
    c.target_g = g;
    c.route = Route::LowDegreeGP;
    c.base.gp = gp;
    c.cls = from_gp(gp, surf);
    return finish(std::move(c));
}

Certificate build(Int n, Int d, Int g) {
    const DomainLabel label = classify(n, d, g);
    if (label.tag != DomainTag::Band) throw DelegatedError(label);
    const Int p = label.p;
    if (3 * d < 2 * (3 * p + n + 9)) return low_degree_build(n, d, g);
    return step4_fill(make_surface(n, p), d, g);
}

}  // namespace hcgap
