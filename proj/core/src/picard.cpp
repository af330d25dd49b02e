#include "hcgap/picard.hpp"

#include <numeric>

namespace hcgap {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (b.size() != o.b.size())
        throw SizeMismatch("DivisorClass: adding classes of different lattice rank");
    a += o.a;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += o.b[i];
    return *this;
}

DivisorClass Surface::hyperplane() const {
    DivisorClass h;
    h.a = p + 2;
    h.b.assign(static_cast<std::size_t>(point_count()), 1);
    h.b[0] = p;
    return h;
}

DivisorClass Surface::canonical() const {
    DivisorClass k;
    k.a = -3;
    k.b.assign(static_cast<std::size_t>(point_count()), -1);
    return k;
}

Surface make_surface(Int n, Int p, bool relaxed) {
    if (n < 5) throw std::domain_error("make_surface: n must be >= 5");
    Surface surf{n, p};
    if (surf.s() < 0)
        throw std::domain_error("make_surface: negative point count (3p-n+5 < 0)");
    if (!relaxed && (p < ceil_div(n, 3) || p > n - 4))
        throw std::domain_error("make_surface: p outside [ceil(n/3), n-4]");
    return surf;
}

namespace {

void check_size(const DivisorClass& d, const Surface& surf, const char* who) {
    if (static_cast<Int>(d.b.size()) != surf.point_count())
        throw SizeMismatch(std::string(who) + ": class not sized for the surface");
}

}  // namespace

Int intersect(const DivisorClass& d1, const DivisorClass& d2, const Surface& surf) {
    check_size(d1, surf, "intersect");
    check_size(d2, surf, "intersect");
    Int v = d1.a * d2.a;
    for (std::size_t i = 0; i < d1.b.size(); ++i) v -= d1.b[i] * d2.b[i];
    return v;
}

Int degree(const DivisorClass& d, const Surface& surf) {
    return intersect(d, surf.hyperplane(), surf);
}

Int arithmetic_genus(const DivisorClass& d, const Surface& surf) {
    check_size(d, surf, "arithmetic_genus");
    Int g = (d.a - 1) * (d.a - 2) / 2;
    for (Int bi : d.b) g -= bi * (bi - 1) / 2;
    return g;
}

GPCoords to_gp(const DivisorClass& d, const Surface& surf) {
    check_size(d, surf, "to_gp");
    GPCoords c;
    c.r = d.a - d.b[0];
    c.theta2.reserve(d.b.size() - 1);
    for (std::size_t i = 1; i < d.b.size(); ++i) c.theta2.push_back(c.r - 2 * d.b[i]);
    c.d = degree(d, surf);
    return c;
}

DivisorClass from_gp(const GPCoords& c, const Surface& surf) {
    if (static_cast<Int>(c.theta2.size()) != surf.s())
        throw SizeMismatch("from_gp: theta vector not sized for the surface");
    for (Int t2 : c.theta2)
        if ((t2 - c.r) % 2 != 0)
            throw IntegralityError("from_gp: theta_i not congruent to r/2 (mod 1)");
    // degree equation: d = ((n-p-5)/2) r + 2a + sum theta_i, solved for a
    const Int num = 2 * c.d - (surf.n - surf.p - 5) * c.r -
                    std::accumulate(c.theta2.begin(), c.theta2.end(), Int{0});
    if (num % 4 != 0)
        throw IntegralityError("from_gp: degree equation has no integer solution");
    DivisorClass d;
    d.a = num / 4;
    d.b.reserve(c.theta2.size() + 1);
    d.b.push_back(d.a - c.r);
    for (Int t2 : c.theta2) d.b.push_back((c.r - t2) / 2);
    return d;
}

}  // namespace hcgap
