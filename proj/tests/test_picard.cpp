#include "doctest.h"
#include "hcgap/picard.hpp"
#include "hcgap/numerics.hpp"

#include <random>
#include <thread>

using namespace hcgap;

namespace {

DivisorClass cls(Int a, std::vector<Int> b) { return DivisorClass{a, std::move(b)}; }

DivisorClass exceptional(const Surface& surf, Int i) {
    DivisorClass e;
    e.a = 0;
    e.b.assign(static_cast<std::size_t>(surf.point_count()), 0);
    e.b[static_cast<std::size_t>(i)] = -1;
    return e;
}

DivisorClass random_class(std::mt19937_64& rng, const Surface& surf, Int lo, Int hi) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    DivisorClass d;
    d.a = dist(rng);
    d.b.resize(static_cast<std::size_t>(surf.point_count()));
    for (auto& v : d.b) v = dist(rng);
    return d;
}

}  // namespace

TEST_CASE("surface basics on (9,3)") {
    const Surface surf = make_surface(9, 3);
    CHECK(surf.s() == 5);
    CHECK(surf.point_count() == 6);
    CHECK(surf.hyperplane() == cls(5, {3, 1, 1, 1, 1, 1}));
    CHECK(intersect(surf.hyperplane(), surf.hyperplane(), surf) == 11);
    CHECK(surf.surface_degree() == 11);
    // hyperplane sectional genus equals p
    CHECK(arithmetic_genus(surf.hyperplane(), surf) == 3);
}

TEST_CASE("surface window validation") {
    CHECK_THROWS_AS(make_surface(9, 2), std::domain_error);   // p < ceil(n/3)
    CHECK_THROWS_AS(make_surface(9, 6), std::domain_error);   // p > n-4
    CHECK_NOTHROW(make_surface(10, 3, true));                 // staging use
    CHECK_THROWS_AS(make_surface(20, 4, true), std::domain_error);  // s < 0
}

TEST_CASE("intersection form basis relations") {
    const Surface surf = make_surface(9, 3);
    CHECK(intersect(exceptional(surf, 1), exceptional(surf, 2), surf) == 0);
    CHECK(intersect(exceptional(surf, 1), exceptional(surf, 1), surf) == -1);
    CHECK(intersect(surf.hyperplane(), exceptional(surf, 5), surf) == 1);
    const DivisorClass line = cls(1, {0, 0, 0, 0, 0, 0});
    CHECK(intersect(line, line, surf) == 1);
    CHECK_THROWS_AS(intersect(line, cls(1, {0, 0}), surf), SizeMismatch);
}

TEST_CASE("degree and genus of the base families") {
    for (Int n : {8, 9, 11}) {
        for (Int p = ceil_div(n, 3); p <= n - 4; ++p) {
            const Surface surf = make_surface(n, p);
            for (Int g = -1; g <= 6; ++g) {
                for (Int u = 0; u <= surf.s(); ++u) {
                    DivisorClass d;
                    d.a = g + 2;
                    d.b.assign(static_cast<std::size_t>(surf.point_count()), 0);
                    d.b[0] = g;
                    for (Int i = 1; i <= u; ++i) d.b[static_cast<std::size_t>(i)] = 1;
                    CHECK(degree(d, surf) == 2 * g + 2 * p + 4 - u);
                    CHECK(arithmetic_genus(d, surf) == g);
                }
            }
        }
    }
}

TEST_CASE("degree and genus pinned values") {
    const Surface surf = make_surface(9, 3);
    CHECK(degree(cls(5, {3, 1, 1, 1, 1, 1}), surf) == 11);
    CHECK(degree(cls(0, {0, 0, 0, 0, 0, 0}), surf) == 0);
    CHECK(arithmetic_genus(cls(1, {0, 0, 0, 0, 0, 0}), surf) == 0);  // plane line
}

TEST_CASE("gp coordinates: hyperplane and pinned classes") {
    const Surface surf = make_surface(9, 3);
    const GPCoords h = to_gp(surf.hyperplane(), surf);
    CHECK(h.d == 11);
    CHECK(h.r == 2);
    CHECK(h.theta2 == std::vector<Int>{0, 0, 0, 0, 0});
    CHECK(from_gp(h, surf) == surf.hyperplane());

    const GPCoords zero = to_gp(cls(0, {0, 0, 0, 0, 0, 0}), surf);
    CHECK(zero.d == 0);
    CHECK(zero.r == 0);

    // r=4 class with a single theta = 1: (8; 4, 2,2,2,2, 1), degree 19,
    // genus F(19,4) - 1/2 = 11
    GPCoords c;
    c.d = 19;
    c.r = 4;
    c.theta2 = {0, 0, 0, 0, 2};
    const DivisorClass d = from_gp(c, surf);
    CHECK(d == cls(8, {4, 2, 2, 2, 2, 1}));
    CHECK(degree(d, surf) == 19);
    CHECK(arithmetic_genus(d, surf) == 11);
    CHECK((gp_genus_poly(19, 4, 3, 9) - Rational(1, 2)) == Rational(11));
}

TEST_CASE("gp coordinates: integrality violations") {
    const Surface surf = make_surface(9, 3);
    GPCoords c;
    c.d = 19;
    c.r = 4;
    c.theta2 = {0, 0, 0, 0, 1};  // theta = 1/2 against even r: violates (C1)
    CHECK_THROWS_AS(from_gp(c, surf), IntegralityError);
    c.theta2 = {0, 0, 0, 0, 2};
    c.d = 20;  // degree equation now insoluble for integer a: violates (C2)
    CHECK_THROWS_AS(from_gp(c, surf), IntegralityError);
}

TEST_CASE("adjunction additivity and shifts on random classes") {
    std::mt19937_64 rng(20240811u);
    for (Int n = 8; n <= 14; ++n) {
        for (Int p = ceil_div(n, 3); p <= n - 4; ++p) {
            const Surface surf = make_surface(n, p);
            const DivisorClass h = surf.hyperplane();
            for (int iter = 0; iter < 200; ++iter) {
                const DivisorClass d1 = random_class(rng, surf, -8, 12);
                const DivisorClass d2 = random_class(rng, surf, -8, 12);
                CHECK(arithmetic_genus(d1 + d2, surf) ==
                      arithmetic_genus(d1, surf) + arithmetic_genus(d2, surf) +
                          intersect(d1, d2, surf) - 1);
                // hyperplane shift
                CHECK(degree(d1 + h, surf) == degree(d1, surf) + n + p - 1);
                CHECK(arithmetic_genus(d1 + h, surf) ==
                      arithmetic_genus(d1, surf) + degree(d1, surf) + p - 1);
                // tilde shift requires a trailing zero
                DivisorClass d3 = d1;
                d3.b.back() = 0;
                DivisorClass ht = h;
                ht.b.back() = 0;
                CHECK(degree(d3 + ht, surf) == degree(d3, surf) + n + p);
                CHECK(arithmetic_genus(d3 + ht, surf) ==
                      arithmetic_genus(d3, surf) + degree(d3, surf) + p - 1);
            }
        }
    }
}

TEST_CASE("genus formula agrees with adjunction against the canonical class") {
    std::mt19937_64 rng(31337u);
    for (Int n : {8, 11, 14}) {
        for (Int p = ceil_div(n, 3); p <= n - 4; ++p) {
            const Surface surf = make_surface(n, p);
            const DivisorClass k = surf.canonical();
            CHECK(intersect(k, k, surf) == 9 - surf.point_count());
            std::uniform_int_distribution<Int> dist(-7, 11);
            for (int iter = 0; iter < 300; ++iter) {
                DivisorClass d;
                d.a = dist(rng);
                d.b.resize(static_cast<std::size_t>(surf.point_count()));
                for (auto& v : d.b) v = dist(rng);
                const Int self = intersect(d, d, surf);
                const Int with_k = intersect(d, k, surf);
                CHECK((self + with_k) % 2 == 0);
                CHECK(arithmetic_genus(d, surf) == 1 + (self + with_k) / 2);
            }
        }
    }
}

TEST_CASE("genus through gp coordinates equals adjunction genus") {
    std::mt19937_64 rng(77001u);
    for (Int n : {8, 10, 13}) {
        for (Int p = ceil_div(n, 3); p <= n - 4; ++p) {
            const Surface surf = make_surface(n, p);
            for (int iter = 0; iter < 300; ++iter) {
                const DivisorClass d = random_class(rng, surf, -6, 10);
                const GPCoords c = to_gp(d, surf);
                // g = F(d,r) - (1/8) sum theta2^2, exactly
                Rational rhs = gp_genus_poly(c.d, c.r, p, n);
                for (Int t2 : c.theta2) rhs = rhs - Rational(t2 * t2, 8);
                CHECK(Rational(arithmetic_genus(d, surf)) == rhs);
            }
        }
    }
}

TEST_CASE("gp round trips on random classes") {
    std::mt19937_64 rng(424242u);
    for (int iter = 0; iter < 100000; ++iter) {
        const Int n = 8 + static_cast<Int>(rng() % 7);
        const Int p_min = ceil_div(n, 3);
        const Int p = p_min + static_cast<Int>(rng() % static_cast<unsigned long long>(n - 3 - p_min));
        const Surface surf = make_surface(n, p);
        const DivisorClass d = random_class(rng, surf, -20, 20);
        const GPCoords c = to_gp(d, surf);
        CHECK(from_gp(c, surf) == d);
        // and the coordinate-side identity
        CHECK(to_gp(from_gp(c, surf), surf) == c);
    }
}

TEST_CASE("pure functions behave identically under concurrent use") {
    // No shared mutable state anywhere: eight threads recomputing the same
    // column must agree with the single-threaded answer bit for bit.
    auto column = [](Int seed) {
        std::vector<Int> values;
        for (Int d = 19; d <= 70; ++d) {
            values.push_back(alpha_value(3, d, 9));
            values.push_back(pi_value(0, d, 9));
            const Surface surf = make_surface(9, 3 + seed % 3);
            values.push_back(arithmetic_genus(surf.hyperplane(), surf));
        }
        return values;
    };
    const std::vector<Int> expected = column(0);
    std::vector<std::vector<Int>> results(8);
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < 8; ++t)
            pool.emplace_back([&results, t, &column] { results[static_cast<std::size_t>(t)] = column(0); });
        for (auto& th : pool) th.join();
    }
    for (const auto& r : results) CHECK(r == expected);
}
