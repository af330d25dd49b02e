#pragma once
// Construction of divisor-class certificates realizing a target (d,g) inside
// a band label.  The pipeline mirrors the inductive construction: a base
// family (a+2; a, 1^u, 0^...) plus repeated additions of six standard
// sheaves, staged through a helper surface one ambient dimension up, with a
// Gruson-Peskine route for the small surfaces and a dedicated low-degree
// route near d = 2n+1.  Every certificate re-derives its degree and genus
// from the intersection form before it is returned.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hcgap/domains.hpp"
#include "hcgap/numerics.hpp"
#include "hcgap/picard.hpp"
#include "hcgap/verdict.hpp"

namespace hcgap {

enum class Route {
    Step1,          // base family + copies of the tilde hyperplane
    ConstructionA,  // staged four-square construction on the helper surface
    ConstructionB,  // Gruson-Peskine construction on the helper surface
    Step3Lift,      // helper-surface certificate lifted down one dimension
    Step4Fill,      // any of the above plus copies of the hyperplane
    LowDegreeGP,    // r = 4 Gruson-Peskine classes near d = 2n+1
};

std::string_view to_string(Route r);
Route route_from_string(std::string_view s);

// The six standard sheaves on Surface(n,p): index 1 the hyperplane class,
// index 2 its tilde variant (last entry 0), indices 3..6 the genus-(p-1)
// classes with a sliding pair of zeros and a trailing zero.  Indices 3..6
// need s >= 2*index - 1; out-of-range patterns throw std::domain_error.
DivisorClass standard_sheaf(const Surface& surf, int index);

// All six at once; requires a surface large enough for every pattern
// (s >= 11).
struct StandardSheaves {
    DivisorClass h1, h2, h3, h4, h5, h6;
    static StandardSheaves on(const Surface& surf);
    const DivisorClass& at(int index) const;
};

// Classes added while staging on the helper surface (one dimension up):
// index 1 its hyperplane, indices 3..6 the sliding-zero-pair classes without
// the trailing zero.
DivisorClass staging_sheaf(const Surface& staging, int index);

// epsilon(D) = a - b_0 - (the two entries at the zero pair of the index-3
// staging sheaf).  On a staging surface with s entries past b_0 those sit at
// positions s-3 and s-2.  Grows by exactly 2 per index-3 addition.
Int epsilon_value(const DivisorClass& d, const Surface& staging);

// Base family record: either the (a+2; a, 1^u, 0^...) parameters or the
// Gruson-Peskine coordinates of the base class.  eps = 1 marks the extra
// trailing 1 a lift introduces.
struct BaseRecord {
    Int a = 0;
    Int u = 0;
    int eps = 0;
    std::optional<GPCoords> gp;

    bool operator==(const BaseRecord&) const = default;
};

struct Certificate {
    Surface surf;
    Int target_d = 0;
    Int target_g = 0;
    DivisorClass cls;
    Route route = Route::Step1;
    BaseRecord base;
    std::array<Int, 6> counts{};  // multiples of sheaves 1..6
    std::vector<FourSquares> squares_used;
    std::optional<Verdict> verdict;

    Int count_total() const;
    // Reconstructs the base class from the record (for trace replay).
    DivisorClass base_class() const;
    // The sheaf the trace refers to at the given index; staging sheaves for
    // helper-surface certificates, standard sheaves otherwise.
    DivisorClass trace_sheaf(int index) const;
};

// Strip construction directly on the target surface: base family plus t2
// copies of the tilde hyperplane.  Covers
//   alpha'_{p+1}(d-1,n) <= g <= beta_{p+1}(d,n) - x_{p+1}(d,n).
Certificate step1_build(const Surface& surf, Int d, Int g);

// Four-square staging on the helper surface (requires 3p >= n+6 where n is
// the target dimension, i.e. staging.n - 1).  Covers
//   alpha_p(d, n+1) - x_p(d, n+1) <= g <= alpha_p(d, n+1).
Certificate construction_a(const Surface& staging, Int d, Int g);

// Gruson-Peskine construction on the helper surface (requires s >= 4).
// Same strip as construction_a.
Certificate construction_b(const Surface& staging, Int d, Int g);

// Re-reads a helper-surface certificate on the target surface: appends one
// lattice coordinate, set to 1.  Genus is unchanged and the degree drops by
// one; the result is validated against the target surface's hyperplane.
Certificate step3_lift(const Certificate& on_staging);

// Band filler: peels hyperplane copies until the point falls into the base
// window or the step-1/step-3 strip.
Certificate step4_fill(const Surface& surf, Int d, Int g);

// r = 4 construction for 2n+1 <= d below the low-degree threshold
// (3d < 2(3p+n+9)); lives on the surface with p = floor(n/3) or one more
// depending on n mod 3.
Certificate low_degree_build(Int n, Int d, Int g);

// Route dispatcher: classifies, rejects non-band labels with a
// DelegatedError, picks the low-degree route below the threshold and the
// step pipeline otherwise.
Certificate build(Int n, Int d, Int g);

// Thrown by build() for labels whose realizability is settled elsewhere
// (A0, the floor and sliver regions, D2, and everything out of range).
struct DelegatedError : BuildError {
    DomainLabel label;
    explicit DelegatedError(DomainLabel l)
        : BuildError("build: label " + std::string(to_string(l.tag)) +
                     " is not constructed here"),
          label(l) {}
};

}  // namespace hcgap
