#pragma once
// Arithmetic verification that a certificate's linear system is nonempty,
// base-point free and contains a smooth irreducible curve.  Two criteria are
// in play: coefficient conditions obtained by specializing the blown-up
// points onto a plane cubic (including the Gruson-Peskine reformulation
// (C1)-(C5)), and a coefficient bound for sums of a base family with the six
// standard sheaves.  One family escapes the arithmetic bound and is covered
// by a geometric argument; its verdict is annotated, not failed.

#include "hcgap/builder.hpp"
#include "hcgap/verdict.hpp"

namespace hcgap {

// Smoothing conditions (ii.1)..(ii.3)' on sorted coefficients.  The class
// coefficients are sorted first (the permutation is noted); classes with a
// non-positive entry or a < b_0 get an inapplicable verdict, never an error.
Verdict check_cubic(const DivisorClass& d);

// Companion h^1-vanishing conditions (i.1)..(i.3)'.  Pure predicates; no
// cohomology is computed behind them.
Verdict check_cubic_h1(const DivisorClass& d);

// Criterion for the family (p+2; p, 1^s): member curves for s <= 3p+3,
// very ample for s <= 3p.  Throws ShapeError for any other pattern.
Verdict check_rational(const DivisorClass& d, Int p);

// Conditions (C1)-(C5) in Gruson-Peskine coordinates.  The strict variant of
// (C3) (top theta strictly below r/2) is recorded as an extra check that
// does not affect holds.
Verdict check_c1c5(const GPCoords& c, const Surface& surf);

// Classical criterion: sorted, positive, a > b_0 and a >= b_0+b_1+b_2.
Verdict check_triple_dominance(const DivisorClass& d);

// Coefficient bound for traces base + sum t_i * sheaf_i with a {0,1}-base:
//   3a >= u + n - 7 - (t+1)(n-4),
// where u counts the base's 1-entries and t the total sheaf count.  The
// worst-case-u form 3a >= 3p - (t+1)(n-4) - 2 is reported alongside.
// Throws ShapeError when the trace is not in that shape.
Verdict check_sheaf_sum(const Certificate& cert);

// Route dispatch without throwing: Gruson-Peskine routes and small surfaces
// get (C1)-(C5); large-surface pipeline certificates get the sheaf-sum
// bound with the geometric fallback for the one escaping family.
Verdict evaluate(const Certificate& cert);

// Full verification: recomputes degree and genus from the intersection form,
// replays the trace, runs the route criterion, and records non-degeneracy
// bookkeeping.  Returns the certificate with the verdict filled.  When
// throw_on_failure is set (the default) a failed verdict raises
// VerificationFailure naming the first failing check.
Certificate verify(Certificate cert, bool throw_on_failure = true);

}  // namespace hcgap
