#pragma once
// Verdict records produced by the smoothness checks.  Plain data so that
// certificates can embed them; the checks themselves live in smoothness.hpp.

#include <string>
#include <string_view>
#include <vector>

#include "hcgap/int_math.hpp"

namespace hcgap {

enum class Criterion {
    CubicConditions,   // coefficient conditions from the cubic specialization
    H1Vanishing,       // companion first-cohomology vanishing conditions
    RationalFamily,    // the (p+2; p, 1^s) family criterion
    C1C5,              // conditions (C1)-(C5) in Gruson-Peskine coordinates
    SheafSumBound,     // base-plus-standard-sheaves coefficient bound
    TripleDominance,   // classical a >= b0+b1+b2 criterion
    GeometricFallback, // arithmetic bound failed; covered by a geometric argument
};

std::string_view to_string(Criterion c);
Criterion criterion_from_string(std::string_view s);

// One evaluated sub-inequality: lhs OP rhs with the sides recorded.
struct Check {
    std::string name;
    Int lhs = 0;
    Int rhs = 0;
    bool pass = false;

    bool operator==(const Check&) const = default;
};

struct Verdict {
    Criterion criterion = Criterion::C1C5;
    bool applicable = true;   // false when the input shape rules the check out
    bool holds = false;
    bool geometric_fallback = false;  // pass-with-annotation
    std::string which;                // matched condition or fallback family
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool operator==(const Verdict&) const = default;
};

}  // namespace hcgap
