#pragma once
// Classification of integer triples (n,d,g) into the (d,g)-plane domain
// decomposition: the Castelnuovo-admissible wedge splits into a low domain
// (degree at most 2n; the A0 region), stacked band regions between
// consecutive alpha-profiles, a top sliver below the outer boundary B, a
// floor region below the lowest band, and the conjectural region D2 above B.
// Also the classical n = 3 lacunary criterion.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcgap/numerics.hpp"

namespace hcgap {

enum class DomainTag {
    OutOfRange,        // d < n or g < 0
    AboveCastelnuovo,  // g > pi_0(d,n)
    A0,                // n <= d <= 2n, 0 <= g <= pi_0
    APrimeN3,          // d >= 2n+1, 0 <= g <= alpha_{n-3}(d,n)
    Band,              // alpha_{p+1}(d-1,n) <= g <= alpha_p(d,n), greatest p
    TildeAk,           // alpha_{k+1}(d-1,n) < g <= B(d,n)
    D2,                // B(d,n) < g <= pi_0(d,n)
};

std::string_view to_string(DomainTag tag);

struct DomainWitnesses {
    std::optional<Int> pi0;
    std::optional<Int> big_b;
    std::optional<Int> alpha_lo;  // lower band edge used for the decision
    std::optional<Int> alpha_hi;  // upper band edge used for the decision
};

struct DomainLabel {
    DomainTag tag = DomainTag::OutOfRange;
    Int p = -1;  // band index for Band, k for TildeAk, n-3 for APrimeN3
    DomainWitnesses witnesses;
};

// Label a triple.  Precedence at shared edges: Band with the greatest p,
// then TildeAk, then APrimeN3.  For n = 3 there are no bands; the low/high
// split is the classical one with boundary pi_1(d,3) playing the role of B.
DomainLabel classify(Int n, Int d, Int g);

enum class N3Verdict { NonLacunaryRegion, GapFree, Gap };

std::string_view to_string(N3Verdict v);

// Lacunary criterion in projective 3-space: for pi_1(d,3) < g <= pi_0(d,3)
// the pair is realizable iff (d-2)^2 - 4g is a perfect square.
N3Verdict n3_gap(Int d, Int g);

struct AuditRow {
    Int d = 0, g = 0;
    DomainTag tag = DomainTag::OutOfRange;
    Int p = -1;
    Int pi0 = 0;
    std::optional<Int> big_b;
    std::optional<Int> alpha_lo, alpha_hi;
    std::string covers;     // every raw region containing the point
    bool edge_flag = false; // claimed by both a band edge and the top sliver
};

struct AuditReport {
    Int n = 0, d_max = 0;
    std::vector<AuditRow> rows;
    std::vector<std::pair<Int, Int>> uncovered;  // low-domain points with no raw cover
    Int boundary_violations = 0;                 // columns where B > pi_0
    std::string to_csv() const;
};

// Exhaustive sweep over n <= d <= d_max, 0 <= g <= top-of-low-domain: labels
// every point, records which raw regions cover it, and lists uncovered
// points (none are expected for n >= 8).
AuditReport decomposition_audit(Int n, Int d_max);

}  // namespace hcgap
