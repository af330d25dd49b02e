#pragma once
// Independent brute-force cross-validation: exhaustive enumeration of the
// realizable (degree, genus) pairs under a chosen criterion on one surface,
// and a pointwise audit of the numerical identities the constructions rely
// on.  Deliberately dumb: the only cleverness allowed here is an iteration
// cap.

#include <utility>
#include <vector>

#include "hcgap/builder.hpp"
#include "hcgap/smoothness.hpp"

namespace hcgap {

enum class SpectrumCriterion { C1C5, CubicConditions, TripleDominance };

std::string_view to_string(SpectrumCriterion c);
SpectrumCriterion spectrum_criterion_from_string(std::string_view s);

struct SpectrumReport {
    Surface surf;
    Int a_max = 0;
    SpectrumCriterion criterion = SpectrumCriterion::C1C5;
    std::vector<std::pair<Int, Int>> pairs;  // sorted, unique
    Int enumerated = 0;
    Int castelnuovo_violations = 0;  // pairs with d >= n and g > pi_0(d,n)
    // band points a builder comparison found absent (see builder_agreement)
    std::vector<std::pair<Int, Int>> misses;

    bool contains(Int d, Int g) const;
    std::string to_csv() const;
};

// Enumerates every class with 0 <= a <= a_max, 0 <= b_i <= a, filters by the
// criterion and collects (degree, genus) pairs.  Throws ResourceCapExceeded
// when the enumeration would exceed cap classes (default 10^8); never
// truncates silently.
SpectrumReport brute_spectrum(const Surface& surf, Int a_max, SpectrumCriterion criterion,
                              Int cap = 100000000);

struct SpectrumDiff {
    std::vector<std::pair<Int, Int>> only_first;
    std::vector<std::pair<Int, Int>> only_second;
};

SpectrumDiff compare_spectra(const SpectrumReport& a, const SpectrumReport& b);

// Builder-oracle agreement: sweeps every band point with 2n+1 <= d <= d_max,
// builds and verifies, and keeps the certificates that live on the report's
// surface, were judged by the report's criterion, and whose class lies
// inside the enumeration bound.  Every such (d,g) must appear among the
// report's pairs; the absentees are recorded into report.misses.
struct SpectrumAgreement {
    Int candidates = 0;
    std::vector<std::pair<Int, Int>> misses;
};

SpectrumAgreement builder_agreement(SpectrumReport& report, Int d_max);

struct LemmaAudit {
    Int identities_checked = 0;
    std::vector<std::string> violations;  // "identity,n,p,d" rows
    // Points where the two readings of the congruence switch disagree (the
    // printed congruence class versus only its first period).  Informational,
    // never counted as violations.
    std::vector<std::string> beta_reading_flags;
    std::string to_csv() const;
};

// Evaluates, for every n in [n_lo, n_hi], every p in [ceil(n/3), n-4] and
// d_span consecutive degrees, the shift/ordering/cross-index identities of
// the alpha profiles and the recurrence and floor identities of the genus
// polynomial.  Zero violations expected.
LemmaAudit lemma_audit(Int n_lo, Int n_hi, Int d_span);

}  // namespace hcgap
