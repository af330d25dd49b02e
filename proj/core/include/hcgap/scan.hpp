#pragma once
// Grid scans over a rectangle of the (d,g)-plane: one CSV row per integer
// point of the admissible wedge, optional certificate construction and
// verification per point, and a static SVG chart with the boundary curves,
// colored band cells and (for n = 3) gap markers.  Output is deterministic
// byte for byte: fixed column order, integer-only geometry, no timestamps.

#include <string>

#include "hcgap/domains.hpp"

namespace hcgap {

struct ScanJob {
    Int n = 0;
    Int d_lo = 0;
    Int d_hi = -1;  // empty range allowed: header-only CSV, axes-only SVG
    bool mode_classify = true;
    bool mode_build = false;
    bool mode_verify = false;
    bool mode_oracle = false;
    Int oracle_a_max = 12;
};

struct ScanSummary {
    Int rows = 0;
    Int built = 0;
    Int verified = 0;
    Int geometric = 0;  // verdicts that passed with the geometric annotation
    Int delegated = 0;  // labels no certificate is constructed for
    Int failures = 0;   // build or verification failures
    Int gaps = 0;       // n = 3 only
};

struct ScanResult {
    std::string csv;
    std::string svg;
    ScanSummary summary;
    bool all_ok() const { return summary.failures == 0; }
    std::string summary_line() const;
    std::string summary_json(const ScanJob& job) const;
};

ScanResult run_scan(const ScanJob& job);

}  // namespace hcgap
