#include "hcgap/domains.hpp"

#include <sstream>

namespace hcgap {

std::string_view to_string(DomainTag tag) {
    switch (tag) {
        case DomainTag::OutOfRange: return "out-of-range";
        case DomainTag::AboveCastelnuovo: return "above-castelnuovo";
        case DomainTag::A0: return "a0";
        case DomainTag::APrimeN3: return "a-prime";
        case DomainTag::Band: return "band";
        case DomainTag::TildeAk: return "tilde-ak";
        case DomainTag::D2: return "d2";
    }
    return "?";
}

std::string_view to_string(N3Verdict v) {
    switch (v) {
        case N3Verdict::NonLacunaryRegion: return "non-lacunary";
        case N3Verdict::GapFree: return "gap-free";
        case N3Verdict::Gap: return "gap";
    }
    return "?";
}

DomainLabel classify(Int n, Int d, Int g) {
    if (n < 3) throw std::domain_error("classify: n must be >= 3");
    DomainLabel label;
    if (d < n || g < 0) {
        label.tag = DomainTag::OutOfRange;
        return label;
    }
    const Int pi0 = pi_value(0, d, n);
    label.witnesses.pi0 = pi0;
    if (g > pi0) {
        label.tag = DomainTag::AboveCastelnuovo;
        return label;
    }
    if (d <= 2 * n) {
        label.tag = DomainTag::A0;
        return label;
    }
    // d >= 2n+1.  For n = 3 the split is the classical one: boundary pi_1.
    if (n == 3) {
        const Int b = pi_value(1, d, 3);
        label.witnesses.big_b = b;
        if (g > b) {
            label.tag = DomainTag::D2;
        } else {
            label.tag = DomainTag::APrimeN3;  // low domain; no bands exist
            label.p = 0;
            label.witnesses.alpha_hi = alpha_value(0, d, 3);
        }
        return label;
    }
    const BoundaryProfile bp = boundary_profile(n);
    const Int b = bp.big_b(d);
    label.witnesses.big_b = b;
    if (g > b) {
        label.tag = DomainTag::D2;
        return label;
    }
    // Band with the greatest p wins, then the top sliver, then the floor.
    const Int p_min = ceil_div(n, 3);
    for (Int p = n - 4; p >= p_min; --p) {
        const Int lo = alpha_value(p + 1, d - 1, n);
        const Int hi = alpha_value(p, d, n);
        if (lo <= g && g <= hi) {
            label.tag = DomainTag::Band;
            label.p = p;
            label.witnesses.alpha_lo = lo;
            label.witnesses.alpha_hi = hi;
            return label;
        }
    }
    const Int k = bp.k;
    const Int tilde_lo = alpha_value(k + 1, d - 1, n);
    if (tilde_lo < g && g <= b) {
        label.tag = DomainTag::TildeAk;
        label.p = k;
        label.witnesses.alpha_lo = tilde_lo;
        return label;
    }
    const Int aprime_hi = alpha_value(n - 3, d, n);
    if (g <= aprime_hi) {
        label.tag = DomainTag::APrimeN3;
        label.p = n - 3;
        label.witnesses.alpha_hi = aprime_hi;
        return label;
    }
    // Unreachable for n >= 8 (the regions cover the low domain); report the
    // sliver tag so callers always get exactly one label.
    label.tag = DomainTag::TildeAk;
    label.p = k;
    label.witnesses.alpha_lo = tilde_lo;
    return label;
}

N3Verdict n3_gap(Int d, Int g) {
    if (d < 3) throw std::domain_error("n3_gap: d must be >= 3");
    if (g < 0 || g > pi_value(0, d, 3))
        throw std::domain_error("n3_gap: g outside [0, pi_0(d,3)]");
    if (g <= pi_value(1, d, 3)) return N3Verdict::NonLacunaryRegion;
    return is_square((d - 2) * (d - 2) - 4 * g) ? N3Verdict::GapFree : N3Verdict::Gap;
}

AuditReport decomposition_audit(Int n, Int d_max) {
    if (n < 4) throw std::domain_error("decomposition_audit: n must be >= 4");
    if (d_max < n) throw std::domain_error("decomposition_audit: d_max must be >= n");
    AuditReport report;
    report.n = n;
    report.d_max = d_max;
    const Int p_min = ceil_div(n, 3);
    const BoundaryProfile bp = boundary_profile(n);
    for (Int d = n; d <= d_max; ++d) {
        const Int pi0 = pi_value(0, d, n);
        std::optional<Int> b;
        if (d >= 2 * n + 1) {
            b = bp.big_b(d);
            if (*b > pi0) ++report.boundary_violations;
        }
        const Int top = d <= 2 * n ? pi0 : *b;
        for (Int g = 0; g <= top; ++g) {
            AuditRow row;
            row.d = d;
            row.g = g;
            row.pi0 = pi0;
            row.big_b = b;
            DomainLabel label = classify(n, d, g);
            row.tag = label.tag;
            row.p = label.p;
            row.alpha_lo = label.witnesses.alpha_lo;
            row.alpha_hi = label.witnesses.alpha_hi;
            // Raw region membership, independent of classify's precedence.
            std::ostringstream covers;
            bool any = false;
            auto mark = [&](const std::string& name) {
                if (any) covers << ' ';
                covers << name;
                any = true;
            };
            if (d <= 2 * n) {
                mark("a0");
            } else {
                if (g <= alpha_value(n - 3, d, n)) mark("a-prime");
                bool band_edge = false;
                for (Int p = p_min; p <= n - 4; ++p) {
                    if (alpha_value(p + 1, d - 1, n) <= g && g <= alpha_value(p, d, n)) {
                        mark("band" + std::to_string(p));
                        if (g == alpha_value(p + 1, d - 1, n)) band_edge = true;
                    }
                }
                const bool in_tilde = alpha_value(bp.k + 1, d - 1, n) < g && g <= *b;
                if (in_tilde) mark("tilde-ak");
                row.edge_flag = band_edge && in_tilde;
            }
            if (!any) report.uncovered.emplace_back(d, g);
            row.covers = covers.str();
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string AuditReport::to_csv() const {
    std::ostringstream out;
    out << "d,g,tag,p,pi0,B,alpha_lo,alpha_hi,covers,edge_flag\n";
    auto opt = [](const std::optional<Int>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    for (const AuditRow& row : rows) {
        out << row.d << ',' << row.g << ',' << to_string(row.tag) << ','
            << (row.p >= 0 ? std::to_string(row.p) : std::string()) << ','
            << row.pi0 << ',' << opt(row.big_b) << ',' << opt(row.alpha_lo) << ','
            << opt(row.alpha_hi) << ',' << row.covers << ','
            << (row.edge_flag ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace hcgap
