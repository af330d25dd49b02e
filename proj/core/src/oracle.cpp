#include "hcgap/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hcgap {

std::string_view to_string(SpectrumCriterion c) {
    switch (c) {
        case SpectrumCriterion::C1C5: return "c1-c5";
        case SpectrumCriterion::CubicConditions: return "cubic-conditions";
        case SpectrumCriterion::TripleDominance: return "triple-dominance";
    }
    return "?";
}

SpectrumCriterion spectrum_criterion_from_string(std::string_view s) {
    if (s == "c1-c5" || s == "c1c5") return SpectrumCriterion::C1C5;
    if (s == "cubic-conditions" || s == "cubic") return SpectrumCriterion::CubicConditions;
    if (s == "triple-dominance" || s == "triple") return SpectrumCriterion::TripleDominance;
    throw std::domain_error("unknown spectrum criterion: " + std::string(s));
}

bool SpectrumReport::contains(Int d, Int g) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(d, g));
}

std::string SpectrumReport::to_csv() const {
    std::ostringstream out;
    out << "# n=" << surf.n << " p=" << surf.p << " a_max=" << a_max
        << " criterion=" << to_string(criterion) << " enumerated=" << enumerated
        << " castelnuovo_violations=" << castelnuovo_violations
        << " misses=" << misses.size() << "\n";
    out << "d,g\n";
    for (const auto& [d, g] : pairs) out << d << ',' << g << '\n';
    for (const auto& [d, g] : misses) out << "# miss " << d << ',' << g << '\n';
    return out.str();
}

SpectrumReport brute_spectrum(const Surface& surf, Int a_max, SpectrumCriterion criterion,
                              Int cap) {
    if (a_max < 0) throw std::domain_error("brute_spectrum: a_max must be >= 0");
    SpectrumReport report;
    report.surf = surf;
    report.a_max = a_max;
    report.criterion = criterion;
    // Class count: sum over a of (a+1)^(s+1); refuse to start past the cap.
    Int total = 0;
    const Int entries = surf.point_count();
    for (Int a = 0; a <= a_max; ++a) {
        Int block = 1;
        for (Int i = 0; i < entries && block <= cap; ++i) block *= a + 1;
        total += block;
        if (total > cap)
            throw ResourceCapExceeded("brute_spectrum: enumeration exceeds the configured cap");
    }
    std::set<std::pair<Int, Int>> pairs;
    DivisorClass cls;
    cls.b.assign(static_cast<std::size_t>(entries), 0);
    for (Int a = 0; a <= a_max; ++a) {
        cls.a = a;
        std::fill(cls.b.begin(), cls.b.end(), Int{0});
        // odometer over b in [0,a]^(s+1)
        for (;;) {
            ++report.enumerated;
            bool pass = false;
            switch (criterion) {
                case SpectrumCriterion::C1C5:
                    pass = check_c1c5(to_gp(cls, surf), surf).holds;
                    break;
                case SpectrumCriterion::CubicConditions:
                    pass = check_cubic(cls).holds;
                    break;
                case SpectrumCriterion::TripleDominance:
                    pass = check_triple_dominance(cls).holds;
                    break;
            }
            if (pass) pairs.emplace(degree(cls, surf), arithmetic_genus(cls, surf));
            // advance
            std::size_t pos = 0;
            while (pos < cls.b.size() && cls.b[pos] == a) {
                cls.b[pos] = 0;
                ++pos;
            }
            if (pos == cls.b.size()) break;
            ++cls.b[pos];
        }
    }
    report.pairs.assign(pairs.begin(), pairs.end());
    for (const auto& [d, g] : report.pairs)
        if (d >= surf.n && g > pi_value(0, d, surf.n)) ++report.castelnuovo_violations;
    return report;
}

SpectrumAgreement builder_agreement(SpectrumReport& report, Int d_max) {
    SpectrumAgreement agreement;
    const Int n = report.surf.n;
    for (Int d = 2 * n + 1; d <= d_max; ++d) {
        const Int top = pi_value(0, d, n);
        for (Int g = 0; g <= top; ++g) {
            if (classify(n, d, g).tag != DomainTag::Band) continue;
            Certificate cert;
            try {
                cert = verify(build(n, d, g), false);
            } catch (const BuildError&) {
                continue;  // band coverage has its own acceptance gate
            }
            if (!(cert.surf == report.surf) || !cert.verdict->holds) continue;
            const bool same_criterion =
                (report.criterion == SpectrumCriterion::C1C5 &&
                 cert.verdict->criterion == Criterion::C1C5) ||
                (report.criterion == SpectrumCriterion::CubicConditions &&
                 cert.verdict->criterion == Criterion::CubicConditions);
            if (!same_criterion) continue;
            bool in_bound = cert.cls.a <= report.a_max;
            for (Int b : cert.cls.b)
                if (b < 0 || b > cert.cls.a) in_bound = false;
            if (!in_bound) continue;
            ++agreement.candidates;
            if (!report.contains(d, g)) agreement.misses.emplace_back(d, g);
        }
    }
    report.misses = agreement.misses;
    return agreement;
}

SpectrumDiff compare_spectra(const SpectrumReport& a, const SpectrumReport& b) {
    SpectrumDiff diff;
    std::set_difference(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                        std::back_inserter(diff.only_first));
    std::set_difference(b.pairs.begin(), b.pairs.end(), a.pairs.begin(), a.pairs.end(),
                        std::back_inserter(diff.only_second));
    return diff;
}

std::string LemmaAudit::to_csv() const {
    std::ostringstream out;
    out << "# identities_checked=" << identities_checked
        << " violations=" << violations.size()
        << " beta_reading_flags=" << beta_reading_flags.size() << "\n";
    out << "identity,n,p,d\n";
    for (const std::string& v : violations) out << v << '\n';
    for (const std::string& f : beta_reading_flags) out << f << '\n';
    return out.str();
}

namespace {

void note(LemmaAudit& audit, const char* identity, Int n, Int p, Int d) {
    std::ostringstream row;
    row << identity << ',' << n << ',' << p << ',' << d;
    audit.violations.push_back(row.str());
}

}  // namespace

LemmaAudit lemma_audit(Int n_lo, Int n_hi, Int d_span) {
    LemmaAudit audit;
    for (Int n = n_lo; n <= n_hi; ++n) {
        const Int p_min = ceil_div(n, 3);
        for (Int p = p_min; p <= n - 4; ++p) {
            const Int d_start = alpha_start(p, n) + 1;
            for (Int d = d_start; d < d_start + d_span; ++d) {
                const AlphaProfile cur = alpha_profile(p, d, n);
                const AlphaProfile nxt = alpha_profile(p, d + (n + p - 1), n);
                // period shift: x advances by one, t and u stay put
                ++audit.identities_checked;
                if (nxt.x != cur.x + 1 || nxt.t != cur.t || nxt.u != cur.u ||
                    nxt.value != cur.value + d + p - 1)
                    note(audit, "alpha-shift", n, p, d);
                ++audit.identities_checked;
                if (alpha_prime(p, d + (n + p - 1), n) != alpha_prime(p, d, n) + d + p - 1)
                    note(audit, "alpha-prime-shift", n, p, d);
                // band ordering
                ++audit.identities_checked;
                if (alpha_value(p + 1, d - 1, n) > cur.value)
                    note(audit, "band-order", n, p, d);
                if (d >= alpha_start(p, n) + n + p) {
                    ++audit.identities_checked;
                    if (alpha_value(p + 1, d, n) > cur.value)
                        note(audit, "band-order-same-degree", n, p, d);
                }
                // cross-index between consecutive ambient dimensions
                const AlphaProfile up = alpha_profile(p, d + 1, n + 1);
                const AlphaProfile lowered = alpha_profile(p + 1, d, n);
                ++audit.identities_checked;
                if (lowered.x != up.x || lowered.t != up.t - 1)
                    note(audit, "cross-index", n, p, d);
                ++audit.identities_checked;
                const Int ap = alpha_prime(p + 1, d, n);
                const Int al = alpha_value(p + 1, d, n);
                if (ap != up.value || (ap != al && ap != al - 1))
                    note(audit, "companion-membership", n, p, d);
                // genus-polynomial recurrence and lowering
                for (Int r = 0; r <= 40; ++r) {
                    ++audit.identities_checked;
                    const Rational lhs = gp_genus_poly(d + (n + p - 1), r + 2, p, n);
                    const Rational rhs = gp_genus_poly(d, r, p, n) + Rational(d + p - 1);
                    if (!(lhs == rhs)) note(audit, "poly-recurrence", n, p, d);
                    ++audit.identities_checked;
                    const Rational left = gp_genus_poly(d, r, p, n + 1);
                    const Rational right =
                        gp_genus_poly(d - 1, r, p + 1, n) - Rational(1, 2);
                    if (!(left == right)) note(audit, "poly-lowering", n, p, d);
                }
                // the congruence switch under its two candidate readings:
                // every period versus only the first one
                const Int start1 = alpha_start(p + 1, n);
                if ((d - start1) % (n + p) == 0 && d != start1 + (n + p)) {
                    const Int printed = beta_value(p + 1, d, n);  // alpha branch
                    const Int first_period_only = alpha_prime(p + 1, d, n);
                    if (printed != first_period_only)
                        audit.beta_reading_flags.push_back(
                            "beta-reading," + std::to_string(n) + ',' +
                            std::to_string(p + 1) + ',' + std::to_string(d));
                }
                // floor identities tying the profiles to the polynomial
                ++audit.identities_checked;
                const Rational fr = gp_genus_poly(d, 2 * (cur.x + 1), p, n) - Rational(1, 2);
                if (cur.value != fr.floor()) note(audit, "floor-identity", n, p, d);
                ++audit.identities_checked;
                const Int xq = alpha_profile(p + 1, d - 1, n).x;
                const Rational fr2 = gp_genus_poly(d, 2 * (xq + 1), p, n + 1);
                if (alpha_value(p + 1, d - 1, n) != fr2.floor())
                    note(audit, "floor-identity-lowered", n, p, d);
            }
        }
    }
    return audit;
}

}  // namespace hcgap
