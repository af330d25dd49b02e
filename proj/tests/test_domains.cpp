#include "doctest.h"
#include "hcgap/domains.hpp"

#include <algorithm>

using namespace hcgap;

TEST_CASE("classify: pinned labels") {
    // bands p=3,4,5 coincide at (9,19): greatest p wins
    DomainLabel l = classify(9, 19, 11);
    CHECK(l.tag == DomainTag::Band);
    CHECK(l.p == 5);
    CHECK(l.witnesses.big_b == 11);
    CHECK(l.witnesses.pi0 == 12);

    l = classify(9, 19, 12);
    CHECK(l.tag == DomainTag::D2);

    l = classify(9, 18, 4);
    CHECK(l.tag == DomainTag::A0);

    l = classify(9, 19, 0);
    CHECK(l.tag == DomainTag::APrimeN3);
    CHECK(l.p == 6);

    l = classify(9, 20, 13);  // above all bands, below B(20,9)
    CHECK(l.tag == DomainTag::TildeAk);
    CHECK(l.p == 3);

    CHECK(classify(9, 5, 0).tag == DomainTag::OutOfRange);
    CHECK(classify(9, 19, -1).tag == DomainTag::OutOfRange);
    CHECK(classify(9, 19, 13).tag == DomainTag::AboveCastelnuovo);
}

TEST_CASE("classify: n = 3 uses the classical split") {
    CHECK(classify(3, 9, 11).tag == DomainTag::D2);
    CHECK(classify(3, 9, 12).tag == DomainTag::D2);
    CHECK(classify(3, 9, 10).tag == DomainTag::APrimeN3);  // g = pi_1
    CHECK(classify(3, 6, 4).tag == DomainTag::A0);
    CHECK(classify(3, 9, 13).tag == DomainTag::AboveCastelnuovo);
}

TEST_CASE("classify: band membership matches the witnesses") {
    for (Int n : {8, 9, 10, 12}) {
        for (Int d = 2 * n + 1; d <= 4 * n; ++d) {
            const Int top = pi_value(0, d, n);
            for (Int g = 0; g <= top; ++g) {
                const DomainLabel l = classify(n, d, g);
                if (l.tag != DomainTag::Band) continue;
                CHECK(l.p >= ceil_div(n, 3));
                CHECK(l.p <= n - 4);
                CHECK(*l.witnesses.alpha_lo <= g);
                CHECK(g <= *l.witnesses.alpha_hi);
                CHECK(*l.witnesses.alpha_lo == alpha_value(l.p + 1, d - 1, n));
                CHECK(*l.witnesses.alpha_hi == alpha_value(l.p, d, n));
                // greatest p: no band above matches
                for (Int q = l.p + 1; q <= n - 4; ++q) {
                    const bool in_q = alpha_value(q + 1, d - 1, n) <= g &&
                                      g <= alpha_value(q, d, n);
                    CHECK_FALSE(in_q);
                }
            }
        }
    }
}

TEST_CASE("n3 gap: the classical picture at d = 9") {
    CHECK(n3_gap(9, 11) == N3Verdict::Gap);       // 49-44 = 5, not a square
    CHECK(n3_gap(9, 12) == N3Verdict::GapFree);   // 49-48 = 1
    CHECK(n3_gap(9, 10) == N3Verdict::NonLacunaryRegion);
    CHECK_THROWS_AS(n3_gap(9, 13), std::domain_error);
    CHECK_THROWS_AS(n3_gap(2, 0), std::domain_error);
}

TEST_CASE("n3 gap: extremal genus is gap-free whenever the discriminant is square") {
    for (Int d = 3; d <= 60; ++d) {
        const Int pi0 = pi_value(0, d, 3);
        if (pi0 <= pi_value(1, d, 3)) continue;
        const Int disc = (d - 2) * (d - 2) - 4 * pi0;
        CHECK(n3_gap(d, pi0) ==
              (is_square(disc) ? N3Verdict::GapFree : N3Verdict::Gap));
    }
}

TEST_CASE("decomposition audit: no uncovered points for n in {8,9,10}") {
    for (Int n : {8, 9, 10}) {
        const AuditReport report = decomposition_audit(n, 60);
        CHECK(report.uncovered.empty());
        CHECK(report.boundary_violations == 0);
        CHECK(!report.rows.empty());
    }
}

TEST_CASE("decomposition audit: boundary column and tiny ranges") {
    const AuditReport r8 = decomposition_audit(8, 17);  // d_max = 2n+1
    CHECK(r8.uncovered.empty());
    bool saw_boundary_column = false;
    for (const AuditRow& row : r8.rows)
        if (row.d == 17) {
            saw_boundary_column = true;
            CHECK(!row.covers.empty());
        }
    CHECK(saw_boundary_column);

    // d_max < 2n+1: only the low-degree region applies
    const AuditReport small = decomposition_audit(9, 15);
    CHECK(small.uncovered.empty());
    for (const AuditRow& row : small.rows) CHECK(row.tag == DomainTag::A0);
}

TEST_CASE("decomposition audit: exactly one label per point, B below pi0") {
    const AuditReport report = decomposition_audit(9, 40);
    for (const AuditRow& row : report.rows) {
        CHECK(row.tag != DomainTag::OutOfRange);
        CHECK(row.tag != DomainTag::AboveCastelnuovo);
        CHECK(row.tag != DomainTag::D2);
        if (row.big_b) CHECK(*row.big_b <= row.pi0);
    }
    // CSV round: header plus one line per row
    const std::string csv = report.to_csv();
    CHECK(csv.rfind("d,g,tag,p,pi0,B,alpha_lo,alpha_hi,covers,edge_flag\n", 0) == 0);
    const auto lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == report.rows.size() + 1);
}
