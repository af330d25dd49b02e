// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "hcgap/certificate_io.hpp"
#include "hcgap/oracle.hpp"
#include "hcgap/scan.hpp"
#include "hcgap/smoothness.hpp"

using namespace hcgap;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool pass, double seconds,
            const std::string& detail) {
    std::printf("[%d] %-28s %s (%.2f s)%s%s\n", number, name, pass ? "PASS" : "FAIL",
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

void run(int number, const char* name, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = Clock::now();
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (pass && budget_seconds > 0 && seconds > budget_seconds) {
        pass = false;
        std::ostringstream over;
        over << "runtime " << seconds << "s exceeds budget " << budget_seconds << "s";
        detail = over.str();
    }
    report(number, name, pass, seconds, detail);
}

// Shared by criteria 4, 5 and 7: every band point of the sweep with its
// verified certificate.
struct SweepOutcome {
    Int points = 0;
    Int build_failures = 0;
    Int verify_failures = 0;
    std::vector<std::string> bad;
    std::vector<Certificate> fallback;  // geometric-fallback verdicts
};

SweepOutcome band_sweep() {
    SweepOutcome out;
    for (Int n = 8; n <= 13; ++n) {
        for (Int d = 2 * n + 1; d <= 6 * n; ++d) {
            const Int top = pi_value(0, d, n);
            for (Int g = 0; g <= top; ++g) {
                const DomainLabel label = classify(n, d, g);
                if (label.tag != DomainTag::Band) continue;
                ++out.points;
                Certificate cert;
                try {
                    cert = build(n, d, g);
                } catch (const std::exception& e) {
                    ++out.build_failures;
                    if (out.bad.size() < 5) {
                        std::ostringstream row;
                        row << "build(" << n << "," << d << "," << g << "): " << e.what();
                        out.bad.push_back(row.str());
                    }
                    continue;
                }
                if (degree(cert.cls, cert.surf) != d ||
                    arithmetic_genus(cert.cls, cert.surf) != g) {
                    ++out.build_failures;
                    continue;
                }
                // trace radius bound on every certificate of the sweep
                const GPCoords gc = to_gp(cert.cls, cert.surf);
                if (gc.r > 2 * (alpha_profile(cert.surf.p, d, cert.surf.n).x + 1)) {
                    ++out.build_failures;
                    if (out.bad.size() < 5)
                        out.bad.push_back("radius bound at (" + std::to_string(n) + "," +
                                          std::to_string(d) + "," + std::to_string(g) + ")");
                    continue;
                }
                cert = verify(std::move(cert), false);
                if (!cert.verdict->holds) {
                    ++out.verify_failures;
                    if (out.bad.size() < 5) {
                        std::ostringstream row;
                        row << "verify(" << n << "," << d << "," << g << ")";
                        out.bad.push_back(row.str());
                    }
                    continue;
                }
                if (cert.verdict->geometric_fallback) out.fallback.push_back(cert);
            }
        }
    }
    return out;
}

}  // namespace

int main() {
    SweepOutcome sweep;

    run(1, "exact-values", 1.0, [](std::string& detail) {
        bool ok = true;
        ok &= pi_value(0, 9, 3) == 12;
        ok &= pi_value(1, 9, 3) == 10;
        ok &= alpha_value(3, 19, 9) == 11;
        ok &= alpha_value(4, 18, 9) == 9;
        ok &= boundary_profile(9).big_b(19) == 11;
        if (!ok) detail = "a pinned value disagrees";
        return ok;
    });

    run(2, "classical-gap", 0.0, [](std::string& detail) {
        const bool ok = n3_gap(9, 11) == N3Verdict::Gap &&
                        n3_gap(9, 12) == N3Verdict::GapFree;
        if (!ok) detail = "the (9,11)/(9,12) pair disagrees";
        return ok;
    });

    run(3, "lemma-audit", 30.0, [](std::string& detail) {
        const LemmaAudit audit = lemma_audit(8, 14, 300);
        std::ostringstream row;
        row << audit.identities_checked << " identities, "
            << audit.violations.size() << " violations";
        detail = row.str();
        return audit.violations.empty();
    });

    run(4, "band-completeness", 300.0, [&sweep](std::string& detail) {
        sweep = band_sweep();
        std::ostringstream row;
        row << sweep.points << " band points, " << sweep.build_failures
            << " build failures";
        for (const std::string& b : sweep.bad) row << "; " << b;
        detail = row.str();
        return sweep.points > 0 && sweep.build_failures == 0;
    });

    run(5, "smoothness-verification", 0.0, [&sweep](std::string& detail) {
        bool confined = true;
        for (const Certificate& cert : sweep.fallback) {
            if (!(cert.surf.p == cert.surf.n - 4 && cert.base.a == -1 &&
                  cert.count_total() == 2))
                confined = false;
        }
        std::ostringstream row;
        row << sweep.verify_failures << " verdict failures, "
            << sweep.fallback.size() << " geometric fallbacks";
        detail = row.str();
        return sweep.verify_failures == 0 && confined;
    });

    run(6, "decomposition-audit", 0.0, [](std::string& detail) {
        Int uncovered = 0;
        for (Int n : {8, 9, 10}) uncovered += static_cast<Int>(
            decomposition_audit(n, 60).uncovered.size());
        std::ostringstream row;
        row << uncovered << " uncovered points";
        detail = row.str();
        return uncovered == 0;
    });

    run(7, "oracle-agreement", 120.0, [](std::string& detail) {
        SpectrumReport spectrum =
            brute_spectrum(make_surface(9, 3), 12, SpectrumCriterion::C1C5);
        const SpectrumAgreement agreement = builder_agreement(spectrum, 40);
        std::ostringstream row;
        row << spectrum.pairs.size() << " spectrum pairs, " << agreement.candidates
            << " in-bound certificates, " << agreement.misses.size() << " misses";
        detail = row.str();
        return agreement.candidates > 0 && agreement.misses.empty();
    });

    run(8, "round-trips", 0.0, [](std::string& detail) {
        // coordinate round trip on 10^5 seeded random classes
        std::mt19937_64 rng(987654321u);
        for (int iter = 0; iter < 100000; ++iter) {
            const Int n = 8 + static_cast<Int>(rng() % 7);
            const Int p_min = ceil_div(n, 3);
            const Int span = n - 3 - p_min;
            const Int p = p_min + static_cast<Int>(rng() % static_cast<unsigned long long>(span));
            const Surface surf = make_surface(n, p);
            DivisorClass d;
            d.a = static_cast<Int>(rng() % 41) - 20;
            d.b.resize(static_cast<std::size_t>(surf.point_count()));
            for (auto& v : d.b) v = static_cast<Int>(rng() % 41) - 20;
            if (!(from_gp(to_gp(d, surf), surf) == d)) {
                detail = "coordinate round trip failed";
                return false;
            }
        }
        // certificate JSON round trip keeps the verdict stable
        for (const auto& [n, d, g] : std::vector<std::array<Int, 3>>{
                 {9, 19, 11}, {9, 40, 60}, {12, 30, 21}}) {
            const Certificate cert = verify(build(n, d, g));
            const std::string doc = certificate_to_json(cert);
            const Certificate again = verify(certificate_from_json(doc));
            if (certificate_to_json(again) != doc) {
                detail = "certificate round trip changed the document";
                return false;
            }
        }
        return true;
    });

    run(9, "scan-determinism", 0.0, [](std::string& detail) {
#ifdef HCGAP_CLI_PATH
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "hcgap-acceptance";
        fs::create_directories(dir);
        auto run_once = [&](const char* tag) -> std::pair<std::string, std::string> {
            const fs::path csv = dir / (std::string("scan-") + tag + ".csv");
            const fs::path svg = dir / (std::string("scan-") + tag + ".svg");
            const std::string cmd = std::string(HCGAP_CLI_PATH) +
                                    " scan --n 9 --d 19..60 --csv " + csv.string() +
                                    " --svg " + svg.string() + " >/dev/null 2>&1";
            if (std::system(cmd.c_str()) != 0) return {"", "x"};
            auto slurp = [](const fs::path& p) {
                std::ifstream in(p, std::ios::binary);
                std::ostringstream out;
                out << in.rdbuf();
                return out.str();
            };
            return {slurp(csv), slurp(svg)};
        };
        const auto first = run_once("a");
        const auto second = run_once("b");
        const bool ok = !first.first.empty() && first == second;
        if (!ok) detail = "scan outputs differ between runs";
        return ok;
#else
        detail = "CLI path not configured";
        return false;
#endif
    });

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
