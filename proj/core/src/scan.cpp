#include "hcgap/scan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hcgap/oracle.hpp"
#include "hcgap/smoothness.hpp"

namespace hcgap {

namespace {

constexpr Int kCellW = 12;  // pixels per degree column
constexpr Int kCellH = 4;   // pixels per genus unit
constexpr Int kMargin = 48;

const char* band_color(Int slot) {
    static const char* palette[8] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                     "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};
    return palette[slot % 8];
}

struct ChartGeom {
    Int d_lo = 0, d_hi = 0, g_max = 0;
    Int width() const { return 2 * kMargin + std::max<Int>(0, d_hi - d_lo + 1) * kCellW; }
    Int height() const { return 2 * kMargin + (g_max + 1) * kCellH; }
    Int x(Int d) const { return kMargin + (d - d_lo) * kCellW; }
    Int y(Int g) const { return kMargin + (g_max - g) * kCellH; }
};

void svg_polyline(std::ostringstream& out, const ChartGeom& geom,
                  const std::vector<std::pair<Int, Int>>& pts, const char* color,
                  const char* dash) {
    if (pts.empty()) return;
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
    if (dash[0] != '\0') out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    bool first = true;
    for (const auto& [d, g] : pts) {
        if (!first) out << ' ';
        first = false;
        out << geom.x(d) + kCellW / 2 << ',' << geom.y(g);
    }
    out << "\"/>\n";
}

std::string render_svg(const ScanJob& job, Int g_max) {
    std::ostringstream out;
    ChartGeom geom{job.d_lo, job.d_hi, std::max<Int>(g_max, 0)};
    const bool empty = job.d_hi < job.d_lo;
    if (empty) geom = ChartGeom{0, -1, 10};
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << geom.width() << "\" height=\"" << geom.height() << "\">\n";
    out << "<rect width=\"" << geom.width() << "\" height=\"" << geom.height()
        << "\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << kMargin << "\" y1=\"" << geom.y(0) << "\" x2=\""
        << geom.width() - kMargin << "\" y2=\"" << geom.y(0)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << geom.y(0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (empty) {
        out << "</svg>\n";
        return out.str();
    }
    const Int n = job.n;
    auto clamp_g = [&](Int g) { return std::max<Int>(-1, std::min<Int>(g, geom.g_max + 1)); };
    // band cells
    if (n >= 4) {
        const Int p_min = ceil_div(n, 3);
        for (Int d = std::max(job.d_lo, 2 * n + 1); d <= job.d_hi; ++d) {
            for (Int p = p_min; p <= n - 4; ++p) {
                const Int lo = std::max<Int>(0, alpha_value(p + 1, d - 1, n));
                const Int hi = std::min<Int>(geom.g_max, alpha_value(p, d, n));
                if (hi < lo) continue;
                out << "<rect x=\"" << geom.x(d) << "\" y=\"" << geom.y(hi) << "\" width=\""
                    << kCellW << "\" height=\"" << (hi - lo + 1) * kCellH << "\" fill=\""
                    << band_color(p - p_min) << "\" fill-opacity=\"0.35\"/>\n";
            }
        }
    }
    // boundary polylines
    std::vector<std::pair<Int, Int>> b0, bk;
    for (Int d = job.d_lo; d <= job.d_hi; ++d) {
        if (d < n) continue;
        const Int pi0 = pi_value(0, d, n);
        b0.emplace_back(d, clamp_g(pi0));
        if (n == 3) {
            bk.emplace_back(d, clamp_g(d <= 2 * n ? pi0 : pi_value(1, d, 3)));
        } else if (n >= 4) {
            bk.emplace_back(
                d, clamp_g(d <= 2 * n ? pi0 : boundary_profile(n).big_b(d)));
        }
    }
    svg_polyline(out, geom, b0, "#000000", "");
    svg_polyline(out, geom, bk, "#d62728", "6,3");
    if (n >= 4) {
        const Int p_min = ceil_div(n, 3);
        for (Int p = p_min; p <= n - 3; ++p) {
            std::vector<std::pair<Int, Int>> cp;
            for (Int d = std::max(job.d_lo, alpha_start(p, n)); d <= job.d_hi; ++d)
                cp.emplace_back(d, clamp_g(alpha_value(p, d, n)));
            svg_polyline(out, geom, cp, band_color(p - p_min), "2,2");
        }
    }
    // gap markers for the classical n = 3 picture
    if (n == 3) {
        for (Int d = std::max<Int>(job.d_lo, 3); d <= job.d_hi; ++d) {
            const Int top = pi_value(0, d, 3);
            for (Int g = 0; g <= std::min(top, geom.g_max); ++g) {
                if (n3_gap(d, g) == N3Verdict::Gap)
                    out << "<circle cx=\"" << geom.x(d) + kCellW / 2 << "\" cy=\""
                        << geom.y(g) << "\" r=\"2\" fill=\"#d62728\"/>\n";
            }
        }
    }
    // axis labels every five degrees
    for (Int d = job.d_lo; d <= job.d_hi; ++d) {
        if (d % 5 != 0) continue;
        out << "<text x=\"" << geom.x(d) + kCellW / 2 << "\" y=\"" << geom.y(0) + 16
            << "\" font-size=\"10\" text-anchor=\"middle\">" << d << "</text>\n";
    }
    for (Int g = 0; g <= geom.g_max; g += 20)
        out << "<text x=\"" << kMargin - 6 << "\" y=\"" << geom.y(g) + 3
            << "\" font-size=\"10\" text-anchor=\"end\">" << g << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string ScanResult::summary_json(const ScanJob& job) const {
    std::ostringstream out;
    out << "{\n"
        << "  \"n\": " << job.n << ",\n"
        << "  \"d_lo\": " << job.d_lo << ",\n"
        << "  \"d_hi\": " << job.d_hi << ",\n"
        << "  \"rows\": " << summary.rows << ",\n"
        << "  \"built\": " << summary.built << ",\n"
        << "  \"verified\": " << summary.verified << ",\n"
        << "  \"geometric\": " << summary.geometric << ",\n"
        << "  \"delegated\": " << summary.delegated << ",\n"
        << "  \"failures\": " << summary.failures << ",\n"
        << "  \"gaps\": " << summary.gaps << "\n"
        << "}\n";
    return out.str();
}

std::string ScanResult::summary_line() const {
    std::ostringstream out;
    out << "rows=" << summary.rows << " built=" << summary.built
        << " verified=" << summary.verified << " geometric=" << summary.geometric
        << " delegated=" << summary.delegated << " failures=" << summary.failures;
    if (summary.gaps > 0) out << " gaps=" << summary.gaps;
    return out.str();
}

ScanResult run_scan(const ScanJob& job) {
    if (job.n < 3) throw std::domain_error("run_scan: n must be >= 3");
    ScanResult result;
    std::ostringstream csv;
    csv << "n,d,g,tag,p,route,criterion,holds,geometric,n3,in_spectrum,note\n";
    const bool empty = job.d_hi < job.d_lo;
    Int g_max = 0;

    // One spectrum per scan when requested; membership marks each row.
    std::set<std::pair<Int, Int>> spectrum;
    if (!empty && job.mode_oracle && job.n >= 6) {
        const Int k = floor_div(job.n, 3);
        const Surface surf = make_surface(job.n, job.n % 3 == 0 ? k : k + 1);
        SpectrumReport report =
            brute_spectrum(surf, job.oracle_a_max, SpectrumCriterion::C1C5);
        spectrum.insert(report.pairs.begin(), report.pairs.end());
    }

    for (Int d = empty ? 1 : job.d_lo; !empty && d <= job.d_hi; ++d) {
        if (d < job.n) continue;
        const Int top = pi_value(0, d, job.n);
        g_max = std::max(g_max, top);
        for (Int g = 0; g <= top; ++g) {
            ++result.summary.rows;
            const DomainLabel label = classify(job.n, d, g);
            std::string route, criterion, holds, geometric, n3, in_spec, note;
            if (job.n == 3) {
                const N3Verdict v = n3_gap(d, g);
                n3 = std::string(to_string(v));
                if (v == N3Verdict::Gap) ++result.summary.gaps;
            }
            if (job.mode_oracle && !spectrum.empty())
                in_spec = spectrum.count({d, g}) ? "1" : "0";
            if (job.mode_build || job.mode_verify) {
                if (label.tag == DomainTag::Band) {
                    try {
                        Certificate cert = build(job.n, d, g);
                        ++result.summary.built;
                        route = std::string(to_string(cert.route));
                        if (job.mode_verify) {
                            cert = verify(std::move(cert), false);
                            criterion = std::string(to_string(cert.verdict->criterion));
                            holds = cert.verdict->holds ? "1" : "0";
                            geometric = cert.verdict->geometric_fallback ? "1" : "0";
                            if (cert.verdict->holds) {
                                ++result.summary.verified;
                                if (cert.verdict->geometric_fallback)
                                    ++result.summary.geometric;
                            } else {
                                ++result.summary.failures;
                                note = "verdict-failed";
                            }
                        }
                    } catch (const BuildError& e) {
                        ++result.summary.failures;
                        note = std::string("build-failed: ") + e.what();
                    }
                } else {
                    ++result.summary.delegated;
                    note = "delegated";
                }
            }
            csv << job.n << ',' << d << ',' << g << ',' << to_string(label.tag) << ','
                << (label.p >= 0 ? std::to_string(label.p) : std::string()) << ','
                << route << ',' << criterion << ',' << holds << ',' << geometric << ','
                << n3 << ',' << in_spec << ',' << note << '\n';
        }
    }
    result.csv = csv.str();
    result.svg = render_svg(job, g_max);
    return result;
}

}  // namespace hcgap
