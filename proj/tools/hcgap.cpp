// Command-line surface: classify points of the (d,g)-plane, build and verify
// divisor-class certificates, run grid scans with CSV/SVG output, dump the
// numeric bound functions, and drive the brute-force oracle.
//
// Exit codes: 0 success (verdict holds or carries the geometric annotation),
// 2 out-of-range input, 3 label delegated (no certificate is constructed
// for it), 4 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hcgap/certificate_io.hpp"
#include "hcgap/oracle.hpp"
#include "hcgap/scan.hpp"
#include "hcgap/smoothness.hpp"

namespace {

using hcgap::Int;

constexpr int kExitOk = 0;
constexpr int kExitOutOfRange = 2;
constexpr int kExitDelegated = 3;
constexpr int kExitVerification = 4;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

std::pair<Int, Int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("range", "expected LO..HI, got '" + text + "'");
    return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
}

int run_classify(Int n, Int d, Int g, const std::string& out_path) {
    const hcgap::DomainLabel label = hcgap::classify(n, d, g);
    const std::string doc = hcgap::label_to_json(label, n, d, g);
    std::cout << doc;
    if (!out_path.empty()) write_file(out_path, doc);
    return label.tag == hcgap::DomainTag::OutOfRange ? kExitOutOfRange : kExitOk;
}

int run_certify(Int n, Int d, Int g, const std::string& out_path) {
    hcgap::Certificate cert;
    try {
        cert = hcgap::build(n, d, g);
    } catch (const hcgap::DelegatedError& e) {
        std::cerr << e.what() << "\n";
        return e.label.tag == hcgap::DomainTag::OutOfRange ? kExitOutOfRange
                                                           : kExitDelegated;
    }
    cert = hcgap::verify(std::move(cert), false);
    const std::string doc = hcgap::certificate_to_json(cert);
    if (!out_path.empty())
        write_file(out_path, doc);
    else
        std::cout << doc;
    if (!cert.verdict->holds) {
        std::cerr << "verification failed\n";
        return kExitVerification;
    }
    if (!out_path.empty())
        std::cout << "certificate written to " << out_path << "\n";
    return kExitOk;
}

int run_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    hcgap::Certificate cert = hcgap::certificate_from_json(text);
    cert = hcgap::verify(std::move(cert), false);
    std::cout << hcgap::certificate_to_json(cert);
    return cert.verdict->holds ? kExitOk : kExitVerification;
}

int run_scan(const hcgap::ScanJob& job, const std::string& csv_path,
             const std::string& svg_path, const std::string& json_path) {
    const hcgap::ScanResult result = hcgap::run_scan(job);
    if (!csv_path.empty()) write_file(csv_path, result.csv);
    if (!svg_path.empty()) write_file(svg_path, result.svg);
    if (!json_path.empty()) write_file(json_path, result.summary_json(job));
    std::cout << result.summary_line() << "\n";
    return result.all_ok() ? kExitOk : kExitVerification;
}

int run_table(const std::string& fn, Int n, Int p, Int r, Int d_lo, Int d_hi,
              const std::string& out_path) {
    std::ostringstream out;
    if (fn == "d1") {
        out << "n,k,d1\n";
        const hcgap::BoundaryProfile bp = hcgap::boundary_profile(n);
        out << bp.n << ',' << bp.k << ',' << bp.d1 << '\n';
    } else {
        out << "d," << fn << '\n';
        for (Int d = d_lo; d <= d_hi; ++d) {
            out << d << ',';
            if (fn == "pi")
                out << hcgap::pi_value(p, d, n);
            else if (fn == "alpha")
                out << hcgap::alpha_value(p, d, n);
            else if (fn == "alpha-prime")
                out << hcgap::alpha_prime(p, d, n);
            else if (fn == "beta")
                out << hcgap::beta_value(p, d, n);
            else if (fn == "big-a")
                out << hcgap::boundary_profile(n).big_a(d);
            else if (fn == "big-b")
                out << hcgap::boundary_profile(n).big_b(d);
            else if (fn == "c5-margin")
                out << hcgap::c5_margin(d, p, n);
            else if (fn == "genus-poly")
                out << hcgap::gp_genus_poly(d, r, p, n).str();
            else
                throw CLI::ValidationError("--fn", "unknown function '" + fn + "'");
            out << '\n';
        }
    }
    if (!out_path.empty())
        write_file(out_path, out.str());
    else
        std::cout << out.str();
    return kExitOk;
}

}  // namespace

int run_app(int argc, char** argv) {
    CLI::App app{"divisor-class certificates on the (d,g)-plane"};
    app.require_subcommand(1);

    // classify
    Int n = 0, d = 0, g = 0;
    std::string out_path, in_path;
    auto* cmd_classify = app.add_subcommand("classify", "label a triple (n,d,g)");
    cmd_classify->add_option("n", n, "ambient dimension")->required();
    cmd_classify->add_option("d", d, "degree")->required();
    cmd_classify->add_option("g", g, "genus")->required();
    cmd_classify->add_option("--json", out_path, "also write the JSON here");

    // certify
    auto* cmd_certify = app.add_subcommand("certify", "build and verify a certificate");
    cmd_certify->add_option("n", n, "ambient dimension")->required();
    cmd_certify->add_option("d", d, "degree")->required();
    cmd_certify->add_option("g", g, "genus")->required();
    cmd_certify->add_option("out", out_path, "output JSON path");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "re-verify a certificate file");
    cmd_verify->add_option("path", in_path, "certificate JSON path")->required();

    // scan
    hcgap::ScanJob job;
    std::string d_range, modes = "classify", csv_path, svg_path, json_path;
    auto* cmd_scan = app.add_subcommand(
        "scan",
        "grid scan; CSV columns: n,d,g,tag,p,route,criterion,holds,geometric,"
        "n3,in_spectrum,note");
    cmd_scan->add_option("--n", job.n, "ambient dimension")->required();
    cmd_scan->add_option("--d", d_range, "degree range LO..HI")->required();
    cmd_scan->add_option("--modes", modes,
                         "comma list of classify,build,verify,oracle");
    cmd_scan->add_option("--csv", csv_path, "CSV output path");
    cmd_scan->add_option("--svg", svg_path, "SVG output path");
    cmd_scan->add_option("--json", json_path, "summary JSON output path");
    cmd_scan->add_option("--amax", job.oracle_a_max, "oracle coefficient bound");

    // table
    std::string fn;
    Int table_p = 0, table_r = 0;
    auto* cmd_table = app.add_subcommand("table", "numeric function dumps (CSV)");
    cmd_table->add_option("--fn", fn,
                          "pi|alpha|alpha-prime|beta|big-a|big-b|d1|c5-margin|genus-poly")
        ->required();
    cmd_table->add_option("--n", n, "ambient dimension")->required();
    cmd_table->add_option("--p", table_p, "profile index");
    cmd_table->add_option("--r", table_r, "polynomial radius (genus-poly)");
    cmd_table->add_option("--d", d_range, "degree range LO..HI");
    cmd_table->add_option("--out", out_path, "output path (default stdout)");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force cross-validation");
    cmd_oracle->require_subcommand(1);
    Int a_max = 12, cap = 100000000, n_lo = 8, n_hi = 14, span = 300;
    std::string criterion = "c1-c5";
    auto* cmd_spectrum =
        cmd_oracle->add_subcommand("spectrum", "enumerate realizable (d,g) pairs");
    cmd_spectrum->add_option("--n", n, "ambient dimension")->required();
    cmd_spectrum->add_option("--p", table_p, "surface index")->required();
    cmd_spectrum->add_option("--amax", a_max, "coefficient bound");
    cmd_spectrum->add_option("--criterion", criterion, "c1-c5|cubic|triple");
    cmd_spectrum->add_option("--cap", cap, "enumeration cap");
    cmd_spectrum->add_option("--out", out_path, "CSV output path");
    Int compare_d_max = 0;
    cmd_spectrum->add_option("--compare-builder", compare_d_max,
                             "also sweep builder certificates up to this degree "
                             "and list (d,g) pairs the spectrum misses");
    auto* cmd_lemmas =
        cmd_oracle->add_subcommand("lemmas", "audit the profile identities");
    cmd_lemmas->add_option("--n-lo", n_lo, "first ambient dimension");
    cmd_lemmas->add_option("--n-hi", n_hi, "last ambient dimension");
    cmd_lemmas->add_option("--span", span, "consecutive degrees per profile");
    cmd_lemmas->add_option("--out", out_path, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    if (*cmd_classify) return run_classify(n, d, g, out_path);
    if (*cmd_certify) return run_certify(n, d, g, out_path);
    if (*cmd_verify) return run_verify(in_path);
    if (*cmd_scan) {
        const auto [lo, hi] = parse_range(d_range);
        job.d_lo = lo;
        job.d_hi = hi;
        job.mode_classify = modes.find("classify") != std::string::npos;
        job.mode_build = modes.find("build") != std::string::npos;
        job.mode_verify = modes.find("verify") != std::string::npos;
        job.mode_oracle = modes.find("oracle") != std::string::npos;
        if (job.mode_verify) job.mode_build = true;
        return run_scan(job, csv_path, svg_path, json_path);
    }
    if (*cmd_table) {
        Int lo = 0, hi = -1;
        if (!d_range.empty()) std::tie(lo, hi) = parse_range(d_range);
        return run_table(fn, n, table_p, table_r, lo, hi, out_path);
    }
    if (*cmd_spectrum) {
        const hcgap::Surface surf = hcgap::make_surface(n, table_p, true);
        hcgap::SpectrumReport report = hcgap::brute_spectrum(
            surf, a_max, hcgap::spectrum_criterion_from_string(criterion), cap);
        if (compare_d_max > 0) {
            const hcgap::SpectrumAgreement agreement =
                hcgap::builder_agreement(report, compare_d_max);
            std::cerr << "builder agreement: " << agreement.candidates
                      << " candidates, " << agreement.misses.size() << " misses\n";
        }
        if (!out_path.empty())
            write_file(out_path, report.to_csv());
        else
            std::cout << report.to_csv();
        return report.misses.empty() ? kExitOk : kExitVerification;
    }
    if (*cmd_lemmas) {
        const hcgap::LemmaAudit audit = hcgap::lemma_audit(n_lo, n_hi, span);
        if (!out_path.empty())
            write_file(out_path, audit.to_csv());
        else
            std::cout << audit.to_csv();
        return audit.violations.empty() ? kExitOk : kExitVerification;
    }
    return 1;
}

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const hcgap::VerificationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOutOfRange;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
