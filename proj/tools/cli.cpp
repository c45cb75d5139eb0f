#include "cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "abcov/errors.hpp"
#include "abcov/origami.hpp"
#include "abcov/report.hpp"

namespace abcov::cli {

namespace {

struct Options {
    std::size_t cap = kDefaultSpanCap;
    bool json = false;
    bool verify = false;
    std::string file;
    std::string other_file;
    std::string format = "edge-list";
    oracle::OracleSettings oracle;
};

Presentation load(const std::string& path) {
    return read_presentation_file(path).validate();
}

bool any_failed(const std::vector<oracle::VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (r.overall == oracle::OverallStatus::Fail) return true;
    }
    return false;
}

int cmd_analyze(const Options& opts, std::ostream& out) {
    AnalysisReport report = analyze(load(opts.file), opts.cap);
    if (opts.verify) report.verification = verify_all(report.eigenspaces, opts.oracle);
    out << (opts.json ? report_to_json(report) : format_report(report));
    return report.verification && any_failed(*report.verification) ? kVerificationFailed : kOk;
}

int cmd_spectrum(const Options& opts, std::ostream& out) {
    const Spectrum s = spectrum(load(opts.file), opts.cap);
    if (opts.json) {
        out << spectrum_to_json(s);
    } else {
        out << format_spectrum(s) << '\n';
    }
    return kOk;
}

int cmd_covers(const Options& opts, std::ostream& out) {
    const Presentation p = load(opts.file);
    const Presentation q = load(opts.other_file);
    const bool down = covers(p, q, opts.cap);
    const bool up = covers(q, p, opts.cap);
    const char* relation = down && up ? "isomorphic" : down ? "covers" : up ? "covered-by" : "incomparable";
    if (opts.json) {
        out << "{\"relation\": \"" << relation << "\"}\n";
    } else {
        out << relation << '\n';
    }
    return kOk;
}

int cmd_origami(const Options& opts, std::ostream& out) {
    const Presentation p = load(opts.file);
    const SquareTiledModel model = build_model(p, opts.cap);
    euler_characteristic(model, p);
    out << export_model(model, opts.format);
    return kOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
    const auto reports = verify_all(eigen_table(load(opts.file), opts.cap), opts.oracle);
    out << (opts.json ? verification_to_json(reports) : format_verification(reports));
    return any_failed(reports) ? kVerificationFailed : kOk;
}

int dispatch(const std::function<int()>& command, std::ostream& err) {
    try {
        return command();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const ValidationError& e) {
        err << "invalid presentation: " << e.what() << '\n';
        return kInputError;
    } catch (const SizeCapError& e) {
        err << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    } catch (const OverflowError& e) {
        err << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants and Lyapunov spectra of abelian square-tiled surfaces", "abcov"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--cap", opts.cap, "Maximum number of subgroup elements to enumerate")
        ->check(CLI::PositiveNumber);

    auto add_tolerances = [&](CLI::App* sub) {
        sub->add_option("--tol-angle", opts.oracle.angle_tol, "Absolute tolerance on measured angles (units of pi)");
        sub->add_option_function<double>(
            "--tol-residual",
            [&](double tol) {
                opts.oracle.residual_tol = tol;
                opts.oracle.wronskian_tol = tol;
            },
            "Tolerance for the HGDE residual and Wronskian constancy");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Full report: degree, genus, stratum, eigenspaces, spectrum");
    analyze_cmd->add_option("file", opts.file, "Presentation file")->required();
    analyze_cmd->add_flag("--json", opts.json, "Machine-readable output");
    analyze_cmd->add_flag("--verify", opts.verify, "Also run the numerical checks");
    add_tolerances(analyze_cmd);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Nonnegative Lyapunov spectrum only");
    spectrum_cmd->add_option("file", opts.file, "Presentation file")->required();
    spectrum_cmd->add_flag("--json", opts.json, "Machine-readable output");

    auto* covers_cmd = app.add_subcommand("covers", "Relation between two covers in the covering order");
    covers_cmd->add_option("p", opts.file, "First presentation file")->required();
    covers_cmd->add_option("q", opts.other_file, "Second presentation file")->required();
    covers_cmd->add_flag("--json", opts.json, "Machine-readable output");

    auto* origami_cmd = app.add_subcommand("origami", "Square-tiled model of the cover");
    origami_cmd->add_option("file", opts.file, "Presentation file")->required();
    origami_cmd->add_option("--format", opts.format, "edge-list or json")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Numerical checks for every eligible eigenspace");
    verify_cmd->add_option("file", opts.file, "Presentation file")->required();
    verify_cmd->add_flag("--json", opts.json, "Machine-readable output");
    add_tolerances(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "Run with --help for usage.\n";
        return kInputError;
    }

    if (analyze_cmd->parsed()) return dispatch([&] { return cmd_analyze(opts, out); }, err);
    if (spectrum_cmd->parsed()) return dispatch([&] { return cmd_spectrum(opts, out); }, err);
    if (covers_cmd->parsed()) return dispatch([&] { return cmd_covers(opts, out); }, err);
    if (origami_cmd->parsed()) return dispatch([&] { return cmd_origami(opts, out); }, err);
    return dispatch([&] { return cmd_verify(opts, out); }, err);
}

}  // namespace abcov::cli
