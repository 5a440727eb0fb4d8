// homsuper: verify, construct, prove and search from the command line.

#include "homsuper/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace homsuper;

namespace {

ReportFormat parse_format(const std::string& s) { return s == "text" ? ReportFormat::Text : ReportFormat::Json; }

bool parse_dims(const std::string& s, SearchSpec& spec) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        return false;
    try {
        std::size_t used = 0;
        spec.dim_even = std::stoul(s.substr(0, comma), &used);
        if (used != comma)
            return false;
        const std::string odd = s.substr(comma + 1);
        spec.dim_odd = std::stoul(odd, &used);
        return used == odd.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hom-Leibniz superalgebra workbench"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string report = "json";
    app.add_option("--report", report, "Report format")->check(CLI::IsMember({"json", "text"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Check identity suites on algebra documents");
    std::vector<std::string> verify_files;
    std::string verify_suite = "all";
    verify->add_option("files", verify_files, "Algebra documents")->required();
    verify->add_option("--suite", verify_suite, "Suite or identity name");

    // construct
    auto* construct = app.add_subcommand("construct", "Build a Hom-Akivis or Hom-Lie-Yamaguti superalgebra");
    std::string construct_in, construct_out, construct_target = "ly";
    construct->add_option("file", construct_in, "Source algebra document")->required();
    construct->add_option("--target", construct_target, "Construction")
        ->check(CLI::IsMember({"akivis", "ly"}))
        ->required();
    construct->add_option("--out", construct_out, "Output document")->required();

    // prove
    auto* prove = app.add_subcommand("prove", "Replay a symbolic proof over the free algebra");
    std::string prove_target, prove_parities = "all";
    prove->add_option("target", prove_target, "Proof target")->required();
    prove->add_option("--parities", prove_parities, "Parity assignments (all)");

    // search
    auto* search = app.add_subcommand("search", "Enumerate small algebras satisfying a suite");
    std::string dims, coeffs = "-1,0,1", alpha = "id", search_suite = "leibniz", out_dir;
    std::size_t max_results = 1000, space_limit = 10'000'000;
    long long budget_ms = -1;
    search->add_option("--dims", dims, "Even and odd dimension, E,O")->required();
    search->add_option("--coeffs", coeffs, "Coefficient set");
    search->add_option("--suite", search_suite, "Suite to satisfy");
    search->add_option("--alpha", alpha, "id, diag (family over the coefficients) or diag:<list>");
    search->add_option("--max", max_results, "Result cap");
    search->add_option("--budget-ms", budget_ms, "Time budget in milliseconds");
    search->add_option("--limit", space_limit, "Largest admissible search space");
    search->add_option("--out-dir", out_dir, "Write each result as a document here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    const ReportFormat format = parse_format(report);

    if (*verify) {
        VerifyOptions opts;
        opts.suite = verify_suite;
        opts.format = format;
        std::vector<std::filesystem::path> paths(verify_files.begin(), verify_files.end());
        return run_verify(paths, opts, std::cout, std::cerr);
    }
    if (*construct) {
        ConstructOptions opts;
        opts.target = construct_target == "akivis" ? ConstructTarget::Akivis : ConstructTarget::LeibnizYamaguti;
        opts.format = format;
        return run_construct(construct_in, construct_out, opts, std::cout, std::cerr);
    }
    if (*prove)
        return run_prove(prove_target, prove_parities, format, std::cout, std::cerr);

    SearchSpec spec;
    if (!parse_dims(dims, spec)) {
        std::cerr << "error: --dims expects E,O\n";
        return exit_usage;
    }
    try {
        spec.coefficients = parse_scalar_list(coeffs);
        if (alpha == "id") {
            spec.alpha = SearchSpec::Alpha::Identity;
        } else if (alpha == "diag") {
            spec.alpha = SearchSpec::Alpha::DiagonalFamily;
        } else if (alpha.rfind("diag:", 0) == 0) {
            spec.alpha = SearchSpec::Alpha::FixedDiagonal;
            spec.alpha_diagonal = parse_scalar_list(alpha.substr(5));
        } else {
            std::cerr << "error: --alpha expects id, diag or diag:<list>\n";
            return exit_usage;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    spec.suite = search_suite;
    spec.max_results = max_results;
    spec.space_limit = space_limit;
    if (budget_ms >= 0)
        spec.budget = std::chrono::milliseconds(budget_ms);
    std::optional<std::filesystem::path> dir;
    if (!out_dir.empty())
        dir = out_dir;
    return run_search(spec, format, dir, std::cout, std::cerr);
}
