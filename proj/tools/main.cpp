// Command-line frontend over the shared-library C API: coefficient
// computation, verification suites, critical-line root decisions, the
// 3-adic scan, and table export.
//
// Exit codes: 0 success / all checks passed, 1 verification counterexample,
// 2 usage or I/O error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quartic/quartic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

int fail(quartic_status status, const std::string& context) {
    std::cerr << "error: " << context << ": " << quartic_status_str(status) << "\n";
    return kExitUsage;
}

struct CoeffOptions {
    std::int64_t m = 0;
    std::int64_t l = 0;
    std::string method = "single";
    std::string format = "text";
};

quartic_method parse_method(const std::string& name) {
    if (name == "single") return QUARTIC_METHOD_SINGLE;
    if (name == "triple") return QUARTIC_METHOD_TRIPLE;
    if (name == "alphabeta") return QUARTIC_METHOD_ALPHABETA;
    if (name == "f21") return QUARTIC_METHOD_F21;
    return QUARTIC_METHOD_LEIBNIZ;
}

int run_coeff(const CoeffOptions& opt) {
    quartic_coeff* coeff = nullptr;
    quartic_status st = quartic_coeff_compute(static_cast<uint32_t>(opt.m),
                                              static_cast<uint32_t>(opt.l),
                                              parse_method(opt.method), &coeff);
    if (st != QUARTIC_OK) return fail(st, "coeff");
    if (opt.format == "json") {
        std::cout << quartic_coeff_json(coeff) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "m,l,odd_part,pow2_exponent,nu2,nu3\n"
                  << opt.m << ',' << opt.l << ',' << quartic_coeff_odd_part(coeff) << ','
                  << quartic_coeff_pow2_exponent(coeff) << ',' << quartic_coeff_nu2(coeff) << ','
                  << quartic_coeff_nu3(coeff) << "\n";
    } else {
        std::cout << quartic_coeff_text(coeff);
    }
    quartic_coeff_free(coeff);
    return kExitOk;
}

struct VerifyOptions {
    std::string suite;
    std::int64_t max_m = -1;
    std::string format = "text";
};

int run_verify(const VerifyOptions& opt) {
    quartic_report* report = nullptr;
    quartic_status st = quartic_verify_run(opt.suite.c_str(), opt.max_m, &report);
    if (st != QUARTIC_OK) return fail(st, "verify --suite " + opt.suite);
    if (opt.format == "json")
        std::cout << quartic_report_json(report) << "\n";
    else
        std::cout << quartic_report_text(report);
    const bool passed = quartic_report_passed(report) != 0;
    quartic_report_free(report);
    return passed ? kExitOk : kExitCounterexample;
}

struct RootsOptions {
    std::string family;
    std::int64_t l = 0;
    bool exact = false;
    bool numeric = false;
    std::int64_t precision_bits = 256;
    std::string format = "text";
};

int run_roots(const RootsOptions& opt) {
    const quartic_family family =
        (opt.family == "alpha") ? QUARTIC_FAMILY_ALPHA : QUARTIC_FAMILY_BETA;
    if (opt.numeric) {
        quartic_numeric_roots* roots = nullptr;
        quartic_status st = quartic_roots_numeric(family, static_cast<uint32_t>(opt.l),
                                                  static_cast<uint32_t>(opt.precision_bits),
                                                  &roots);
        if (st != QUARTIC_OK) return fail(st, "roots --numeric");
        if (opt.format == "json")
            std::cout << quartic_numeric_roots_json(roots) << "\n";
        else
            std::cout << quartic_numeric_roots_text(roots);
        quartic_numeric_roots_free(roots);
        return kExitOk;
    }
    quartic_verdict* verdict = nullptr;
    quartic_status st = quartic_roots_decide(family, static_cast<uint32_t>(opt.l), &verdict);
    if (st != QUARTIC_OK) return fail(st, "roots --exact");
    if (opt.format == "json")
        std::cout << quartic_verdict_json(verdict) << "\n";
    else
        std::cout << quartic_verdict_text(verdict);
    quartic_verdict_free(verdict);
    return kExitOk;
}

struct ThreeAdicOptions {
    std::int64_t max_m = 0;
    std::string format = "text";
};

int run_threeadic(const ThreeAdicOptions& opt) {
    quartic_scan* scan = nullptr;
    quartic_status st = quartic_threeadic_scan(static_cast<uint64_t>(opt.max_m), &scan);
    if (st != QUARTIC_OK) return fail(st, "threeadic");
    if (opt.format == "json")
        std::cout << quartic_scan_json(scan) << "\n";
    else
        std::cout << quartic_scan_text(scan);
    quartic_scan_free(scan);
    return kExitOk;
}

struct TableOptions {
    std::int64_t max_m = 0;
    std::string format = "json";
    std::string out_path;
};

int run_table(const TableOptions& opt) {
    const quartic_format format =
        (opt.format == "csv") ? QUARTIC_FORMAT_CSV : QUARTIC_FORMAT_JSON;
    if (!opt.out_path.empty()) {
        quartic_status st = quartic_table_write(static_cast<uint32_t>(opt.max_m), format,
                                                opt.out_path.c_str());
        if (st != QUARTIC_OK) return fail(st, "table --out " + opt.out_path);
        return kExitOk;
    }
    char* rendered = nullptr;
    quartic_status st = quartic_table_render(static_cast<uint32_t>(opt.max_m), format, &rendered);
    if (st != QUARTIC_OK) return fail(st, "table");
    std::cout << rendered;
    if (format == QUARTIC_FORMAT_JSON) std::cout << "\n";
    quartic_string_free(rendered);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coefficient analysis for the quartic-integral polynomial family"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CoeffOptions coeff;
    auto* coeff_cmd = app.add_subcommand("coeff", "Compute one coefficient d_l(m) exactly");
    coeff_cmd->add_option("--m", coeff.m, "Row index m")->required()->check(CLI::NonNegativeNumber);
    coeff_cmd->add_option("--l", coeff.l, "Column index l")->required()->check(CLI::NonNegativeNumber);
    coeff_cmd->add_option("--method", coeff.method, "Evaluation route")
        ->check(CLI::IsMember({"single", "triple", "alphabeta", "f21", "leibniz"}));
    coeff_cmd->add_option("--format", coeff.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", verify.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"thm2", "cor2", "cor3", "floorsum", "thm4", "lemma-ab",
                               "nu2-bound", "stirling", "crossformula", "taylor", "quad", "all"}));
    verify_cmd->add_option("--max-m", verify.max_m, "Upper end of the scan range")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--format", verify.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    RootsOptions roots;
    auto* roots_cmd = app.add_subcommand("roots", "Critical-line analysis of alpha_l / beta_l");
    roots_cmd->add_option("--family", roots.family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    roots_cmd->add_option("--l", roots.l, "Index l (>= 1)")->required()->check(CLI::PositiveNumber);
    auto* exact_flag = roots_cmd->add_flag("--exact", roots.exact, "Exact Sturm decision (default)");
    roots_cmd->add_flag("--numeric", roots.numeric, "Multiprecision root approximations")
        ->excludes(exact_flag);
    roots_cmd->add_option("--precision", roots.precision_bits, "Bits for --numeric")
        ->check(CLI::Range(static_cast<std::int64_t>(64), static_cast<std::int64_t>(1 << 20)));
    roots_cmd->add_option("--format", roots.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    ThreeAdicOptions threeadic;
    auto* threeadic_cmd = app.add_subcommand("threeadic", "Scan nu_3(d_1(m)) up to max-m");
    threeadic_cmd->add_option("--max-m", threeadic.max_m, "Scan limit (>= 2)")
        ->required()
        ->check(CLI::Range(static_cast<std::int64_t>(2), static_cast<std::int64_t>(100000000)));
    threeadic_cmd->add_option("--format", threeadic.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Export the coefficient table");
    table_cmd->add_option("--max-m", table.max_m, "Largest m")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--format", table.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    table_cmd->add_option("--out", table.out_path, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (coeff_cmd->parsed()) return run_coeff(coeff);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (roots_cmd->parsed()) return run_roots(roots);
    if (threeadic_cmd->parsed()) return run_threeadic(threeadic);
    if (table_cmd->parsed()) return run_table(table);
    return kExitUsage;
}
