#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "theta/errors.hpp"
#include "theta/report.hpp"
#include "theta/restricted.hpp"
#include "theta/verify.hpp"

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

std::uint64_t default_cap() {
    if (const char* env = std::getenv("THETA_TOOL_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring THETA_TOOL_CAP=" << env << '\n';
        }
    }
    return theta::kDefaultCap;
}

theta::Series series_arg(const std::string& s) { return theta::parse_series(s); }

int cmd_list(const std::string& series, int rank, const std::string& format) {
    auto entries = theta::Catalog::builtin().list(series_arg(series), rank);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
        theta::RestrictedRootSystem rrs = theta::restrict(e.satake);
        rows.push_back({{"label", e.label},
                        {"k", e.fixed_algebra_name},
                        {"inner", e.satake->is_inner()},
                        {"psi", theta::cycle_notation(e.satake->psi())},
                        {"split", e.is_split},
                        {"quasi_split", e.is_quasi_split},
                        {"phi_a", rrs.type()},
                        {"phi_a_reduced", rrs.reduced_type()}});
    }
    if (format == "json") {
        std::cout << nlohmann::json{{"schema", theta::kReportSchema}, {"entries", rows}}.dump(2) << '\n';
        return kOk;
    }
    std::cout << std::left << std::setw(16) << "label" << std::setw(24) << "k" << std::setw(7) << "inner"
              << std::setw(12) << "psi" << std::setw(13) << "split" << std::setw(8) << "Phi_A" << "Phi_A^*" << '\n';
    for (const auto& r : rows) {
        std::string flags = r["split"].get<bool>() ? "split" : r["quasi_split"].get<bool>() ? "quasi-split" : "-";
        std::cout << std::setw(16) << r["label"].get<std::string>() << std::setw(24) << r["k"].get<std::string>()
                  << std::setw(7) << (r["inner"].get<bool>() ? "yes" : "no")
                  << std::setw(12) << r["psi"].get<std::string>() << std::setw(13) << flags << std::setw(8)
                  << r["phi_a"].get<std::string>() << r["phi_a_reduced"].get<std::string>() << '\n';
    }
    return kOk;
}

int cmd_report(const std::string& series, int rank, const std::string& label, const std::string& format,
               std::uint64_t cap) {
    auto entry = theta::Catalog::builtin().lookup(series_arg(series), rank, label);
    theta::Report r = theta::build_report(entry, cap);
    if (format == "json") std::cout << theta::report_to_json(r) << '\n';
    else std::cout << theta::report_to_text(r);
    return kOk;
}

int cmd_verify(const std::vector<std::string>& suites, const std::string& format, const theta::VerifyOptions& opts) {
    std::vector<std::string> names = suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) names = theta::suite_names();
    for (const auto& n : names)
        if (std::find(theta::suite_names().begin(), theta::suite_names().end(), n) == theta::suite_names().end())
            throw theta::UnknownLabelError("unknown suite '" + n + "'", theta::suite_names());
    bool ok = true;
    nlohmann::json all = nlohmann::json::array();
    for (const auto& n : names) {
        theta::SuiteResult r = theta::run_suite(n, opts);
        ok = ok && r.ok();
        if (format == "json") all.push_back(nlohmann::json::parse(theta::suite_to_json(r)));
        else std::cout << theta::suite_to_text(r);
    }
    if (format == "json") std::cout << nlohmann::json{{"schema", theta::kReportSchema}, {"suites", all}}.dump(2) << '\n';
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Involutions of simple groups: restricted roots, baby Weyl groups and nilpotent cones"};
    app.require_subcommand(1);
    std::string format = "text";
    std::uint64_t cap = default_cap();
    std::uint64_t seed = 42;
    std::vector<int> primes;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", cap, "Largest Weyl group to enumerate (env THETA_TOOL_CAP)");
    app.add_option("--seed", seed, "Seed for sampled checks");
    app.add_option("--prime", primes, "Primes for Lie algebra checks (repeatable)");
    app.fallthrough();

    std::string series, label;
    int rank = 0;
    auto* report = app.add_subcommand("report", "Report on one catalog class");
    report->add_option("series", series)->required();
    report->add_option("rank", rank)->required();
    report->add_option("label", label)->required();

    auto* list = app.add_subcommand("list", "List the catalog classes of a simple type");
    list->add_option("series", series)->required();
    list->add_option("rank", rank)->required();

    std::vector<std::string> suites;
    auto* verify = app.add_subcommand("verify", "Run verification suites: poincare, w0, centdim, grading, proposition, all");
    verify->add_option("suite", suites);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*list) return cmd_list(series, rank, format);
        if (*report) return cmd_report(series, rank, label, format, cap);
        theta::VerifyOptions opts;
        opts.seed = seed;
        opts.cap = cap;
        if (!primes.empty()) opts.primes = primes;
        return cmd_verify(suites, format, opts);
    } catch (const theta::UnknownLabelError& e) {
        std::cerr << "error: " << e.what() << "\navailable:";
        for (const auto& l : e.available()) std::cerr << ' ' << l;
        std::cerr << '\n';
        return kUsage;
    } catch (const theta::InvalidTypeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const theta::BadPrimeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const theta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
}
