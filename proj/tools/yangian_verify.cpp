#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "yangian/errors.hpp"
#include "yangian/hopf_checks.hpp"
#include "yangian/presentation.hpp"
#include "yangian/report_format.hpp"
#include "yangian/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return bool(std::cout);
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    return bool(f);
}

yangian::HopfPresentation build_named(const std::string& name, int capacity)
{
    if (name == "y_sl2")
        return yangian::build_y_sl2(capacity);
    if (name == "boundary")
        return yangian::build_boundary(capacity);
    return yangian::quotient_by_hp(yangian::build_boundary(capacity));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Yangian presentations, r-matrices and twists"};
    app.require_subcommand(1);

    std::string suite;
    int max_mode = 3;
    std::string format = "json";
    std::string output;
    bool timings = false;
    std::string fault;

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember(yangian::suite_names()));
    verify->add_option("--max-mode", max_mode, "Mode bound for the checks")->check(CLI::Range(1, 64));
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--output", output, "Report file (default: standard output)");
    verify->add_flag("--timings", timings, "Include wall times in the report");
    verify->add_option("--inject-fault", fault, "Corrupt an input on purpose (testing)")
        ->check(CLI::IsMember({"broken-table"}))
        ->group("");

    std::string target;
    auto* exp = app.add_subcommand("export", "Write a presentation's table and coproducts");
    exp->add_option("presentation", target, "Presentation to export")
        ->required()
        ->check(CLI::IsMember({"y_sl2", "boundary", "factor"}));
    exp->add_option("--max-mode", max_mode, "Table capacity")->check(CLI::Range(1, 64));
    exp->add_option("--output", output, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*exp) {
            if (!write_output(output, yangian::export_text(build_named(target, max_mode)))) {
                std::cerr << "cannot write " << output << "\n";
                return kExitInternal;
            }
            return kExitPass;
        }

        yangian::SuiteConfig config{suite, max_mode, fault == "broken-table"};
        const auto records = yangian::run_suite(config);
        const yangian::ReportConfig rc{suite, max_mode, format, timings};
        const std::string text =
            format == "json" ? yangian::render_json(rc, records) : yangian::render_text(rc, records);
        if (!write_output(output, text)) {
            std::cerr << "cannot write " << output << "\n";
            return kExitInternal;
        }
        bool failed = false, errored = false;
        for (const auto& r : records) {
            failed = failed || r.status == yangian::CheckStatus::Fail;
            errored = errored || r.status == yangian::CheckStatus::Error;
        }
        if (failed)
            return kExitFail;
        return errored ? kExitInternal : kExitPass;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
