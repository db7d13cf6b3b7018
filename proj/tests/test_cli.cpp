#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "yangian/errors.hpp"
#include "yangian/report_format.hpp"
#include "yangian/suites.hpp"

using namespace yangian;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(YANGIAN_VERIFY_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<CheckRecord> sample_records()
{
    CheckRecord ok{"demo.ok", CheckStatus::Pass, "3 items", "", 0.25};
    CheckRecord bad{"demo.bad", CheckStatus::Fail, "1 of 2 items failed", "e_0 - f_0", 0.5};
    CheckRecord err{"demo.err", CheckStatus::Error, "capacity", "generator e_9 exceeds capacity 6", 0};
    return {ok, bad, err};
}

} // namespace

TEST_CASE("run_check turns library errors into errored records")
{
    const CheckRecord a = run_check("a", [] { return Outcome{true, "fine", ""}; });
    CHECK(a.status == CheckStatus::Pass);
    const CheckRecord b = run_check("b", [] { return Outcome{false, "bad", "x"}; });
    CHECK(b.status == CheckStatus::Fail);
    CHECK(b.residual == "x");
    const CheckRecord c = run_check("c", []() -> Outcome { throw CapacityError("too deep"); });
    CHECK(c.status == CheckStatus::Error);
    CHECK(c.residual.find("too deep") != std::string::npos);
    CHECK_FALSE(all_passed({a, b}));
    CHECK(all_passed({a}));
}

TEST_CASE("json rendering")
{
    const ReportConfig cfg{"demo", 2, "json", false};
    const auto doc = nlohmann::json::parse(render_json(cfg, sample_records()));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["config"]["suite"] == "demo");
    CHECK(doc["config"]["max_mode"] == 2);
    REQUIRE(doc["checks"].size() == 3);
    CHECK(doc["checks"][0]["status"] == "pass");
    CHECK_FALSE(doc["checks"][0].contains("residual"));
    CHECK_FALSE(doc["checks"][0].contains("seconds"));
    CHECK(doc["checks"][1]["residual"] == "e_0 - f_0");
    CHECK(doc["checks"][2]["status"] == "error");
    CHECK(doc["summary"]["total"] == 3);
    CHECK(doc["summary"]["passed"] == 1);
    CHECK(doc["summary"]["failed"] == 1);
    CHECK(doc["summary"]["errored"] == 1);

    const ReportConfig timed{"demo", 2, "json", true};
    const auto with_times = nlohmann::json::parse(render_json(timed, sample_records()));
    CHECK(with_times["checks"][1]["seconds"] == 0.5);

    // key order is fixed
    const std::string text = render_json(cfg, sample_records());
    CHECK(text.find("\"schema_version\"") < text.find("\"config\""));
    CHECK(text.find("\"checks\"") < text.find("\"summary\""));
    CHECK(text == render_json(cfg, sample_records()));
}

TEST_CASE("text rendering")
{
    const ReportConfig cfg{"demo", 2, "text", false};
    const std::string text = render_text(cfg, sample_records());
    CHECK(text.find("PASS  demo.ok  (3 items)") != std::string::npos);
    CHECK(text.find("FAIL  demo.bad") != std::string::npos);
    CHECK(text.find("e_0 - f_0") != std::string::npos);
    CHECK(text.find("ERROR demo.err") != std::string::npos);
    CHECK(text.find("3 checks: 1 passed, 1 failed, 1 errored") != std::string::npos);
}

TEST_CASE("suite registry")
{
    CHECK(suite_names().size() == 11);
    CHECK(capacity_for(3) == 6);
    CHECK(capacity_for(5) == 8);
    CHECK_THROWS_AS(run_suite({"nonsense", 3, false}), AlgebraError);
    CHECK_THROWS_AS(run_suite({"ybe", 0, false}), AlgebraError);
    const auto records = run_suite({"cybe", 3, false});
    CHECK(all_passed(records));
    bool has_boundary = false, has_casimir = false;
    for (const auto& r : records) {
        has_boundary = has_boundary || r.name == "cybe.boundary_r";
        has_casimir = has_casimir || r.name == "cybe.casimir_sl2";
    }
    CHECK(has_boundary);
    CHECK(has_casimir);
}

TEST_CASE("verify command exit codes and determinism")
{
    const RunResult hopf = run("verify hopf --max-mode 2");
    CHECK(hopf.status == 0);
    const auto doc = nlohmann::json::parse(hopf.out);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["passed"] == doc["summary"]["total"]);
    CHECK(run("verify hopf --max-mode 2").out == hopf.out);

    const RunResult text = run("verify cybe --format text");
    CHECK(text.status == 0);
    CHECK(text.out.find("PASS  cybe.casimir_sl2") != std::string::npos);

    CHECK(run("verify nonsense").status == 2);
    CHECK(run("verify hopf --max-mode 0").status == 2);
    CHECK(run("verify hopf --format yaml").status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("corrupted table is reported, not hidden")
{
    const RunResult broken = run("verify hopf --max-mode 2 --inject-fault broken-table");
    CHECK(broken.status == 1);
    const auto doc = nlohmann::json::parse(broken.out);
    int failing = 0;
    for (const auto& c : doc["checks"]) {
        if (c["status"] != "pass") {
            ++failing;
            CHECK_FALSE(c["residual"].get<std::string>().empty());
        } else {
            CHECK_FALSE(c.contains("residual"));
        }
    }
    CHECK(failing > 0);
    CHECK(doc["summary"]["failed"] == failing);
}

TEST_CASE("export command")
{
    const RunResult y = run("export y_sl2");
    CHECK(y.status == 0);
    CHECK(y.out.find("[e_0, f_1] = h_1") != std::string::npos);
    CHECK(y.out.find("Delta(e_1) = ") != std::string::npos);

    const RunResult b = run("export boundary");
    CHECK(b.out.find("[e_0, f_0] = (p/2)*hp_0") != std::string::npos);

    const RunResult f = run("export factor");
    CHECK(f.out.find("[e_1, f_2] = 0") != std::string::npos);
    CHECK(f.out.find("hp_") == std::string::npos);
    CHECK(run("export factor").out == f.out);
    CHECK(run("export nothing").status == 2);

    const std::string path = "test_cli_export.txt";
    CHECK(run("export y_sl2 --output " + path).status == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == y.out);
    std::remove(path.c_str());
}
