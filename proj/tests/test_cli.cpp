#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MATDIST_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("field-info emits schema-versioned JSON") {
    const RunResult r = run_cli("field-info --field 3^2 --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["schema_version"] == "1");
    CHECK(j["q"] == 9);
    CHECK(j["modulus"] == json::array({1, 0, 1}));
}

TEST_CASE("gauss subcommand payload") {
    const RunResult r = run_cli("gauss --field 3 --n 2 --A '1,0;0,2' --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["rho"] == 2);
    CHECK(j["magnitude_squared"] == "729");  // 3^(4+2)
    CHECK(j["value_coords"]["p"] == 3);
}

TEST_CASE("sphere subcommand brute/formula agreement") {
    const json brute =
        json::parse(run_cli("sphere --field 3 --n 2 --r 2 --T '1,0;0,1' --brute --format json").output);
    const json formula =
        json::parse(run_cli("sphere --field 3 --n 2 --r 2 --T '1,0;0,1' --format json").output);
    CHECK(brute["count"] == formula["count"]);
    CHECK(brute["method"] == "brute");
    CHECK(formula["method"] == "formula");
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify --suite ff").exit_code == 0);
    CHECK(run_cli("verify --suite nonsense").exit_code == 4);
}

TEST_CASE("budget exceeded maps to exit 3") {
    const RunResult r = run_cli("gauss --field 3 --n 3 --budget 100 --A '0,0,0;0,0,0;0,0,0'");
    CHECK(r.exit_code == 3);
}

TEST_CASE("config errors map to exit 4") {
    CHECK(run_cli("field-info --field 4").exit_code == 4);
    CHECK(run_cli("field-info --field 3^9").exit_code == 4);
    CHECK(run_cli("sphere --field 3 --n 2 --r 1 --T '0,0;0,0' --ft '0,0;0,0'").exit_code == 4);
}

TEST_CASE("classify and tables run end to end") {
    const json j = json::parse(run_cli("classify --field 3 --A '0,1;0,0' --format json").output);
    CHECK(j["quad_class_type"] == "0^(2)");
    CHECK(j["radical_gram"] == 2);

    const RunResult t = run_cli("tables --n 2 --field 5 --format csv");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("paper_row") != std::string::npos);
    CHECK(t.output.find("MISMATCH") == std::string::npos);
}

TEST_CASE("distance sample mode emits a monotone summary") {
    const json j = json::parse(
        run_cli("distance --field 3 --n 1 --r 2 --sizes 3,9 --trials 2 --seed 1 --format json")
            .output);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][1]["success_fraction"] == 1.0);
}
