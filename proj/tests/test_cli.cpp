#include <catch2/catch.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + " \"" IVCALC_CLI_PATH "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, n);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("cli classify emits the documented report json") {
    const CliResult res = run_cli("classify --fn abs_width --t 0");
    REQUIRE(res.code == 0);
    const auto j = parse(res.out);
    CHECK(j["schema"] == "ivcalc/1");
    CHECK(j["command"] == "classify");
    const auto& rep = j["report"];
    CHECK(rep["classification"] == "none");
    CHECK(rep["derivative"].is_null());
    CHECK(rep["left"][0].get<double>() == Approx(-1.0));
    CHECK(rep["left"][1].get<double>() == Approx(0.0).margin(1e-9));
    CHECK(rep["right"][0].get<double>() == Approx(0.0).margin(1e-9));
    CHECK(rep["right"][1].get<double>() == Approx(1.0));
    CHECK(rep["variants"]["L2"]["verdict"] == "converges-to-zero");
    CHECK(rep["variants"]["R1"]["verdict"] == "converges-to-zero");
    CHECK(rep["combos"]["D1"] == false);
}

TEST_CASE("cli error paths use exit code 1") {
    CHECK(run_cli("classify --fn no_such --t 0").code == 1);
    CHECK(run_cli("classify --fn abs_width --t 99").code == 1);
    CHECK(run_cli("integrate --fn abs_width --a 1 --b 0").code == 1);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("classify --fn abs_width --t 0 --no-such-flag").code == 1);
    CHECK(run_cli("").code == 1); // a subcommand is required
}

TEST_CASE("cli integrate value and csv audit") {
    const CliResult res = run_cli("integrate --fn exp_pair --a 0 --b 1");
    REQUIRE(res.code == 0);
    const auto j = parse(res.out);
    const double e1 = std::exp(-1.0);
    CHECK(j["result"]["value"][0].get<double>() == Approx(1.0 - e1).epsilon(1e-6));
    CHECK(j["result"]["value"][1].get<double>() == Approx(2.0 * (1.0 - e1)).epsilon(1e-6));
    CHECK(j["result"]["cells"].get<long>() >= 32);

    const CliResult csv = run_cli("integrate --fn exp_pair --a 0 --b 1 --format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("node,tag\n", 0) == 0);

    const CliResult traces = run_cli("classify --fn exp_pair --t 0.5 --format csv");
    REQUIRE(traces.code == 0);
    CHECK(traces.out.rfind("h,residual,variant\n", 0) == 0);
    CHECK(traces.out.find(",R1\n") != std::string::npos);
}

TEST_CASE("cli reconstruct closes the loop against evaluation") {
    const CliResult res = run_cli("reconstruct --fn exp_pair --mode h2 --a 0 --t 1");
    REQUIRE(res.code == 0);
    const auto j = parse(res.out);
    CHECK(j["residual"].get<double>() <= 1e-5);

    CHECK(run_cli("reconstruct --fn exp_pair --mode h1 --a 0 --t 1").code == 1);
}

TEST_CASE("cli verify and list") {
    const CliResult res = run_cli("verify --suite laws --cases 200 --seed 7");
    REQUIRE(res.code == 0);
    const auto j = parse(res.out);
    CHECK(j["report"]["all_pass"] == true);
    CHECK(j["report"]["laws"].size() == 22);

    const CliResult lst = run_cli("list");
    REQUIRE(lst.code == 0);
    CHECK(parse(lst.out)["corpus"]["entries"].size() == 7);
}

TEST_CASE("cli plot artifacts are best-effort files under --out") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ivcalc_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const CliResult res =
        run_cli("classify --fn sym_square --t 1 --plot --out \"" + dir.string() + "\"");
    REQUIRE(res.code == 0);
    CHECK(fs::exists(dir / "classify_sym_square_t1_traces.svg"));
    CHECK(fs::exists(dir / "classify_sym_square_t1_endpoints.svg"));
    fs::remove_all(dir);
}

TEST_CASE("cli honours the IVCALC_DEFAULT_TOL override") {
    // an absurdly tight tolerance defeats every limit verdict
    const CliResult res =
        run_cli("classify --fn exp_pair --t 0.5", "IVCALC_DEFAULT_TOL=1e-12");
    REQUIRE(res.code == 0);
    const auto j = parse(res.out);
    CHECK(j["report"]["classification"] == "none");
    CHECK(j["report"]["derivative"].is_null());
}
