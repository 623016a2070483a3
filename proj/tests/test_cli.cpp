#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "test_support.hpp"

using testsupport::fixture;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(TORICODE_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path write_temp(const std::string& name, const nlohmann::json& j) {
    auto dir = std::filesystem::temp_directory_path() / "toricode_cli_test";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << j.dump();
    return p;
}

} // namespace

TEST_CASE("validate") {
    Run r = run("validate " + fixture("hirzebruch_2.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "OK: r=4 n=2, Cl ≅ ℤ², betas (1,0)(-2,1)(1,0)(0,1)");
    CHECK(r.out.find("complement {3,4}") != std::string::npos);

    Run p2 = run("validate " + fixture("p2.json"));
    CHECK(p2.code == 0);
    CHECK(first_line(p2.out).rfind("OK: r=3 n=2, Cl ≅ ℤ,", 0) == 0);

    Run bad = run("validate " + fixture("bad_nonprimitive.json"), true);
    CHECK(bad.code == 2);
    CHECK(bad.out.find("NotPrimitive") != std::string::npos);

    Run missing = run("validate /nonexistent/variety.json");
    CHECK(missing.code == 2);
}

TEST_CASE("table text and json carry the same numbers") {
    Run text = run("table " + fixture("critical.json"));
    REQUIRE(text.code == 0);
    Run js = run("table --json " + fixture("critical.json"));
    REQUIRE(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["anchor"] == nlohmann::json::array({4, 2}));

    // Text rows are printed from b = 2 down to b = 0, a ascending.
    std::map<std::pair<int, int>, long> from_json;
    for (const auto& rec : j["values"])
        from_json[{rec["alpha"][0].get<int>(), rec["alpha"][1].get<int>()}] = rec["h"].get<long>();
    REQUIRE(from_json.size() == 63);
    std::istringstream in(text.out);
    std::string line;
    int rows = 0;
    const std::regex row_re(R"(^b=\s*(-?\d+) \|(.*)$)");
    while (std::getline(in, line)) {
        std::smatch m;
        if (!std::regex_match(line, m, row_re))
            continue;
        const int b = std::stoi(m[1]);
        std::string cells = std::regex_replace(std::string(m[2]), std::regex(R"([\[\]])"), " ");
        std::istringstream cs(cells);
        long v = 0;
        int a = -10;
        while (cs >> v)
            CHECK(from_json[{a++, b}] == v);
        CHECK(a == 11);
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(text.out.find("[1]") != std::string::npos);
    CHECK(text.out.find("anchor Σα_i = (4,2)") != std::string::npos);
}

TEST_CASE("table options") {
    Run one = run("table " + fixture("hirci.json") + " --window 0,0:0,0");
    CHECK(one.code == 0);
    CHECK(one.out.find("[1]") != std::string::npos);

    Run deg = run("table " + fixture("hirci.json") + " --degree");
    CHECK(deg.code == 0);
    CHECK(deg.out.find("deg = 8") != std::string::npos);

    Run nonsa = run("table " + fixture("threefold_code.json") + " --degree", true);
    CHECK(nonsa.code == 2);
    CHECK(nonsa.out.find("RequiresSemiample") != std::string::npos);

    CHECK(run("table " + fixture("hirci.json") + " --window 1,2").code == 2);
    CHECK(run("table " + fixture("hirci.json") + " --window 3,0:1,0").code == 2);
}

TEST_CASE("regularity") {
    Run r = run("regularity --json " + fixture("critical.json"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["degree"] == 8);
    // (3,1) + N beta: b = 1 with a >= 3, and b = 2 with a >= 1 via beta_2 = (-2,1)
    CHECK(j["classes"].front() == nlohmann::json::array({1, 2}));
    CHECK(j["classes"].size() == 18);
}

TEST_CASE("points") {
    Run r = run("points " + fixture("hirci.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "8 points over F_5");
    Run j = run("points --json " + fixture("threefold_code.json"));
    CHECK(nlohmann::json::parse(j.out)["count"] == 64);
    CHECK(run("points " + fixture("threefold_code.json") + " --budget-points 10").code == 4);
}

TEST_CASE("code") {
    Run r = run("code " + fixture("hirci.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "[8, 4, 3]_5");
    CHECK(r.out.find("agreement: H((1,1)) = 4, rank = 4, OK") != std::string::npos);

    Run js = run("code --json " + fixture("hirci.json"));
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["N"] == 8);
    CHECK(j["k"] == 4);
    CHECK(j["d"] == 3);
    CHECK(j["matrix"].size() == 6);

    Run trivial = run("code " + fixture("hirci.json") + " --alpha 1,3");
    CHECK(first_line(trivial.out) == "[8, 8, 1]_5  trivial (k = N)");

    Run cox = run("code " + fixture("hirci_cox_points.json") + " --alpha 1,2");
    CHECK(first_line(cox.out) == "[8, 6, 2]_5");

    Run three = run("code " + fixture("threefold_code.json"));
    CHECK(three.code == 0);
    CHECK(three.out.find("k = 40") != std::string::npos);
    CHECK(three.out.find("d: skipped(budget)") != std::string::npos);
    CHECK(three.out.find(", OK") != std::string::npos);
    Run three_js = run("code --json " + fixture("threefold_code.json"));
    CHECK(nlohmann::json::parse(three_js.out)["d"].is_null());
}

TEST_CASE("code reports a formula/rank mismatch") {
    // Three of the eight points: rank falls below the Hilbert function.
    nlohmann::json problem{{"variety", fixture("hirzebruch_2.json")},
                           {"ci_degrees", {{2, 0}, {0, 4}}},
                           {"q", 5},
                           {"points", {{1, 1}, {1, 2}, {4, 3}}},
                           {"alpha", {1, 1}}};
    auto path = write_temp("mismatch.json", problem);
    Run r = run("code " + path.string());
    CHECK(r.code == 3);
    CHECK(r.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("numerator") {
    Run r = run("numerator " + fixture("p123_point.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "1 - t - t^3 + t^4");
    CHECK(r.out.find("a-invariant = -2") != std::string::npos);
    Run j = run("numerator --json " + fixture("p123_triple_point.json"));
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["a_invariant"] == 5);
    CHECK(parsed["regularity_start"] == 6);
    Run h = run("numerator " + fixture("hirci.json"));
    CHECK(first_line(h.out) == "1 - t^(0,4) - t^(2,0) + t^(2,4)");
}

TEST_CASE("usage errors") {
    CHECK(run("").code != 0);
    CHECK(run("bogus").code != 0);
    CHECK(run("code " + fixture("hirci.json") + " --alpha x,y").code == 2);
}
