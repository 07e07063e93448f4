#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string binary_path() {
    const char* env = std::getenv("CRITDEG_BIN");
    REQUIRE_MESSAGE(env != nullptr, "CRITDEG_BIN must point at the critdeg binary");
    return env;
}

struct CmdResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

CmdResult run(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

const char* kSegSqSq = R"({
  "n": 2,
  "polytopes": [
    [[0,0],[2,0]],
    [[0,0],[1,0],[0,1],[1,1]],
    [[0,0],[1,0],[0,1],[1,1]]
  ],
  "generic_seed": 42
})";

const char* kTriangles = R"({
  "n": 2,
  "polytopes": [
    [[0,0],[1,0],[0,1]],
    [[0,0],[1,0],[0,1]],
    [[0,0],[1,0],[0,1]]
  ],
  "generic_seed": 7
})";

const char* kRemark = R"({
  "n": 2,
  "polytopes": [
    [[0,0],[0,1]],
    [[0,0],[1,0]],
    [[0,0],[1,0]]
  ]
})";

}  // namespace

TEST_CASE("cli analyze produces the expected report and exit code") {
    auto file = write_temp("critdeg_cli_seg.json", kSegSqSq);
    auto res = run("analyze " + file.string() + " --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["bounds"]["lower"] == 2);
    CHECK(j["bounds"]["upper"] == 2);
    CHECK(j["formula"]["value"] == 2);
    CHECK(j["oracle"]["value"] == 2);
    CHECK(j["verdict"] == "agree");

    // identical invocation gives byte-identical output
    auto res2 = run("analyze " + file.string() + " --format json");
    CHECK(res.output == res2.output);
}

TEST_CASE("cli analyze reports the big-and-nef case") {
    auto file = write_temp("critdeg_cli_tri.json", kTriangles);
    auto res = run("analyze " + file.string() + " --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["bignef"]["case"] == "full-dim");
    CHECK(j["bignef"]["value"] == 1);
    CHECK(j["oracle"]["value"] == 1);
}

TEST_CASE("cli analyze of a non-essential family completes with exit 0") {
    auto file = write_temp("critdeg_cli_remark.json", kRemark);
    auto res = run("analyze " + file.string() + " --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["verdict"] == "not-essential");
    CHECK(j["essential"]["violating_subset"] == std::vector<int>{1, 2});
}

TEST_CASE("cli rejects malformed input with exit 2") {
    auto file = write_temp("critdeg_cli_bad.json", "{\"n\": 2, broken");
    auto res = run("analyze " + file.string());
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("JSON") != std::string::npos);

    auto missing = run("analyze /nonexistent/instance.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli verify runs trials on an essential instance") {
    auto file = write_temp("critdeg_cli_seg2.json", kSegSqSq);
    auto res = run("verify " + file.string() + " --seed 100 --trials 5");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    REQUIRE(j["verify"]["results"].size() == 5);
    for (const auto& trial : j["verify"]["results"]) CHECK(trial["value"] == 2);
    CHECK(j["verify"]["all_ok"] == true);
}

TEST_CASE("cli verify refuses a non-essential instance with exit 2") {
    auto file = write_temp("critdeg_cli_remark2.json", kRemark);
    auto res = run("verify " + file.string() + " --seed 1 --trials 2");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("not essential") != std::string::npos);
}

TEST_CASE("cli random generates deterministic essential instances") {
    auto out1 = fs::temp_directory_path() / "critdeg_cli_rand1.json";
    auto out2 = fs::temp_directory_path() / "critdeg_cli_rand2.json";
    CHECK(run("random --n 2 --max-coord 2 --seed 7 --out " + out1.string()).exit_code == 0);
    CHECK(run("random --n 2 --max-coord 2 --seed 7 --out " + out2.string()).exit_code == 0);
    std::ifstream f1(out1), f2(out2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);

    auto analyzed = run("analyze " + out1.string() + " --format json");
    CHECK(analyzed.exit_code == 0);
    auto j = nlohmann::json::parse(analyzed.output);
    CHECK(j["essential"]["essential"] == true);

    // n = 1 and n = 4 both produce essential families
    CHECK(run("random --n 1 --max-coord 1 --seed 1 --out " +
              (fs::temp_directory_path() / "critdeg_cli_rand_n1.json").string())
              .exit_code == 0);
    auto r4 = fs::temp_directory_path() / "critdeg_cli_rand_n4.json";
    CHECK(run("random --n 4 --max-coord 1 --seed 3 --out " + r4.string()).exit_code == 0);
    std::ifstream f4(r4);
    auto j4 = nlohmann::json::parse(f4);
    CHECK(j4["n"] == 4);
    CHECK(j4["polytopes"].size() == 5);
}

TEST_CASE("cli e1-table prints the table") {
    auto file = write_temp("critdeg_cli_seg3.json", kSegSqSq);
    auto res = run("e1-table " + file.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("q=2: 1 0 0 0") != std::string::npos);
    CHECK(res.output.find("q=0: 0 0 1 3") != std::string::npos);

    auto jres = run("e1-table " + file.string() + " --format json");
    auto j = nlohmann::json::parse(jres.output);
    CHECK(j["e1_table"][1][1] == 1);

    auto remark = write_temp("critdeg_cli_remark3.json", kRemark);
    CHECK(run("e1-table " + remark.string()).exit_code == 2);
}
