#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QPD_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string fixture(const std::string& name) { return std::string(QPD_FIXTURES) + "/" + name; }

} // namespace

TEST_CASE("normalize") {
    RunResult r = run("normalize \"x*y - y*x\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2*i*hb*z\n");
    RunResult j = run("normalize \"y*x\" --json"); // the flag works after the subcommand too
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["normal_form"] == "x*y - 2*i*hb*z");
}

TEST_CASE("derive and limit") {
    CHECK(run("derive dx \"x^2\"").out == "2*x\n");
    CHECK(run("derive dt \"t\"").exit_code == 0);
    RunResult lim = run("limit \"dt(rho)\"");
    CHECK(lim.exit_code == 0);
    CHECK(lim.out == "0\n");
    CHECK(run("limit \"dx(rho)\"").out == "x*rho^-1\n");
}

TEST_CASE("matrix command") {
    RunResult r = run("--json matrix 2 \"x\"");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["size"] == 2);
    CHECK(parsed["entries"].size() == 2);
    CHECK(parsed["entries"][0][1] == "-hb");
    RunResult r4 = run("matrix 4 \"t\"");
    CHECK(r4.exit_code == 0);
}

TEST_CASE("exit code contract") {
    CHECK(run("verify quaternions").exit_code == 0);
    CHECK(run("nonsense-subcommand").exit_code == 2);
    CHECK(run("verify not-a-suite").exit_code == 2);
    CHECK(run("normalize \"x + * y\"").exit_code == 3);
    CHECK(run("normalize \"1/0\"").exit_code == 4);
    CHECK(run("derive dx \"rho^-1\"").exit_code == 4);
    CHECK(run("limit \"(1/hb)*x\"").exit_code == 4);
}

TEST_CASE("fixtures drive the verifier, corrupted ones fail with a residual") {
    RunResult ok = run("verify quaternions --fixture " + fixture("brackets.txt"));
    CHECK(ok.exit_code == 0);
    RunResult bad = run("--json verify quaternions --fixture " + fixture("corrupted_brackets.txt"));
    CHECK(bad.exit_code == 1);
    auto parsed = nlohmann::json::parse(bad.out);
    bool saw_residual = false;
    for (const auto& item : parsed)
        if (item["status"] == "fail") {
            CHECK(item.contains("residual_entry"));
            CHECK(item["residual_entry"] != "0");
            saw_residual = true;
        }
    CHECK(saw_residual);
}

TEST_CASE("alpha option") {
    CHECK(run("verify gradients --alpha 0,3/5,4/5,0").exit_code == 0);
    CHECK(run("verify inverse-c --alpha 0,0,0,1").exit_code == 0);
    CHECK(run("verify gradients --alpha 1,2").exit_code == 3);
}
