#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#ifndef CONFHODGE_CLI_PATH
#error "CONFHODGE_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CONFHODGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("gf emits the expected signed series") {
    auto r = run_cli("gf --genus 0 --punctures 1 --tmax 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"genus\":0,\"punctures\":1,\"tmax\":2,\"terms\":[{\"x\":0,\"y\":0,"
          "\"u\":0,\"t\":0,\"c\":1},{\"x\":0,\"y\":0,\"u\":0,\"t\":1,\"c\":1},"
          "{\"x\":0,\"y\":0,\"u\":0,\"t\":2,\"c\":1},{\"x\":1,\"y\":1,\"u\":1,"
          "\"t\":2,\"c\":-1}]}\n");
}

TEST_CASE("gf at genus 1 includes the two u t terms") {
    auto r = run_cli("gf --genus 1 --punctures 1 --tmax 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + t - y*u*t - x*u*t\n");
}

TEST_CASE("closed surfaces are a usage error") {
    auto r = run_cli("gf --genus 0 --punctures 0 --tmax 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("unknown suite is a usage error") {
    CHECK(run_cli("check --suite nosuch").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("gf --help").exit_code == 0);
}

TEST_CASE("missing required options are usage errors") {
    CHECK(run_cli("gf --genus 0").exit_code == 2);
    CHECK(run_cli("nosubcommand").exit_code == 2);
}

TEST_CASE("output is byte-stable across runs") {
    const std::string args = "table --genus 2 --punctures 2 --n 4 --format json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("emitted json round-trips byte-for-byte") {
    auto r = run_cli("table --genus 1 --punctures 1 --n 3");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump() + "\n" == r.out);
    CHECK(parsed["entries"].size() > 0);
    for (const auto& e : parsed["entries"]) CHECK(e["n"] == 3);
}

TEST_CASE("table respects the signed flag") {
    auto plain = run_cli("table --genus 1 --punctures 1 --n 1 --format csv");
    CHECK(plain.out == "n,i,w1,w2,h\n1,0,0,0,1\n1,1,0,1,1\n1,1,1,0,1\n");
    auto with_sign = run_cli("table --genus 1 --punctures 1 --n 1 --format csv --signed");
    CHECK(with_sign.out == "n,i,w1,w2,c\n1,0,0,0,1\n1,1,0,1,-1\n1,1,1,0,-1\n");
}

TEST_CASE("oracle table and comparison") {
    auto table = run_cli("oracle --genus 0 --n 5 --format csv");
    CHECK(table.exit_code == 0);
    CHECK(table.out == "p,q,w1,w2,dim\n0,0,0,0,1\n0,1,1,1,1\n");

    CHECK(run_cli("oracle --genus 1 --n 2 --compare").exit_code == 0);
    CHECK(run_cli("oracle --genus 2 --n 5 --compare").exit_code == 0);
    // the flagship run
    CHECK(run_cli("oracle --genus 3 --n 8 --compare").exit_code == 0);
}

TEST_CASE("table shares the closed-surface guard") {
    CHECK(run_cli("table --genus 1 --punctures 0 --n 2").exit_code == 2);
}

TEST_CASE("strand output uses z") {
    auto r = run_cli("strand --which diagonal --genus 1 --punctures 1 --zmax 2");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed["zmax"] == 2);
    CHECK(parsed["terms"][0].contains("z"));
}

TEST_CASE("specialize euler matches the closed form") {
    auto r = run_cli("specialize --mode euler --genus 1 --punctures 1 --tmax 4 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 - t + t^2 - t^3 + t^4\n");
}

TEST_CASE("check subsets succeed quickly") {
    CHECK(run_cli("check --suite identity --max-genus 12").exit_code == 0);
    CHECK(run_cli("check --suite euler --max-genus 2 --max-punctures 2 --tmax 8")
              .exit_code == 0);
    auto all = run_cli("check --suite all --max-genus 2 --max-n 6 --tmax 6");
    CHECK(all.exit_code == 0);
    auto parsed = nlohmann::ordered_json::parse(all.out);
    CHECK(parsed.size() == 11);  // lefschetz contributes two reports
}

TEST_CASE("check emits a json report array") {
    auto r = run_cli("check --suite purity --max-n 6");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["suite"] == "purity");
    CHECK(parsed[0]["pass"] == true);
    CHECK(parsed[0]["witness"].is_null());
}

TEST_CASE("resource guard blocks oversized requests unless forced") {
    CHECK(run_cli("gf --genus 17 --punctures 1 --tmax 1").exit_code == 2);
    CHECK(run_cli("gf --genus 0 --punctures 1 --tmax 65").exit_code == 2);
    CHECK(run_cli("gf --genus 17 --punctures 1 --tmax 1 --force").exit_code == 0);
}

TEST_CASE("thread cap is honored") {
    std::string cmd = "CONFHODGE_THREADS=2 " + std::string(CONFHODGE_CLI_PATH) +
                      " check --suite lefschetz --max-genus 3 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
}
