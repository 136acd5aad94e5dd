#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <modchar/json_io.hpp>
#include <modchar/oracle.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace modchar;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MODCHAR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/modchar_test_") + name;
}

}  // namespace

TEST_CASE("bound: prints the stability exponent") {
    auto r = run_cli("bound --type A --rank 1 --p 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
    auto r2 = run_cli("bound --type G --rank 2 --p 5");
    CHECK(r2.out == "1\n");
    auto r3 = run_cli("bound --type E --rank 8 --p 2");
    CHECK(r3.out == "4\n");
}

TEST_CASE("weyl: JSON output with documented mass and support") {
    auto r = run_cli("weyl --type A --rank 2 --weight 1,1");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.size() == 7);
    Int mass = 0;
    for (const auto& rec : doc) mass += coeff_from_json(rec.at("coeff"), "test");
    CHECK(mass == 8);

    auto rp = run_cli("weyl --type A --rank 1 --weight 3 --pretty");
    CHECK(rp.out == "e[3] + e[1] + e[-1] + e[-3]\n");
}

TEST_CASE("steinberg and babyverma") {
    auto r = run_cli("steinberg --type A --rank 1 --p 3 --r 1 --pretty");
    CHECK(r.out == "e[2] + e[0] + e[-2]\n");
    auto r2 = run_cli("babyverma --type A --rank 1 --p 3 --r 1 --weight 1 --pretty");
    CHECK(r2.out == "e[1] + e[-1] + e[-3]\n");
}

TEST_CASE("gen-sl2 piped into simple matches the oracle") {
    for (long long p : {2, 3, 5, 7}) {
        std::string file = temp_path("tilt_p" + std::to_string(p) + ".json");
        auto gen = run_cli("gen-sl2 --p " + std::to_string(p) + " --out " + file);
        CHECK(gen.exit_code == 0);

        auto run = run_cli("simple --type A --rank 1 --p " + std::to_string(p) +
                           " --tilting " + file);
        REQUIRE(run.exit_code == 0);
        json doc = json::parse(run.out);
        CHECK(doc.at("type") == "A");
        CHECK(doc.at("N") == 0);
        auto rs = RootSystem::build('A', 1);
        CHECK(doc.at("simple").size() == static_cast<std::size_t>(p));
        for (const auto& item : doc.at("simple")) {
            Weight lam = weight_from_json(item.at("weight"), 1, "test");
            Character got = character_from_json(item.at("character"), rs, "test");
            CHECK(got == sl2_simple_character(p, lam).character());
        }
        std::remove(file.c_str());
    }
}

TEST_CASE("identical invocations are byte-identical") {
    auto r1 = run_cli("weyl --type G --rank 2 --weight 1,1");
    auto r2 = run_cli("weyl --type G --rank 2 --weight 1,1");
    CHECK(r1.out == r2.out);

    std::string file = temp_path("tilt_det.json");
    run_cli("gen-sl2 --p 3 --max 6 --out " + file);
    auto s1 = run_cli("simple --type A --rank 1 --p 3 --tilting " + file);
    auto s2 = run_cli("simple --type A --rank 1 --p 3 --tilting " + file);
    CHECK(s1.out == s2.out);
    std::remove(file.c_str());
}

TEST_CASE("pim and check-tmc") {
    std::string file = temp_path("tilt_p3.json");
    run_cli("gen-sl2 --p 3 --out " + file);
    auto r = run_cli("pim --type A --rank 1 --p 3 --tilting " + file + " --weight 1 --pretty");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Q[1] = e[3] + 2e[1] + 2e[-1] + e[-3]\n");

    auto t = run_cli("check-tmc --type A --rank 1 --p 3 --tilting " + file);
    CHECK(t.exit_code == 0);
    json doc = json::parse(t.out);
    for (const auto& item : doc.at("tmc")) CHECK(item.at("holds") == true);
    std::remove(file.c_str());
}

TEST_CASE("verify runs the oracle suite") {
    auto r = run_cli("verify --p 3");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("all_passed") == true);
}

TEST_CASE("exit codes: usage=2, data errors=1") {
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("weyl --type A --rank 1").exit_code == 2);       // missing --weight
    CHECK(run_cli("weyl --type Z --rank 1 --weight 1").exit_code == 1);
    CHECK(run_cli("weyl --type A --rank 1 --weight -1").exit_code == 1);  // not dominant
    CHECK(run_cli("simple --type A --rank 1 --p 3 --tilting /nonexistent.json").exit_code == 1);

    // metadata mismatch between the file and the requested configuration
    std::string file = temp_path("tilt_mismatch.json");
    run_cli("gen-sl2 --p 3 --out " + file);
    CHECK(run_cli("simple --type A --rank 1 --p 5 --tilting " + file).exit_code == 1);
    // negative n-override is a usage error
    CHECK(run_cli("simple --type A --rank 1 --p 3 --tilting " + file +
                  " --n-override -1").exit_code == 2);
    auto up = run_cli("simple --type A --rank 1 --p 3 --tilting " + file + " --n-override 1");
    CHECK(up.exit_code == 1);  // dataset lacks the larger stable tilting weights
    std::remove(file.c_str());
}

TEST_CASE("n-override above the bound gives the same simple characters") {
    std::string file = temp_path("tilt_p2_deep.json");
    run_cli("gen-sl2 --p 2 --max 4 --out " + file);
    auto base = run_cli("simple --type A --rank 1 --p 2 --tilting " + file);
    auto up = run_cli("simple --type A --rank 1 --p 2 --tilting " + file + " --n-override 1");
    REQUIRE(base.exit_code == 0);
    REQUIRE(up.exit_code == 0);
    CHECK(json::parse(base.out).at("simple") == json::parse(up.out).at("simple"));
    CHECK(json::parse(up.out).at("N") == 1);
    std::remove(file.c_str());
}
