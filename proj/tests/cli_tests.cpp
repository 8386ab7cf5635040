// End-to-end checks of the command-line tool: exit-code contract, JSON
// shape, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KUMMER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

json parse(const RunResult& r) { return json::parse(r.output); }

const json* find_check(const json& report, const std::string& name) {
    for (const auto& res : report.at("results"))
        if (res.at("check") == name) return &res;
    return nullptr;
}

}  // namespace

TEST_CASE("enumerate: counts and exit code") {
    auto r = run("enumerate weber");
    CHECK(r.exit_code == 0);
    json rep = parse(r);
    CHECK(rep.at("command") == "enumerate");
    CHECK(rep.at("exit_code") == 0);
    auto* count = find_check(rep, "count");
    REQUIRE(count != nullptr);
    CHECK(count->at("witness") == 192);

    CHECK(parse(run("enumerate goepel")).at("results")[0].at("witness") == 60);
    CHECK(parse(run("enumerate rosenhain")).at("results")[0].at("witness") == 80);
    CHECK(parse(run("enumerate totals")).at("results")[0].at("witness") == 6);
    auto classes = parse(run("enumerate classes"));
    CHECK(find_check(classes, "count")->at("witness") == 6);
    CHECK(find_check(classes, "class_sizes_32")->at("pass") == true);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("enumerate bogus").exit_code == 2);
    CHECK(run("hessian --lambda 1 0 1 1 1").exit_code == 2);
    CHECK(run("hessian --lambda 1 2 3").exit_code == 2);
    CHECK(run("humbert --branch 1 1 2 3 4 5").exit_code == 2);
    CHECK(run("humbert --branch 1/x 1 2 3 4 5").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("hessian command reports the worked examples") {
    auto rep = parse(run("hessian --lambda 1 1 1 1 16"));
    CHECK(find_check(rep, "degenerate")->at("witness") == true);
    CHECK(find_check(rep, "node")->at("witness") ==
          json::array({"1", "1", "1", "1", "-4"}));
    CHECK(find_check(rep, "coordinate_nodes")->at("witness") == 10);

    auto rep2 = parse(run("hessian --lambda 1 1 1 1 1"));
    CHECK(find_check(rep2, "degenerate")->at("witness") == false);
    CHECK(find_check(rep2, "P")->at("witness") == "-1215");

    auto rep3 = parse(run("hessian --lambda 1 4 9 16 4"));
    CHECK(find_check(rep3, "node")->at("witness") ==
          json::array({"1", "2", "3", "-4", "-2"}));

    // non-square degenerate lambda: exact mode has no rational roots,
    // float mode produces coordinates
    auto rep4 = parse(run("hessian --lambda 2 2 2 2 32"));
    CHECK(find_check(rep4, "degenerate")->at("witness") == true);
    CHECK(find_check(rep4, "node")->at("witness").contains("error"));
    auto rep5 = parse(run("hessian --lambda 2 2 2 2 32 --mode float"));
    CHECK(find_check(rep5, "node")->at("witness").is_array());
}

TEST_CASE("humbert command: generic empty, instance nonempty, cross-check") {
    auto generic = parse(run("humbert --branch 0 1 2 3 4 5"));
    CHECK(find_check(generic, "satisfied_count")->at("witness") == 0);

    auto inst = parse(run("humbert --branch -6 -5 -4 -3 2 4 --cross-check --quartic"));
    CHECK(inst.at("exit_code") == 0);
    CHECK(find_check(inst, "satisfied_count")->at("witness").get<int>() > 0);
    CHECK(find_check(inst, "line_picture_agrees")->at("pass") == true);
    CHECK(find_check(inst, "quartics")->at("witness").size() ==
          find_check(inst, "satisfied_count")->at("witness").get<size_t>());
}

TEST_CASE("lattice report passes") {
    auto r = run("lattice-report --bound 2");
    CHECK(r.exit_code == 0);
    json rep = parse(r);
    for (const auto& res : rep.at("results")) CHECK(res.at("pass") == true);
}

TEST_CASE("byte-identical output on repeated runs") {
    for (const std::string& cmd :
         {std::string("enumerate classes"), std::string("lattice-report --bound 2"),
          std::string("hessian --lambda 1 4 9 16 4"),
          std::string("humbert --branch -6 -5 -4 -3 2 4 --quartic"),
          std::string("verify-all --seed 7 --bound 2")}) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
        CHECK_FALSE(a.output.empty());
    }
}

TEST_CASE("verify-all passes end to end") {
    auto r = run("verify-all --bound 2");
    CHECK(r.exit_code == 0);
    json rep = parse(r);
    for (const auto& res : rep.at("results")) CHECK(res.at("pass") == true);
}
