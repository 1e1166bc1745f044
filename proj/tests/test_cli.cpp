#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("EULERSUM_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("list emits the registry in both formats") {
    const auto table = run("list --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("eq-2.12") != std::string::npos);

    const auto js = run("list --format json");
    CHECK(js.exit_code == 0);
    const json arr = json::parse(js.out);
    CHECK(arr.is_array());
    CHECK(arr.size() >= 45);

    const auto filtered = run("list --format json --filter \"eq-2.*\"");
    const json farr = json::parse(filtered.out);
    CHECK(!farr.empty());
    for (const auto& e : farr) CHECK(e["id"].get<std::string>().substr(0, 5) == "eq-2.");
}

TEST_CASE("eval computes sums and rejects bad specs") {
    const auto ok = run("eval \"S[2;0;p=6]\"");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("1.02189709") != std::string::npos);

    const auto kernel = run("eval \"K[m=1,k=1,r=0,type=zeta]\"");
    CHECK(kernel.exit_code == 0);
    CHECK(kernel.out.find("1.6449340") != std::string::npos);

    const auto stirling = run("eval \"ST[p=2,k=1]\" --format json");
    CHECK(stirling.exit_code == 0);
    const json sj = json::parse(stirling.out);
    // (2.21) at p=2, k=1: zeta(2) + Y_2(1)/2 - Y_1(1) = zeta(2)
    CHECK(std::abs(sj["value"].get<double>() - 1.6449340668) < 1e-7);

    CHECK(run("eval \"S[1;0;p=1]\"").exit_code == 2);   // divergent
    CHECK(run("eval \"S[1;0;p%3]\"").exit_code == 2);   // parse error
    CHECK(run("eval \"Q[1]\"").exit_code == 2);         // unknown head
}

TEST_CASE("verify single identity and domain errors") {
    CHECK(run("verify eq-2.12 --param k=5").exit_code == 0);
    CHECK(run("verify eq-9.99").exit_code == 2);
    CHECK(run("verify eq-2.10 --param m=1 --param r=3 --param k=2").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
    // an unreachable tolerance turns a pass into a failure and exit code 1
    CHECK(run("verify eq-2.12 --param k=5 --tol 1e-30").exit_code == 1);
}

TEST_CASE("json report round-trips and summary counts match") {
    const std::string out_file = "/tmp/eulersum_report_test.json";
    const auto r = run("verify --filter \"eq-2.3?\" --format json --out " + out_file);
    CHECK(r.exit_code == 0);
    std::ifstream in(out_file);
    REQUIRE(in.good());
    json doc;
    in >> doc;
    CHECK(doc["schema"] == 1);
    CHECK(doc["config"].contains("N"));
    std::size_t pass = 0, fail = 0, unconfirmed = 0;
    for (const auto& e : doc["results"]) {
        const std::string status = e["status"];
        if (status == "pass")
            ++pass;
        else if (status == "unconfirmed")
            ++unconfirmed;
        else
            ++fail;
        CHECK(e.contains("lhs"));
        CHECK(e["lhs"].contains("value"));
        CHECK(e.contains("residual"));
    }
    CHECK(doc["summary"]["total"] == doc["results"].size());
    CHECK(doc["summary"]["passed"] == pass);
    CHECK(doc["summary"]["failed"] == fail);
    CHECK(doc["summary"]["unconfirmed"] == unconfirmed);
    std::remove(out_file.c_str());
}

TEST_CASE("csv report has the documented header") {
    const auto r = run("verify eq-2.30 --param k=2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("id,params,lhs,rhs,residual,pass,status\n", 0) == 0);
}

TEST_CASE("reports are deterministic") {
    const auto a = run("verify --filter eq-2.30 --format json");
    const auto b = run("verify --filter eq-2.30 --format json");
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["results"] == jb["results"]);
    CHECK(ja["summary"] == jb["summary"]);
}

TEST_CASE("every listed id is accepted by verify") {
    const auto listed = run("list --format json");
    const json arr = json::parse(listed.out);
    for (const auto& e : arr) {
        const std::string id = e["id"];
        const auto r = run("verify \"" + id + "\" --N 50000 --format csv");
        INFO("id ", id);
        CHECK(r.exit_code != 2);
    }
}

TEST_CASE("EULERSUM_DEFAULT_N is honored and flags override it") {
    const auto env = run("verify eq-2.12 --param k=1 --format json", "EULERSUM_DEFAULT_N=50000");
    CHECK(json::parse(env.out)["config"]["N"] == 50000);
    const auto flag = run("verify eq-2.12 --param k=1 --N 80000 --format json", "EULERSUM_DEFAULT_N=50000");
    CHECK(json::parse(flag.out)["config"]["N"] == 80000);
}
