#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "boolpred/numerics.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BOOLPRED_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cost: exact rational for majority(3)") {
    auto r = run("cost --fn majority --n 3 --mode exact");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["n"] == 3);
    CHECK(j["mode"] == "exact");
    CHECK(j["total"] == "23/48");
    CHECK(j["per_step"][0] == "3/16");
    CHECK(j["per_step"][1] == "1/6");
    CHECK(j["per_step"][2] == "1/8");
    CHECK(std::abs(j["total_float"].get<double>() - 23.0 / 48) < 1e-12);
}

TEST_CASE("cost: log loss on a noisy dictator") {
    auto r = run("cost --fn dictator --n 7 --alpha 0.25 --loss log");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    // H(Y^7 | x_1) = 6 + h(0.25)
    CHECK(std::abs(j["total_float"].get<double>() - (6 + boolpred::binent(0.25))) < 1e-9);
}

TEST_CASE("cost: constant function") {
    auto r = run("cost --fn constant1 --n 5 --alpha 0.3");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(std::abs(j["total_float"].get<double>() - 1.25) < 1e-12);
}

TEST_CASE("cost: csv format") {
    auto r = run("cost --fn majority --n 3 --mode exact --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("# boolpred v1\n", 0) == 0);
    CHECK(r.out.find("total,23/48\n") != std::string::npos);
}

TEST_CASE("cost: repeated runs are byte-identical") {
    auto a = run("cost --fn majority --n 9 --alpha 0.137 --loss log");
    auto b = run("cost --fn majority --n 9 --alpha 0.137 --loss log");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cost: function file round trip") {
    std::string path = "/tmp/boolpred_fn_test.json";
    {
        std::ofstream f(path);
        f << R"({"n": 3, "hex": "E8"})";
    }
    auto r = run("cost --fn-file " + path + " --mode exact");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["total"] == "23/48");
    std::remove(path.c_str());
}

TEST_CASE("cost: output file") {
    std::string path = "/tmp/boolpred_out_test.json";
    auto r = run("cost --fn parity --n 4 --mode exact --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json j;
    f >> j;
    CHECK(j["total"] == "3/4");
    std::remove(path.c_str());
}

TEST_CASE("table1 rows") {
    auto r = run("table1 --n-max 9");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "# boolpred v1\n"
          "n,smse_majority,smse_optimal,excess,lower_bound_eq3\n"
          "3,0.4792,0.4792,0.0000,0.4034\n"
          "5,0.9686,0.9676,0.0010,0.9034\n"
          "7,1.4618,1.4552,0.0066,1.4034\n"
          "9,1.9569,1.9483,0.0086,1.9034\n");
}

TEST_CASE("bounds json") {
    auto r = run("bounds --n 9 --alpha 0.1");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    auto row = j["rows"][0];
    CHECK(std::abs(row["mu_alpha"].get<double>() - 0.7314889552) < 1e-8);
    CHECK(row["noisy_lb"].get<double>() < row["maj_noisy_ub_leading"].get<double>());
    CHECK(std::abs(row["h_maj_gaussian"].get<double>() - 0.6154043705) < 1e-6);
}

TEST_CASE("sweep csv has one row per alpha") {
    auto r = run("sweep --n 5 --alpha-grid 0,0.1,0.25,0.5");
    REQUIRE(r.exit_code == 0);
    int rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows == 2 + 4);  // banner + header + 4 data rows
    // singular entries are empty at alpha = 0
    auto first_data = r.out.find("\n0,");
    CHECK(first_data != std::string::npos);
}

TEST_CASE("verify passes at small n") {
    auto r = run("verify --n 3 --alpha 0.2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS dp-vs-brute-minimum") != std::string::npos);
    CHECK(r.out.find("PASS balanced-max-is-dictator") != std::string::npos);
    CHECK(r.out.find("PASS noiseless-lower-bound") != std::string::npos);
    CHECK(r.out.find("PASS noisy-lower-bound") != std::string::npos);
    CHECK(r.out.find("PASS mutual-information-cap") != std::string::npos);
    CHECK(r.out.find("PASS pinsker-grid") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("cost --n 3").exit_code == 2);                       // no function
    CHECK(run("cost --fn majority --fn-file x --n 3").exit_code == 2);
    CHECK(run("cost --fn wat --n 3").exit_code == 2);
    CHECK(run("cost --fn majority --n 3 --alpha 0.7").exit_code == 3);
    CHECK(run("cost --fn majority --n 3 --alpha 0.1 --mode exact").exit_code == 3);
    CHECK(run("cost --fn majority --n 3 --mode exact --loss log").exit_code == 3);
    CHECK(run("table1 --n-max 8").exit_code == 3);
    CHECK(run("verify --n 7").exit_code == 3);
}
