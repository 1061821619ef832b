#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tag = std::to_string(++counter);
    const std::string out_path = "cli_out_" + tag + ".txt";
    const std::string err_path = "cli_err_" + tag + ".txt";
    const std::string command = std::string(GAUSSINT_CLI_PATH) + " " + args +
                                " >" + out_path + " 2>" + err_path;
    const int raw = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("factor renders canonical factorizations") {
    const auto r = run_cli("factor 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-i * (1+2i)^1 * (2+i)^1\n");

    const auto negative = run_cli("factor -- -1-2i");
    CHECK(negative.exit_code == 0);
    CHECK(negative.out == "-1 * (1+2i)^1\n");

    const auto unit = run_cli("factor -- -i");
    CHECK(unit.exit_code == 0);
    CHECK(unit.out == "-i\n");

    const auto json_run = run_cli("factor 5 --format json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_run.out);
    CHECK(parsed["subject"] == "5");
    CHECK(parsed["unit"] == "-i");
    REQUIRE(parsed["factors"].size() == 2);
    CHECK(parsed["factors"][0]["prime"] == "1+2i");
    CHECK(parsed["factors"][0]["exponent"] == 1);
    CHECK(parsed["factors"][1]["prime"] == "2+i");
    CHECK(parsed["factors"][1]["exponent"] == 1);
    CHECK(parsed["rendered"] == "-i * (1+2i)^1 * (2+i)^1");
}

TEST_CASE("sigma prints the value and its norm") {
    const auto one = run_cli("sigma 1");
    CHECK(one.exit_code == 0);
    CHECK(one.out == "1\n1\n");

    const auto prime = run_cli("sigma 2+i");
    CHECK(prime.exit_code == 0);
    CHECK(prime.out == "3+i\n10\n");

    const auto json_run = run_cli("sigma 2+i --format json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_run.out);
    CHECK(parsed["subject"] == "2+i");
    CHECK(parsed["sigma"] == "3+i");
    CHECK(parsed["normSigma"] == 10);
}

TEST_CASE("check reports the perfection analysis") {
    const auto text = run_cli("check 2+i");
    CHECK(text.exit_code == 0);
    const auto lines = lines_of(text.out);
    REQUIRE(lines.size() >= 6);
    CHECK(lines[0] == "subject: 2+i");
    CHECK(lines[1] == "parity: odd");
    CHECK(lines[2] == "sigma: 3+i");

    const auto json_run = run_cli("check 2+i --format json");
    CHECK(json_run.exit_code == 0);
    CHECK(json_run.out ==
          "{\"subject\":\"2+i\",\"parity\":\"odd\",\"sigma\":\"3+i\","
          "\"normSigma\":10,\"twoNorm\":10,\"normPerfect\":true,"
          "\"perfectUnit\":null}\n");

    const auto boundary = run_cli("check 2-i --format json");
    CHECK(boundary.exit_code == 0);
    const auto parsed = nlohmann::json::parse(boundary.out);
    CHECK(parsed["sigma"] == "2+2i");
    CHECK(parsed["normSigma"] == 8);
    CHECK(parsed["normPerfect"] == false);
}

TEST_CASE("search emits records on stdout and a summary on stderr") {
    const auto r = run_cli("search --bound 10 --parity odd --format json");
    CHECK(r.exit_code == 0);
    const auto records = lines_of(r.out);
    REQUIRE(records.size() == 1);
    const auto parsed = nlohmann::json::parse(records.front());
    CHECK(parsed["subject"] == "2+i");
    CHECK(parsed["kind"] == "norm_perfect");
    CHECK(parsed["report"]["normSigma"] == 10);
    CHECK(r.err == "{\"examined\":9,\"matched\":1,\"errors\":0}\n");

    const auto text = run_cli("search --bound 10 --parity odd");
    CHECK(text.exit_code == 0);
    const auto text_lines = lines_of(text.out);
    REQUIRE(text_lines.size() == 1);
    CHECK(text_lines.front().find("2+i") == 0);
    CHECK(text_lines.front().find("kind=norm_perfect") != std::string::npos);
    CHECK(text.err == "examined=9 matched=1 errors=0\n");
}

TEST_CASE("search output is deterministic and shard-invariant") {
    const std::string base = "search --bound 4000 --kind both --format json";
    const auto reference = run_cli(base);
    CHECK(reference.exit_code == 0);
    CHECK(run_cli(base).out == reference.out);
    CHECK(run_cli(base + " --shards 7").out == reference.out);

    std::string stitched;
    for (int j = 0; j < 3; ++j) {
        const auto slice =
            run_cli(base + " --shards 3 --shard " + std::to_string(j));
        CHECK(slice.exit_code == 0);
        stitched += slice.out;
    }
    CHECK(stitched == reference.out);
}

TEST_CASE("primes reports the norm-perfect prime hunt") {
    const auto r = run_cli("primes --bound 100 --format json");
    CHECK(r.exit_code == 0);
    const auto records = lines_of(r.out);
    REQUIRE(records.size() == 1);
    const auto parsed = nlohmann::json::parse(records.front());
    CHECK(parsed["subject"] == "2+i");
    CHECK(parsed["kind"] == "norm_perfect_prime");
    CHECK(parsed["report"]["normPerfect"] == true);

    const auto summary = nlohmann::json::parse(r.err);
    CHECK(summary["matched"] == 1);
    CHECK(summary["equationSolutions"] ==
          nlohmann::json::parse("[[0,-1],[0,1],[2,-1],[2,1]]"));
    CHECK(summary["equationPrimes"] == nlohmann::json::parse("[\"2-i\",\"2+i\"]"));
}

TEST_CASE("verify walks every odd norm-perfect value") {
    const auto r = run_cli("verify --bound 1000 --format json");
    CHECK(r.exit_code == 0);
    const auto summary = nlohmann::json::parse(r.err);
    CHECK(summary["failed"] == 0);
    CHECK(summary["checked"] == summary["passed"]);
    CHECK(lines_of(r.out).size() == summary["checked"].get<std::size_t>());
}

TEST_CASE("usage errors exit with status 1") {
    const auto bad_value = run_cli("sigma 2+j");
    CHECK(bad_value.exit_code == 1);
    CHECK(bad_value.err.find("2+j") != std::string::npos);

    CHECK(run_cli("search").exit_code == 1);
    CHECK(run_cli("search --bound 10 --shards 3 --shard 5").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("check 5 --format yaml").exit_code == 1);
    CHECK(run_cli("factor").exit_code == 1);

    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("search") != std::string::npos);
}
