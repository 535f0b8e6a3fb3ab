#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string path = "/tmp/wreath_cli_out.txt";
    std::string command = std::string(WREATH_CLI_PATH) + " " + args + " > " + path + " 2>&1";
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

} // namespace

TEST_CASE("rsk subcommand") {
    RunResult ok = run_cli("rsk -r 2 \"[-1,2]\"");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("P_0: [2]") != std::string::npos);
    CHECK(ok.output.find("P_1: [1]") != std::string::npos);
    CHECK(ok.output.find("shape: ((1),(1))") != std::string::npos);

    RunResult single = run_cli("rsk -r 1 \"[1,2,3]\"");
    CHECK(single.exit_code == 0);
    CHECK(single.output.find("P_0: [1,2,3]") != std::string::npos);

    RunResult bad = run_cli("rsk -r 2 \"[1,1]\"");
    CHECK(bad.exit_code == 1);

    RunResult usage = run_cli("rsk");
    CHECK(usage.exit_code == 1);
}

TEST_CASE("classes subcommand") {
    RunResult b6 = run_cli("classes -r 2 -n 6");
    CHECK(b6.exit_code == 0);
    CHECK(b6.output.find("f=1,1;p=1,1  size=180") != std::string::npos);

    RunResult empty = run_cli("classes -r 3 -n 0");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("classes: 1") != std::string::npos);

    RunResult b4 = run_cli("classes -r 2 -n 4 --format json");
    CHECK(b4.exit_code == 0);
    CHECK(b4.output.find("\"involutions\": 76") != std::string::npos);
}

TEST_CASE("decompose subcommand") {
    RunResult one = run_cli("decompose -r 2 -n 3 --class \"f=3,0;p=0,0\" --format json");
    CHECK(one.exit_code == 0);
    CHECK(one.output.find("\"verified\": true") != std::string::npos);

    RunResult all = run_cli("decompose -r 2 -n 3 --all");
    CHECK(all.exit_code == 0);

    RunResult malformed = run_cli("decompose -r 2 -n 3 --class \"f=1,0;p=0,0\"");
    CHECK(malformed.exit_code == 1);

    RunResult missing = run_cli("decompose -r 2 -n 3");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("chartable subcommand with cache") {
    std::filesystem::remove_all("/tmp/wreath_cli_cache");
    RunResult miss = run_cli("chartable -r 2 -n 2 --format json --cache-dir /tmp/wreath_cli_cache");
    CHECK(miss.exit_code == 0);
    CHECK(std::filesystem::exists("/tmp/wreath_cli_cache/chartable_r2_n2.json"));
    RunResult hit = run_cli("chartable -r 2 -n 2 --format json --cache-dir /tmp/wreath_cli_cache");
    CHECK(hit.exit_code == 0);
    CHECK(miss.output == hit.output);

    RunResult table = run_cli("chartable -r 2 -n 2");
    CHECK(table.exit_code == 0);
    // degrees down the identity column: 1, 1, 2, 1, 1
    CHECK(table.output.find("((1),(1)):  0  2") != std::string::npos);
}

TEST_CASE("deterministic output") {
    RunResult a = run_cli("classes -r 2 -n 4 --format json");
    RunResult b = run_cli("classes -r 2 -n 4 --format json");
    CHECK(a.output == b.output);
    RunResult c = run_cli("decompose -r 3 -n 2 --all --format json");
    RunResult d = run_cli("decompose -r 3 -n 2 --all --format json");
    CHECK(c.output == d.output);
}

TEST_CASE("verify subcommand") {
    RunResult gelfand = run_cli("verify -r 2 -n 3 --suite gelfand");
    CHECK(gelfand.exit_code == 0);
    CHECK(gelfand.output.find("gelfand: pass") != std::string::npos);

    RunResult all = run_cli("verify -r 2 -n 2 --suite all");
    CHECK(all.exit_code == 0);

    RunResult unknown = run_cli("verify -r 2 -n 2 --suite nonsense");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("limit exceeded exits with the resource code") {
    RunResult limited = run_cli("decompose -r 2 -n 4 --all --limit 10");
    CHECK(limited.exit_code == 3);
}
