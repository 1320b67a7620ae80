#include "daisy/construct.hpp"
#include "daisy/family.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace {

struct CliRun {
    int exit_code;
    std::string output; // stdout only
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(DAISY_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string temp_path(const std::string& name) {
    return std::string(DAISY_TEST_TMPDIR) + "/" + name;
}

} // namespace

TEST_CASE("construct then verify round-trips with exit 0") {
    std::string fam = temp_path("bases.txt");
    CliRun c = run_cli("construct --independent -q 2 -r 3 -m 0 -o " + fam);
    CHECK(c.exit_code == 0);
    daisy::UniformFamily parsed = daisy::read_family_file(fam);
    CHECK(parsed.size() == 28);

    CliRun v = run_cli("verify --daisy-free -s 2 -t 4 --input " + fam);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("identical configs produce byte-identical family files") {
    std::string a = temp_path("a.txt"), b = temp_path("b.txt");
    CHECK(run_cli("construct --independent -q 3 -r 2 -m 0 -o " + a).exit_code == 0);
    CHECK(run_cli("construct --independent -q 3 -r 2 -m 0 -o " + b).exit_code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
}

TEST_CASE("verify on a complete layer fails with exit 2 and a witness") {
    std::string path = temp_path("complete.txt");
    daisy::write_family_file(path, daisy::UniformFamily::complete(7, 3));
    CliRun v = run_cli("verify --daisy-free -s 2 -t 4 --input " + path);
    CHECK(v.exit_code == 2);
    CHECK(v.output.find("\"witness\"") != std::string::npos);
    CHECK(v.output.find("\"stem\"") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("verify --daisy-free -s 2 -t 4").exit_code == 1); // no input
    CHECK(run_cli("construct").exit_code == 1);
    CHECK(run_cli("no-such-subcommand").exit_code == 1);
    CHECK(run_cli("bounds --kind no-such-kind").exit_code == 1);
}

TEST_CASE("mutated family files are rejected with exit 1, never a crash") {
    std::string path = temp_path("fuzz.txt");
    std::ostringstream base;
    daisy::write_family(base, daisy::fano_complement());
    std::mt19937_64 rng(2025);
    int rejected = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::string text = base.str();
        text[rng() % text.size()] = static_cast<char>(rng() % 128);
        std::ofstream(path) << text;
        CliRun v = run_cli("verify --daisy-free -s 2 -t 4 --input " + path);
        CHECK((v.exit_code == 0 || v.exit_code == 1 || v.exit_code == 2));
        if (v.exit_code == 1) ++rejected;
    }
    CHECK(rejected > 20);
}

TEST_CASE("cube construct and verify") {
    std::string path = temp_path("layers.cube");
    CHECK(run_cli("cube --construct layers -n 9 --period 3 --offset 0 -o " + path)
              .exit_code == 0);
    CliRun hit = run_cli("cube --verify hit -d 2 --mode exhaustive --input " + path);
    CHECK(hit.exit_code == 0);

    std::string five = temp_path("five.cube");
    CHECK(run_cli("construct --cube five-point -n 7 -o " + five).exit_code == 0);
    CliRun count = run_cli("cube --verify count -d 4 --max 6 --mode exhaustive --input " +
                           five);
    CHECK(count.exit_code == 0);
    CliRun tight = run_cli("cube --verify count -d 4 --max 5 --mode exhaustive --input " +
                           five);
    CHECK(tight.exit_code == 2); // some subcube reaches 5
}

TEST_CASE("search exit codes distinguish proof from budget exhaustion") {
    CliRun proved = run_cli("search --max-daisy-free -n 5 -r 3 -s 2 -t 4");
    CHECK(proved.exit_code == 0);
    CHECK(proved.output.find("\"best_size\": 8") != std::string::npos);
    CliRun starved =
        run_cli("search --max-daisy-free -n 6 -r 3 -s 2 -t 4 --budget-nodes 5");
    CHECK(starved.exit_code == 3);
}

TEST_CASE("swise certificate, bounds table and cube report") {
    CliRun sw = run_cli("swise -q 3 -d 2 -s 2");
    CHECK(sw.exit_code == 0);
    CHECK(sw.output.find("\"size\": 4") != std::string::npos);
    CliRun bounds = run_cli("bounds --kind euler --from 2 --to 9");
    CHECK(bounds.exit_code == 0);
    CHECK(bounds.output.rfind("name,params,value,rational,citation\n", 0) == 0);
    CliRun report = run_cli("cube --report -d 9");
    CHECK(report.exit_code == 0);
    CHECK(report.output.find("\"passes_suff\": true") != std::string::npos);
}
