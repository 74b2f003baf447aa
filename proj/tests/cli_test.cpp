#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(BWMUL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("verify: exhaustive n=4 passes with exit 0")
{
    RunResult r = run_cli("verify --width 4 --mode all --reducer ripple --exhaustive");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("768 cases, 0 failures") != std::string::npos);
    CHECK(r.out.find("kind=exhaustive") != std::string::npos);
}

TEST_CASE("verify: random n=32 passes with exit 0")
{
    RunResult r = run_cli("verify --width 32 --mode all --random 20000 --seed 42 --reducer wallace");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("60000 cases, 0 failures") != std::string::npos);
    CHECK(r.out.find("seed=42") != std::string::npos);
}

TEST_CASE("verify: usage errors exit with 2")
{
    CHECK(run_cli("verify --width 16 --exhaustive").exit_code == 2);     // n too large
    CHECK(run_cli("verify --width 4").exit_code == 2);                   // no sweep selected
    CHECK(run_cli("verify --width 4 --exhaustive --random 10").exit_code == 2);
    CHECK(run_cli("verify --width 1 --exhaustive").exit_code == 2);      // bad width
    CHECK(run_cli("verify --width 4 --reducer booth --exhaustive").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);                         // unknown subcommand
}

TEST_CASE("verify: serial flag gives the same data")
{
    RunResult par = run_cli("verify --width 8 --random 2000 --seed 5 --reducer dadda");
    RunResult ser = run_cli("verify --width 8 --random 2000 --seed 5 --reducer dadda --serial");
    CHECK(par.exit_code == 0);
    CHECK(ser.exit_code == 0);
    CHECK(par.out.substr(0, par.out.find("elapsed")) == ser.out.substr(0, ser.out.find("elapsed")));
}

TEST_CASE("trace: unsigned Table-1 operands")
{
    RunResult r = run_cli("trace --width 4 --a 5 --b 9 --mode unsigned");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1 0 0 1") != std::string::npos);  // first row of the value grid
    CHECK(r.out.find("product=00101101 (=45)") != std::string::npos);
}

TEST_CASE("trace: swapped Table-1 operands still multiply to 45")
{
    RunResult r = run_cli("trace --width 4 --a 9 --b 5 --mode unsigned");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(=45)") != std::string::npos);
}

TEST_CASE("verify: mode filter narrows the sweep")
{
    RunResult r = run_cli("verify --width 4 --mode signed --reducer dadda --exhaustive");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("256 cases, 0 failures") != std::string::npos);
}

TEST_CASE("trace: signed minus-one squared")
{
    RunResult r = run_cli("trace --width 4 --a -1 --b -1 --mode signed");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("product=00000001 (=1)") != std::string::npos);
}

TEST_CASE("trace: mixed shows the doubled row-0 cell")
{
    RunResult r = run_cli("trace --width 4 --a 15 --b -1 --mode mixed");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("~a0b3  a0b3") != std::string::npos);
    CHECK(r.out.find("product=11110001 (=-15)") != std::string::npos);
}

TEST_CASE("trace: out-of-range operands exit with 2")
{
    CHECK(run_cli("trace --width 4 --a 16 --b 1 --mode unsigned").exit_code == 2);
    CHECK(run_cli("trace --width 4 --a -1 --b 1 --mode unsigned").exit_code == 2);
    CHECK(run_cli("trace --width 4 --a 1 --b -9 --mode signed").exit_code == 2);
    CHECK(run_cli("trace --width 4 --a -2 --b -1 --mode mixed").exit_code == 2); // a is unsigned
}

TEST_CASE("trace: hex operands are raw bits")
{
    RunResult r = run_cli("trace --width 4 --a 0xf --b 0xf --mode signed");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("a=1111 (-1, multiplier)") != std::string::npos);
    CHECK(r.out.find("product=00000001 (=1)") != std::string::npos);
}

TEST_CASE("trace: reduction trace on request")
{
    RunResult r = run_cli("trace --width 8 --a 100 --b 200 --mode unsigned --show-reduction");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("csa_count=") != std::string::npos);
}

TEST_CASE("emit: gate list to stdout, byte-identical across runs")
{
    RunResult a = run_cli("emit --width 2 --format gate-list");
    RunResult b = run_cli("emit --width 2 --format gate-list");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FA p2 cpa_2_c pp_0_2 pp_1_2 cpa_1_c") != std::string::npos);
}

TEST_CASE("emit: structural hdl to a file")
{
    std::string path = "/tmp/bwmul_cli_test_n4.v";
    std::remove(path.c_str());
    RunResult r = run_cli("emit --width 4 --reducer wallace --format structural-hdl --out " + path);
    CHECK(r.exit_code == 0);
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char head[64] = {0};
    REQUIRE(fread(head, 1, 32, f) > 0);
    std::fclose(f);
    CHECK(std::string(head).find("// scheme=unified n=4") == 0);
    std::remove(path.c_str());
}

TEST_CASE("emit: expand flag removes HA/FA cells")
{
    RunResult r = run_cli("emit --width 2 --format gate-list --expand");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\nHA ") == std::string::npos);
    CHECK(r.out.find("\nFA ") == std::string::npos);
    CHECK(r.out.find("expanded=1") != std::string::npos);
}

TEST_CASE("report: default model at n=32 lands near a third")
{
    RunResult r = run_cli("report --width 32 --reducer wallace");
    CHECK(r.exit_code == 0);
    auto pos = r.out.find("ratio=");
    REQUIRE(pos != std::string::npos);
    double ratio = std::stod(r.out.substr(pos + 6));
    CHECK(ratio >= 2.5);
    CHECK(ratio <= 3.5);
    CHECK(r.out.find("area proxy only") != std::string::npos);
}

TEST_CASE("report: n=2 stays well formed and cost model files are honored")
{
    CHECK(run_cli("report --width 2").exit_code == 0);

    std::string path = "/tmp/bwmul_cli_test_costs.txt";
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("xor2=1\n", f);
    std::fclose(f);
    RunResult r = run_cli("report --width 32 --cost-model " + path);
    CHECK(r.exit_code == 0);
    auto pos = r.out.find("ratio=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.out.substr(pos + 6)) > 2.0);
    std::remove(path.c_str());

    CHECK(run_cli("report --width 32 --cost-model /nonexistent.txt").exit_code == 2);
}

TEST_CASE("report: json side file")
{
    std::string path = "/tmp/bwmul_cli_test_report.json";
    std::remove(path.c_str());
    RunResult r = run_cli("report --width 8 --out " + path);
    CHECK(r.exit_code == 0);
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string json;
    char buf[512];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0)
        json.append(buf, got);
    std::fclose(f);
    CHECK(json.find("\"ratio\"") != std::string::npos);
    std::remove(path.c_str());
}
