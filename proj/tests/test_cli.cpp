#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "seidel/enumerate.hpp"
#include "seidel/report_json.hpp"

using namespace seidel;

namespace {

struct Run
{
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string command = std::string(SEIDEL_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        r.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string scratch(const std::string& name = "")
{
    static const bool ready = [] {
        std::filesystem::remove_all(SEIDEL_SCRATCH);
        std::filesystem::create_directories(SEIDEL_SCRATCH);
        const Run r = run(std::string("fixtures --emit ") + SEIDEL_SCRATCH);
        return r.code == 0;
    }();
    REQUIRE(ready);
    return std::string(SEIDEL_SCRATCH) + "/" + name;
}

std::size_t count_lines(const std::string& text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

} // namespace

TEST_CASE("fixtures are written")
{
    for (const char* name : {"s10.smat", "s6.smat", "s1.smat", "k4.smat", "petersen.smat", "c5.smat", "c5.edges"})
        CHECK(std::filesystem::exists(scratch(name)));
}

TEST_CASE("analyze")
{
    const Run s10 = run("analyze --input " + scratch("s10.smat"));
    CHECK(s10.code == 0);
    CHECK(s10.out.find("spectrum: -3^4,surd(-4,-1)^3") != std::string::npos);
    CHECK(s10.out.find("d=6") != std::string::npos);

    const Run c5 = run("analyze --format edges --input " + scratch("c5.edges"));
    CHECK(c5.code == 0);
    CHECK(c5.out.find("spectrum: 0^1,surd(0,-5)^2") != std::string::npos);

    const Run json = run("analyze --json --input " + scratch("s10.smat"));
    CHECK(json.code == 0);
    const auto report = Json::parse(json.out).get<AnalyzeReport>();
    CHECK(report == analyze(build_fixture_s10()));

    std::ofstream(scratch("bad.smat")) << "3\n0 1 1\n1 0 2\n1 1 0\n";
    CHECK(run("analyze --input " + scratch("bad.smat")).code == 2);
    CHECK(run("analyze --input " + scratch("missing.smat")).code == 2);
    CHECK(run("analyze --format csv --input " + scratch("s10.smat")).code == 2);
}

TEST_CASE("search-regular")
{
    const Run s10 = run("search-regular --input " + scratch("s10.smat"));
    CHECK(s10.code == 0);
    CHECK(s10.out == "0 witnesses (exhaustive over 512 switchings)\n");
    const Run c5 = run("search-regular --json --input " + scratch("c5.smat"));
    CHECK(c5.code == 0);
    const auto report = Json::parse(c5.out).get<SearchReport>();
    CHECK(report.switchings == "16");
    CHECK_FALSE(report.witnesses.empty());
    CHECK(run("search-regular --budget 5 --input " + scratch("s1.smat")).code == 3);
    const Run threaded = run("search-regular --threads 3 --input " + scratch("petersen.smat"));
    CHECK(threaded.out == run("search-regular --threads 1 --input " + scratch("petersen.smat")).out);
}

TEST_CASE("battery")
{
    const Run n61 = run("battery --spectrum -5^43,11^9,12^1,13^8");
    CHECK(n61.code == 0);
    CHECK(n61.out.find("overall: Infeasible") != std::string::npos);
    CHECK(n61.out.find("trace-cube") != std::string::npos);
    const Run n60 = run("battery --json --spectrum -5^42,11^15,15^3");
    CHECK(n60.code == 0);
    const auto report = Json::parse(n60.out).get<FeasibilityReport>();
    CHECK(report.overall == Overall::RegularForced);
    CHECK(run("battery --spectrum garbage").code == 2);
    CHECK(run("battery --spectrum -5^42 --facts " + scratch("missing.txt")).code == 2);
    CHECK(run(std::string("battery --spectrum -5^32,9^16,16^1 --facts ") + SEIDEL_DATA_DIR + "/facts.txt").out.find(
              "overall: Infeasible") != std::string::npos);
}

TEST_CASE("tables")
{
    const Run t3 = run("table3 --d-range 14..23 --lambda0 -5");
    CHECK(t3.code == 0);
    CHECK(count_lines(t3.out) == 11);
    CHECK(t3.out.find("-5^43,11^9,12^1,13^8") != std::string::npos);
    const Run t3json = run("table3 --json --d-range 14..23 --lambda0 -5");
    const auto rows = Json::parse(t3json.out).get<std::vector<Table3Row>>();
    CHECK(rows.size() == 10);
    CHECK(run("table3 --d-range 23..14").code == 2);
    CHECK(run("table3 --d-range x").code == 2);
    const Run t2 = run("table2");
    CHECK(t2.code == 0);
    CHECK(count_lines(t2.out) == 16);
    const auto t2rows = Json::parse(run("table2 --json").out).get<std::vector<Table2Row>>();
    CHECK(t2rows.size() == 15);
}

TEST_CASE("enumerate")
{
    const Run n5 = run("enumerate --n 5");
    CHECK(n5.code == 0);
    CHECK(n5.out.rfind("7 classes\n", 0) == 0);
    CHECK(run("enumerate --n 7").code == 2);
    const std::string out = scratch("classes.txt");
    std::filesystem::remove(out);
    CHECK(run("enumerate --n 4 --output " + out).code == 0);
    std::ifstream in(out);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        CHECK_NOTHROW(parse_results_line(line));
        ++lines;
    }
    CHECK(lines == 3);
}

TEST_CASE("usage errors")
{
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("analyze").code == 2);
    CHECK(run("--help").code == 0);
}
