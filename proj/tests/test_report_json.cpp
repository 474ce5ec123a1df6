#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "seidel/report_json.hpp"
#include "seidel/spectra.hpp"

using namespace seidel;

namespace {

// SEIDEL_UPDATE_GOLDEN=1 rewrites the pinned files instead of comparing.
void check_golden(const std::string& name, const Json& j)
{
    const std::string path = std::string(SEIDEL_GOLDEN_DIR) + "/" + name + ".json";
    const std::string text = j.dump(2) + "\n";
    if (std::getenv("SEIDEL_UPDATE_GOLDEN")) {
        std::ofstream(path) << text;
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in, "missing golden file " << path);
    std::stringstream pinned;
    pinned << in.rdbuf();
    CHECK_MESSAGE(pinned.str() == text, name);
}

template <typename T>
void check_round_trip(const T& value)
{
    const Json j = value;
    const T back = Json::parse(j.dump()).get<T>();
    CHECK(back == value);
}

const std::vector<std::pair<std::string, SeidelMatrix>>& fixtures()
{
    static const std::vector<std::pair<std::string, SeidelMatrix>> f = {
        {"s10", build_fixture_s10()},
        {"s6", build_s6()},
        {"s1", build_sk_family(1)},
        {"k4", seidel_from_graph(complete_graph(4))},
        {"petersen", seidel_from_graph(petersen_graph())},
        {"c5", seidel_from_graph(cycle_graph(5))},
    };
    return f;
}

} // namespace

TEST_CASE("analyze reports")
{
    for (const auto& [name, s] : fixtures()) {
        const AnalyzeReport r = analyze(s);
        check_round_trip(r);
        check_golden("analyze_" + name, r);
    }
    const AnalyzeReport s10 = analyze(build_fixture_s10());
    CHECK(s10.spectrum == "-3^4,surd(-4,-1)^3");
    CHECK(s10.d == 6);
    CHECK(render_analyze(s10).find("d=6") != std::string::npos);
    const AnalyzeReport one = analyze(SeidelMatrix::all_ones(1));
    CHECK_FALSE(one.d);
    check_round_trip(one);
}

TEST_CASE("search reports")
{
    for (const auto& [name, s] : fixtures()) {
        if (name == "s1")
            continue;
        const SearchReport r = search_report(s, find_regular_graphs(s));
        check_round_trip(r);
        check_golden("search_" + name, r);
    }
    const SearchReport s10 = search_report(build_fixture_s10(), {});
    CHECK(render_search(s10) == "0 witnesses (exhaustive over 512 switchings)\n");
}

TEST_CASE("battery reports")
{
    const std::pair<const char*, const char*> cases[] = {
        {"battery_n40", "-5^24,5^6,9^10"},
        {"battery_n61", "-5^43,11^9,12^1,13^8"},
        {"battery_n60", "-5^42,11^15,15^3"},
        {"battery_s10", "-3^4,surd(-4,-1)^3"},
    };
    for (const auto& [name, text] : cases) {
        const FeasibilityReport r = run_battery(parse_spectrum(text));
        check_round_trip(r);
        check_golden(name, r);
    }
}

TEST_CASE("table reports")
{
    const auto t2 = table2_report();
    for (const auto& row : t2)
        check_round_trip(row);
    check_golden("table2", t2);
    const auto t3 = table3_report(14, 23, -5);
    for (const auto& row : t3)
        check_round_trip(row);
    check_golden("table3", t3);
    Table3Row empty;
    check_round_trip(empty);
}

TEST_CASE("malformed JSON is rejected")
{
    CHECK_THROWS(Json::parse(R"({"n": 3})").get<FeasibilityReport>());
    CHECK_THROWS(Json::parse(R"({"id":"x","citation":"","verdict":"maybe","effect":"none","data":{}})")
                     .get<ConditionRecord>());
}
