#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seidel/io.hpp"
#include "seidel/spectra.hpp"

using namespace seidel;

TEST_CASE("Seidel matrix invariants")
{
    IntMatrix bad = IntMatrix::Zero(2, 2);
    CHECK_THROWS_AS(SeidelMatrix{bad}, InputError);
    bad << 0, 1, -1, 0;
    CHECK_THROWS_AS(SeidelMatrix{bad}, InputError);
    bad << 1, 1, 1, 0;
    CHECK_THROWS_AS(SeidelMatrix{bad}, InputError);
    CHECK_NOTHROW(SeidelMatrix::all_ones(1));
    CHECK(SeidelMatrix::all_ones(1).order() == 1);
}

TEST_CASE("graph to Seidel and back")
{
    const SeidelMatrix empty3 = seidel_from_graph(Graph(3));
    CHECK(empty3 == SeidelMatrix::all_ones(3));
    const SeidelMatrix k2 = seidel_from_graph(complete_graph(2));
    CHECK(k2(0, 1) == -1);
    CHECK(graph_from_seidel(SeidelMatrix::all_ones(4)).edge_count() == 0);
    const SeidelMatrix minus(IntMatrix(-(SeidelMatrix::all_ones(4).matrix())));
    CHECK(graph_from_seidel(minus) == complete_graph(4));
    const Graph g0 = graph_from_seidel(build_fixture_s10());
    CHECK(g0.degree(0) == 0);
    CHECK(petersen_graph().regular_valency() == 3);
    CHECK(cycle_graph(5).regular_valency() == 2);
}

TEST_CASE("switching")
{
    const SeidelMatrix s = SeidelMatrix::all_ones(2);
    const SeidelMatrix t = apply_switching(s, SwitchingVector({1, -1}));
    CHECK(t(0, 1) == -1);
    CHECK(apply_switching(build_fixture_s10(), SwitchingVector::identity(10)) == build_fixture_s10());
    std::mt19937_64 rng(3);
    const SeidelMatrix s10 = build_fixture_s10();
    for (int i = 0; i < 10; ++i) {
        const auto v = SwitchingVector::from_mask(10, rng() & 511u);
        CHECK(char_poly(apply_switching(s10, v)) == char_poly(s10));
    }
    CHECK_THROWS_AS(SwitchingVector({-1, 1}), InputError);
    CHECK(SwitchingVector::normalized({-1, 1, -1}) == SwitchingVector({1, -1, 1}));
    CHECK(SwitchingVector::parse("+-+").to_string() == "+-+");
    CHECK(SwitchingVector::from_mask(3, 2).to_string() == "++-");
    CHECK((SwitchingVector::parse("+-+") * SwitchingVector::parse("+--")) == SwitchingVector::parse("++-"));
    CHECK(SwitchingVector::parse("++-") < SwitchingVector::parse("+-+"));
}

TEST_CASE("line parameters")
{
    const auto j3 = line_params(SeidelMatrix::all_ones(3));
    CHECK(j3.n == 3);
    CHECK(j3.d == 1);
    CHECK(j3.alpha_string() == "1");
    const auto s10 = line_params(build_fixture_s10());
    CHECK(s10.d == 6);
    CHECK(s10.alpha_string() == "1/3");
    const auto c5 = line_params(seidel_from_graph(cycle_graph(5)));
    CHECK(c5.d == 3);
    CHECK(c5.alpha_string() == "1/sqrt(5)");
    CHECK_THROWS_AS(line_params(SeidelMatrix::all_ones(1)), PreconditionError);
}

TEST_CASE("Euler switching")
{
    const auto c5 = euler_switch(seidel_from_graph(cycle_graph(5)));
    REQUIRE(c5);
    CHECK(c5->is_identity());
    const auto j5 = euler_switch(SeidelMatrix::all_ones(5));
    REQUIRE(j5);
    CHECK(j5->is_identity());
    const SeidelMatrix s10 = build_fixture_s10();
    const auto e = euler_switch(s10);
    REQUIRE(e);
    const Graph g = graph_from_seidel(s10, *e);
    for (Index v = 0; v < 10; ++v)
        CHECK(g.degree(v) % 2 == 0);
    CHECK(oracle::has_euler_switching(s10.matrix()));
}

TEST_CASE("Euler switching agrees with exhaustive search")
{
    for (Index n = 2; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; mask += 1 + mask % 7) {
            const IntMatrix m = oracle::from_mask(n, mask);
            const auto e = euler_switch(SeidelMatrix(m));
            CHECK(e.has_value() == oracle::has_euler_switching(m));
            if (e) {
                const Graph g = graph_from_seidel(SeidelMatrix(m), *e);
                for (Index v = 0; v < n; ++v)
                    CHECK(g.degree(v) % 2 == 0);
            }
        }
    }
}

TEST_CASE("fixtures")
{
    const SeidelMatrix s10 = build_fixture_s10();
    for (Index j = 1; j < 10; ++j)
        CHECK(s10(0, j) == 1);
    const SeidelMatrix s6 = build_s6();
    CHECK(s6.matrix().trace() == 0);
    CHECK((s6.matrix() * s6.matrix()).trace() == 30);
    CHECK((s6.matrix() * s6.matrix()) == 5 * IntMatrix::Identity(6, 6));
    CHECK(build_sk_family(1).order() == 18);
    CHECK(build_sk_family(2).order() == 30);
    const IntMatrix s1 = build_sk_family(1).matrix();
    CHECK((s1 * s1).trace() == 306);
}

TEST_CASE("the 6x6 fixture is the first hit of the upper-triangle search")
{
    std::uint64_t found = 0;
    for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
        const IntMatrix m = oracle::from_mask(6, mask);
        if (m * m == 5 * IntMatrix::Identity(6, 6)) {
            found = mask;
            break;
        }
    }
    CHECK(found == 684);
    CHECK(oracle::from_mask(6, found) == build_s6().matrix());
}

TEST_CASE("Kronecker product")
{
    IntMatrix a(2, 2);
    a << 1, 2, 3, 4;
    const IntMatrix k = kronecker(a, IntMatrix(IntMatrix::Ones(2, 2)));
    CHECK(k.rows() == 4);
    CHECK(k(3, 3) == 4);
    CHECK(k(0, 3) == 2);
}

TEST_CASE("smat round trip")
{
    const SeidelMatrix s10 = build_fixture_s10();
    CHECK(parse_smat(to_smat(s10)) == s10);
    CHECK(parse_smat("2\n0 -1\n-1 0\n")(0, 1) == -1);
}

TEST_CASE("smat diagnostics")
{
    auto message = [](const std::string& text) {
        try {
            parse_smat(text);
        }
        catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("2\n0 2\n1 0\n").find("line 2") != std::string::npos);
    CHECK(message("2\n0 1\n-1 0\n").find("symmetric") != std::string::npos);
    CHECK_FALSE(message("2\n1 1\n1 0\n").empty());
    CHECK_FALSE(message("3\n0 1 1\n1 0 1\n").empty());
    CHECK_FALSE(message("x\n").empty());
    CHECK_FALSE(message("2\n0 1\n1 0\n5\n").empty());
}

TEST_CASE("edges round trip and diagnostics")
{
    const Graph p = petersen_graph();
    CHECK(parse_edges(to_edges(p)) == p);
    CHECK(parse_edges("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n") == cycle_graph(5));
    CHECK_THROWS_AS(parse_edges("3 1\n0 0\n"), InputError);
    CHECK_THROWS_AS(parse_edges("3 2\n0 1\n1 0\n"), InputError);
    CHECK_THROWS_AS(parse_edges("3 1\n0 3\n"), InputError);
    CHECK_THROWS_AS(parse_edges("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(read_smat_file("/nonexistent/file.smat"), InputError);
}
