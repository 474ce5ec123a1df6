#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seidel/enumerate.hpp"
#include "seidel/spectra.hpp"

using namespace seidel;

namespace {

SeidelMatrix shuffle(const SeidelMatrix& s, std::mt19937_64& rng)
{
    const Index n = s.order();
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return SeidelMatrix(oracle::permuted(oracle::switched(s.matrix(), rng()), perm));
}

} // namespace

TEST_CASE("class counts agree with two independent orbit counts")
{
    const std::size_t expected[] = {1, 1, 2, 3, 7, 16};
    for (Index n = 1; n <= 6; ++n) {
        INFO("n = " << n);
        const auto classes = enumerate_classes(n);
        CHECK(classes.size() == expected[n - 1]);
        if (n >= 2)
            CHECK(oracle::orbit_count_union_find(n) == expected[n - 1]);
        CHECK(oracle::orbit_count_burnside(n) == expected[n - 1]);
    }
}

TEST_CASE("orbit sizes partition all matrices")
{
    for (Index n = 2; n <= 6; ++n) {
        std::uint64_t total = 0;
        for (const auto& c : enumerate_classes(n)) {
            CHECK((c.isolated_count << (n - 1)) == c.canonical.orbit_size);
            total += c.canonical.orbit_size;
        }
        CHECK(total == std::uint64_t{1} << (n * (n - 1) / 2));
    }
}

TEST_CASE("canonical form agrees with a full orbit scan")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Index n = 2 + trial % 5;
        const IntMatrix m = oracle::random_seidel(n, rng);
        const auto c = canonical_form(SeidelMatrix(m));
        const auto [code, hits] = oracle::brute_canonical(m);
        CHECK(c.code == code);
        CHECK(c.automorphisms == hits);
        CHECK(oracle::column_code(c.representative.matrix()) == code);
    }
}

TEST_CASE("canonical form is an orbit invariant")
{
    std::mt19937_64 rng(9);
    const SeidelMatrix j3 = SeidelMatrix::all_ones(3);
    for (std::uint64_t signs = 0; signs < 8; ++signs)
        CHECK(canonical_form(SeidelMatrix(oracle::switched(j3.matrix(), signs))).representative ==
              canonical_form(j3).representative);
    const SeidelMatrix c5 = seidel_from_graph(cycle_graph(5));
    CHECK(canonical_form(shuffle(c5, rng)).representative == canonical_form(c5).representative);
    const SeidelMatrix s10 = build_fixture_s10();
    const auto base = canonical_form(s10);
    for (int i = 0; i < 3; ++i)
        CHECK(canonical_form(shuffle(s10, rng)).code == base.code);
    CHECK(base.representative != canonical_form(SeidelMatrix::all_ones(10)).representative);
    CHECK(base.spectrum == spectrum(s10));
    const auto petersen = canonical_form(seidel_from_graph(petersen_graph()));
    // the regular two-graph on 10 points has automorphism group Sp(4,2), of order 720
    CHECK(petersen.automorphisms == 720);
    CHECK_THROWS_AS(canonical_form(SeidelMatrix::all_ones(11)), PreconditionError);
}

TEST_CASE("spectra are constant on classes")
{
    std::mt19937_64 rng(13);
    for (const auto& c : enumerate_classes(6)) {
        for (int i = 0; i < 10; ++i)
            CHECK(spectrum(shuffle(c.canonical.representative, rng)) == c.canonical.spectrum);
    }
}

TEST_CASE("three-eigenvalue classes of small order have a regular graph")
{
    for (Index n = 4; n <= 6; ++n)
        for (const auto& c : enumerate_classes(n)) {
            CHECK(c.distinct_eigenvalues == oracle::distinct_count(c.canonical.representative.matrix()));
            CHECK(c.regular_witnesses == oracle::regular_switchings(c.canonical.representative.matrix()).size());
            if (c.distinct_eigenvalues == 3)
                CHECK(c.regular_witnesses > 0);
        }
}

TEST_CASE("order 7 needs the long flag and agrees across threads")
{
    CHECK_THROWS_AS(enumerate_classes(7), PreconditionError);
    CHECK_THROWS_AS(enumerate_classes(8), PreconditionError);
    EnumerateOptions opts;
    opts.allow_long = true;
    opts.count_witnesses = false;
    const auto one = enumerate_classes(7, opts);
    opts.threads = 4;
    const auto many = enumerate_classes(7, opts);
    CHECK(one.size() == 54);
    REQUIRE(many.size() == one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].canonical.code == many[i].canonical.code);
        CHECK(one[i].isolated_count == many[i].isolated_count);
    }
}

TEST_CASE("masks")
{
    CHECK(seidel_from_mask(3, 0) == SeidelMatrix::all_ones(3));
    CHECK(seidel_from_mask(3, 1)(0, 1) == -1);
    CHECK(seidel_from_mask(3, 4)(1, 2) == -1);
    const auto s6 = first_mask(6, [](const SeidelMatrix& s) {
        return s.matrix() * s.matrix() == 5 * IntMatrix::Identity(6, 6);
    });
    REQUIRE(s6);
    CHECK(*s6 == 684);
    CHECK(seidel_from_mask(6, *s6) == build_s6());
    CHECK_FALSE(first_mask(3, [](const SeidelMatrix&) { return false; }));
}

TEST_CASE("row encoding and results file")
{
    const SeidelMatrix s10 = build_fixture_s10();
    CHECK(decode_rows(encode_rows(s10)) == s10);
    CHECK(encode_rows(SeidelMatrix::all_ones(2)) == "0+/+0");
    CHECK_THROWS_AS(decode_rows("0+/+"), InputError);
    CHECK_THROWS_AS(decode_rows("0x/x0"), InputError);
    const auto classes = enumerate_classes(5);
    std::istringstream in(write_results(classes));
    std::string line;
    std::size_t i = 0;
    while (std::getline(in, line)) {
        const auto entry = parse_results_line(line);
        REQUIRE(i < classes.size());
        CHECK(entry.representative == classes[i].canonical.representative);
        CHECK(entry.spectrum == classes[i].canonical.spectrum);
        CHECK(entry.regular_witnesses == classes[i].regular_witnesses);
        ++i;
    }
    CHECK(i == 7);
    CHECK_THROWS_AS(parse_results_line("0+/+0"), InputError);
}
