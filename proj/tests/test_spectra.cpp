#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seidel/spectra.hpp"

using namespace seidel;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (auto v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("characteristic polynomials")
{
    CHECK(char_poly(mat({{0, 1}, {1, 0}})) == IntPolynomial{-1, 0, 1});
    CHECK(char_poly(SeidelMatrix::all_ones(3)) == IntPolynomial{-2, -3, 0, 1});
    CHECK(char_poly(build_fixture_s10()) ==
          IntPolynomial::linear(-3).pow(4) * IntPolynomial::quadratic(-4, -1).pow(3));
    CHECK(char_poly(build_s6()) == IntPolynomial::quadratic(0, -5).pow(3));
    CHECK(char_poly(IntMatrix(IntMatrix::Zero(3, 3))) == IntPolynomial{0, 0, 0, 1});
}

TEST_CASE("char_poly agrees with a floating-point eigensolver")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = 2 + trial % 9;
        const IntMatrix m = oracle::random_symmetric(n, -4, 4, rng);
        const Eigen::VectorXd ev = oracle::eigenvalues(m);
        const IntPolynomial chi = char_poly(m);
        // chi(x) = prod (x - ev_i): compare the constant and the x^(n-1) coefficient
        double prod = 1;
        for (Index i = 0; i < n; ++i)
            prod *= -ev(i);
        CHECK(chi.coefficient(0).convert_to<double>() == doctest::Approx(prod).epsilon(1e-6));
        CHECK(chi.coefficient(static_cast<std::size_t>(n - 1)).convert_to<double>() ==
              doctest::Approx(-ev.sum()).epsilon(1e-9));
    }
}

TEST_CASE("exact spectra")
{
    const Spectrum s10 = spectrum(build_fixture_s10());
    CHECK(s10.to_string() == "-3^4,surd(-4,-1)^3");
    CHECK_FALSE(s10.has_residual());
    CHECK(spectrum(seidel_from_graph(cycle_graph(5))).to_string() == "0^1,surd(0,-5)^2");
    CHECK(spectrum(SeidelMatrix::all_ones(4)).to_string() == "-1^3,3^1");
    CHECK(distinct_eigenvalue_count(build_fixture_s10()) == 3);
    CHECK(distinct_eigenvalue_count(SeidelMatrix::all_ones(4)) == 2);
    CHECK(distinct_eigenvalue_count(build_sk_family(1)) == 3);
}

TEST_CASE("exact spectra of random Seidel matrices match floating point")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = 2 + trial % 9;
        const IntMatrix m = oracle::random_seidel(n, rng);
        const Spectrum s = spectrum(SeidelMatrix(m));
        CHECK(s.order() == n);
        if (s.has_residual())
            continue;
        const auto exact = oracle::expand(s);
        const Eigen::VectorXd ev = oracle::eigenvalues(m);
        REQUIRE(exact.size() == static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i)
            CHECK(exact[static_cast<std::size_t>(i)] == doctest::Approx(ev(i)).epsilon(1e-7));
        CHECK(distinct_eigenvalue_count(SeidelMatrix(m)) == oracle::distinct_count(m));
    }
}

TEST_CASE("positive semidefinite test")
{
    CHECK(is_psd(IntMatrix(IntMatrix::Ones(3, 3))));
    CHECK(is_psd(mat({{6, 2}, {2, 6}})));
    CHECK_FALSE(is_psd(mat({{0, 1}, {1, 0}})));
    CHECK(is_psd(IntMatrix(IntMatrix::Zero(2, 2))));
    CHECK_THROWS_AS(is_psd(mat({{0, 1}, {2, 0}})), PreconditionError);
    CHECK(symmetric_rank(IntMatrix(IntMatrix::Ones(4, 4))) == 1);
    CHECK(symmetric_rank(mat({{6, 2}, {2, 6}})) == 2);
}

TEST_CASE("mod 2 power congruences")
{
    CHECK(mod2_power_check(SeidelMatrix::all_ones(3), 2));
    CHECK(mod2_power_check(build_fixture_s10(), 3));
    const SeidelMatrix c5 = seidel_from_graph(cycle_graph(5));
    const SeidelMatrix switched = apply_switching(c5, SwitchingVector({1, -1, 1, -1, -1}));
    for (int k = 1; k <= 5; ++k)
        CHECK(mod2_power_check(switched, k));
}

TEST_CASE("mod 2 characteristic polynomial class")
{
    const auto j3 = mod2_charpoly_class(SeidelMatrix::all_ones(3));
    CHECK(j3.parity == Mod2Class::Parity::Odd);
    CHECK(j3.matches);
    const auto s10 = mod2_charpoly_class(build_fixture_s10());
    CHECK(s10.parity == Mod2Class::Parity::Even);
    CHECK(s10.matches);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const auto c = mod2_charpoly_class(SeidelMatrix(oracle::from_mask(4, mask)));
        CHECK(c.parity == Mod2Class::Parity::Even);
        CHECK(c.matches);
    }
    // x^2 + 1 is (x+1)^2 mod 2, x^2 + x is not
    CHECK(mod2_charpoly_matches(IntPolynomial{1, 0, 1}));
    CHECK_FALSE(mod2_charpoly_matches(IntPolynomial{0, 1, 1}));
}

TEST_CASE("mod 4 square on Euler graphs")
{
    CHECK(mod4_square_check(seidel_from_graph(cycle_graph(5))));
    CHECK(mod4_square_check(SeidelMatrix::all_ones(5)));
    const SeidelMatrix s10 = build_fixture_s10();
    const auto e = euler_switch(s10);
    REQUIRE(e);
    CHECK(mod4_square_check(apply_switching(s10, *e)));
    // K4 has odd degrees
    CHECK_THROWS_AS(mod4_square_check(seidel_from_graph(complete_graph(4))), PreconditionError);
}

TEST_CASE("factor_spectrum leaves irreducible cubics in the residual")
{
    // x^3 - 3x + 1 has three irrational real roots
    const IntPolynomial cubic{1, -3, 0, 1};
    const Spectrum s = factor_spectrum(cubic * IntPolynomial::linear(2), 4);
    CHECK(s.has_residual());
    CHECK(s.residual() == cubic);
    CHECK(s.multiplicity(std::int64_t{2}) == 1);
    CHECK(s.order() == 4);
}
