#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "seidel/eigenvalue.hpp"

namespace seidel {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
std::int64_t floor(const Rational& r);

struct RelativeBoundResult
{
    std::int64_t d = 0;
    std::int64_t lambda0 = 0;
    /// d (lambda0^2 - 1) / (lambda0^2 - d)
    Rational bound;
    std::int64_t floor_bound = 0;
    /// lambda0^2 >= d + 2, where the bound is a theorem for Seidel matrices.
    bool tight_applicable = false;
    /// {lambda0^(n-d), (-lambda0 (n-d)/d)^d} when the bound and that eigenvalue are integers.
    std::optional<Spectrum> equality_spectrum;
};

/// PreconditionError unless lambda0 < 0 and lambda0^2 > d >= 1.
RelativeBoundResult relative_bound(std::int64_t d, std::int64_t lambda0);

struct RelativeBoundGap
{
    std::int64_t d = 0;
    std::int64_t lambda0 = 0;
    std::int64_t n = 0;
    std::int64_t mu = 0;
    /// n = bound - t
    Rational t;
    /// Lower bound on the multiplicity of mu.
    std::int64_t rhs = 0;
    /// Spectrum {lambda0^(n-d), (mu-1)^w, mu^rhs, (mu+1)^(d-rhs-w)} when it is well formed.
    std::optional<Spectrum> equality_spectrum;
    std::optional<std::int64_t> w;
};

/// Lower bound on dim ker(S - mu I) for a Seidel matrix of order n whose smallest
/// eigenvalue lambda0 has multiplicity n - d. Evaluated through t and through the
/// power sums; the two must agree and be integral.
RelativeBoundGap multiplicity_lower_bound(std::int64_t d, std::int64_t lambda0, std::int64_t n, std::int64_t mu);

struct ForcedSpectrum
{
    enum class Kind {
        /// The multiplicity bound is attained: the spectrum is determined.
        Forced,
        /// The bound exceeds what an even eigenvalue may have: no Seidel matrix.
        Nonexistent,
        NotForced,
    };
    enum class Source { OddOrder, EvenOrder };

    Kind kind = Kind::NotForced;
    Source source = Source::OddOrder;
    std::int64_t d = 0;
    std::int64_t lambda0 = 0;
    std::int64_t n = 0;
    std::int64_t mu = 0;
    /// -lambda0 (n-d)/d was an odd integer; mu was taken toward zero.
    bool tie = false;
    std::int64_t rhs = 0;
    /// Largest multiplicity an even eigenvalue may have (1 for odd n, 0 for even n).
    std::int64_t allowed = 0;
    std::int64_t w = 0;
    /// Equality spectrum with multiplicity rhs for mu (set for Forced and Nonexistent).
    std::optional<Spectrum> spectrum;
};

std::string to_string(ForcedSpectrum::Kind kind);
std::string to_string(ForcedSpectrum::Source source);

/// n = floor of the relative bound, mu = closest even integer to -lambda0 (n-d)/d.
/// An even mu has multiplicity at most `allowed`, so rhs = allowed forces equality
/// and rhs > allowed rules the order out.
ForcedSpectrum forced_spectrum_even_mu(std::int64_t d, std::int64_t lambda0);

/// sigma ((n-1) c2 + c0), a lower bound on each diagonal entry of sigma S^3
/// when sigma p(S) is PSD for p(x) = x^3 - c2 x^2 + c1 x - c0.
std::int64_t diag_lower_bound(std::int64_t n, std::int64_t c2, std::int64_t c1, std::int64_t c0, int sigma);

struct TraceCubeResult
{
    std::int64_t theta0 = 0;
    int sigma = 1;
    BigInt lhs;
    BigInt rhs;
    /// sum m_i theta_i^3 over the three other eigenvalues
    BigInt cube_sum;
    /// (n-1)(theta1+theta2+theta3) + theta1 theta2 theta3, odd for a real matrix
    std::int64_t parity_value = 0;
    bool holds = false;
};

/// Odd order, four distinct integer eigenvalues, one of them simple and even:
/// sigma theta0^3 >= n + sigma(n(n-1) e1 + n e3 - sum m_i theta_i^3).
/// PreconditionError when the shape does not match.
TraceCubeResult trace_cube_test(const Spectrum& spectrum);

} // namespace seidel
