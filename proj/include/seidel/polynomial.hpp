#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seidel/types.hpp"

namespace seidel {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree. The zero polynomial has no coefficients and
/// degree -1; trailing zero coefficients are always trimmed.
class IntPolynomial
{
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<std::int64_t> coefficients);

    static IntPolynomial constant(const BigInt& c);
    /// x - root
    static IntPolynomial linear(std::int64_t root);
    /// x^2 + p x + q
    static IntPolynomial quadratic(std::int64_t p, std::int64_t q);

    int degree() const { return static_cast<int>(m_coefficients.size()) - 1; }
    bool is_zero() const { return m_coefficients.empty(); }
    bool is_monic() const { return !is_zero() && m_coefficients.back() == 1; }

    /// Coefficient of x^i; zero beyond the degree.
    BigInt coefficient(std::size_t i) const;
    const BigInt& leading() const { return m_coefficients.back(); }
    const std::vector<BigInt>& coefficients() const { return m_coefficients; }

    BigInt evaluate(const BigInt& x) const;
    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned e) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> m_coefficients;
};

/// Quotient of `numerator` by a monic `divisor` if the division is exact.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& numerator, const IntPolynomial& divisor);

/// Largest multiplicity m with divisor^m | p (divisor monic, non-constant);
/// `p` is replaced by the cofactor.
int strip_factor(IntPolynomial& p, const IntPolynomial& divisor);

BigInt content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Greatest common divisor over Q, returned primitive with positive leading coefficient.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

/// Coefficients reduced into [0, m).
IntPolynomial reduce_mod(const IntPolynomial& p, std::int64_t m);

} // namespace seidel
