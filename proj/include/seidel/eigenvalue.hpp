#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "seidel/polynomial.hpp"

namespace seidel {

/// The conjugate pair of real irrational roots of x^2 + p x + q.
struct QuadraticPair
{
    std::int64_t p = 0;
    std::int64_t q = 0;

    std::int64_t discriminant() const { return p * p - 4 * q; }
    /// Sum and product of the two conjugates.
    std::int64_t sum() const { return -p; }
    std::int64_t product() const { return q; }
    IntPolynomial polynomial() const { return IntPolynomial::quadratic(p, q); }

    /// Throws InputError unless the discriminant is positive and not a square.
    void validate() const;

    friend auto operator<=>(const QuadraticPair&, const QuadraticPair&) = default;
};

/// Either a rational integer or a conjugate pair of quadratic integers.
using Eigenvalue = std::variant<std::int64_t, QuadraticPair>;

inline bool is_integer(const Eigenvalue& e) { return std::holds_alternative<std::int64_t>(e); }

/// Number of roots an eigenvalue record stands for (1 or 2).
inline std::int64_t root_count(const Eigenvalue& e) { return is_integer(e) ? 1 : 2; }

bool is_perfect_square(std::int64_t v);
std::int64_t isqrt(std::int64_t v);

/// A real number (a + s*sqrt(d)) / 2 with s in {-1, 0, 1}; covers integers and
/// both roots of every QuadraticPair. Comparisons are exact.
struct QuadraticReal
{
    std::int64_t a = 0;
    int s = 0;
    std::int64_t d = 0;

    static QuadraticReal integer(std::int64_t v) { return {2 * v, 0, 0}; }
    static QuadraticReal smaller_root(const QuadraticPair& pair) { return {-pair.p, -1, pair.discriminant()}; }
    static QuadraticReal larger_root(const QuadraticPair& pair) { return {-pair.p, 1, pair.discriminant()}; }

    double approx() const;
};

/// Sign of x - y.
int compare(const QuadraticReal& x, const QuadraticReal& y);

/// Smallest real number represented by the eigenvalue record.
QuadraticReal smallest_root(const Eigenvalue& e);

std::string to_string(const Eigenvalue& e);

struct SpectrumEntry
{
    Eigenvalue value;
    std::int64_t multiplicity = 0;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of exact eigenvalues. Entries are kept in canonical order
/// (integers ascending, then pairs by their smaller root); a residual factor of
/// degree >= 3 carries whatever could not be split into linear or quadratic factors.
class Spectrum
{
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<SpectrumEntry> entries, IntPolynomial residual = {});

    const std::vector<SpectrumEntry>& entries() const { return m_entries; }
    const IntPolynomial& residual() const { return m_residual; }
    bool has_residual() const { return m_residual.degree() > 0; }

    /// Matrix order: roots counted with multiplicity, plus the residual degree.
    std::int64_t order() const;

    /// Number of distinct eigenvalues counted by the explicit entries (a pair counts twice).
    std::int64_t distinct_explicit() const;

    std::int64_t multiplicity(std::int64_t value) const;
    std::int64_t multiplicity(const QuadraticPair& pair) const;
    std::int64_t multiplicity(const Eigenvalue& e) const;

    std::vector<std::int64_t> integer_eigenvalues() const;

    /// Sum of k-th powers of all explicit roots (k <= 3), exact.
    BigInt power_sum(int k) const;

    IntPolynomial characteristic_polynomial() const;

    /// Spectrum grammar: "v^m" and "surd(p,q)^m" terms joined by commas.
    std::string to_string() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<SpectrumEntry> m_entries;
    IntPolynomial m_residual;
};

/// Parses the spectrum grammar; duplicate eigenvalues, non-positive
/// multiplicities and rational or complex "surd" terms are rejected with the
/// offending character position.
Spectrum parse_spectrum(const std::string& text);

} // namespace seidel
