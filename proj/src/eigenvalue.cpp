#include "seidel/eigenvalue.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace seidel {

bool is_perfect_square(std::int64_t v)
{
    if (v < 0)
        return false;
    const std::int64_t r = isqrt(v);
    return r * r == v;
}

std::int64_t isqrt(std::int64_t v)
{
    if (v < 0)
        throw PreconditionError("isqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

void QuadraticPair::validate() const
{
    const std::int64_t disc = discriminant();
    if (disc <= 0)
        throw InputError("x^2 + (" + std::to_string(p) + ")x + (" + std::to_string(q) + ") has no real irrational roots");
    if (is_perfect_square(disc))
        throw InputError("x^2 + (" + std::to_string(p) + ")x + (" + std::to_string(q) + ") has rational roots");
}

double QuadraticReal::approx() const
{
    return (static_cast<double>(a) + s * std::sqrt(static_cast<double>(d))) / 2.0;
}

namespace {

int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// sign(c + e*sqrt(d)), d >= 0
int sign_with_root(const BigInt& c, const BigInt& e, const BigInt& d)
{
    if (e == 0 || d == 0)
        return sign(c);
    const int sc = sign(c);
    const int se = sign(e);
    if (sc == 0)
        return se;
    if (sc == se)
        return sc;
    // opposite signs: compare c^2 with e^2 d
    const int mag = sign(BigInt(c * c - e * e * d));
    return mag == 0 ? 0 : (mag > 0 ? sc : se);
}

} // namespace

int compare(const QuadraticReal& x, const QuadraticReal& y)
{
    // 2x - 2y = (x.a - y.a) + x.s sqrt(x.d) - y.s sqrt(y.d)
    const BigInt a = BigInt(x.a) - y.a;
    const int su = sign_with_root(a, x.s, x.d);
    const int sv = (y.s == 0 || y.d == 0) ? 0 : y.s;
    if (su != sv)
        return su > sv ? 1 : -1;
    if (su == 0)
        return 0;
    // same nonzero sign: compare squares u^2 = a^2 + d_x + 2 a s_x sqrt(d_x), v^2 = d_y
    const int sq = sign_with_root(BigInt(a * a + (x.s != 0 ? x.d : 0) - y.d), BigInt(2 * a * x.s), x.d);
    return su > 0 ? sq : -sq;
}

QuadraticReal smallest_root(const Eigenvalue& e)
{
    if (is_integer(e))
        return QuadraticReal::integer(std::get<std::int64_t>(e));
    return QuadraticReal::smaller_root(std::get<QuadraticPair>(e));
}

std::string to_string(const Eigenvalue& e)
{
    if (is_integer(e))
        return std::to_string(std::get<std::int64_t>(e));
    const auto& pair = std::get<QuadraticPair>(e);
    return "surd(" + std::to_string(pair.p) + "," + std::to_string(pair.q) + ")";
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries, IntPolynomial residual)
    : m_residual(std::move(residual))
{
    for (auto& entry : entries) {
        if (entry.multiplicity < 0)
            throw InputError("negative multiplicity for eigenvalue " + seidel::to_string(entry.value));
        if (entry.multiplicity == 0)
            continue;
        if (!is_integer(entry.value))
            std::get<QuadraticPair>(entry.value).validate();
        auto it = std::find_if(m_entries.begin(), m_entries.end(),
                               [&](const SpectrumEntry& e) { return e.value == entry.value; });
        if (it != m_entries.end())
            it->multiplicity += entry.multiplicity;
        else
            m_entries.push_back(entry);
    }
    std::sort(m_entries.begin(), m_entries.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
        if (is_integer(x.value) != is_integer(y.value))
            return is_integer(x.value);
        return compare(smallest_root(x.value), smallest_root(y.value)) < 0;
    });
    if (m_residual.degree() <= 0)
        m_residual = {};
}

std::int64_t Spectrum::order() const
{
    std::int64_t n = 0;
    for (const auto& e : m_entries)
        n += root_count(e.value) * e.multiplicity;
    return n + std::max(0, m_residual.degree());
}

std::int64_t Spectrum::distinct_explicit() const
{
    std::int64_t r = 0;
    for (const auto& e : m_entries)
        r += root_count(e.value);
    return r;
}

std::int64_t Spectrum::multiplicity(std::int64_t value) const
{
    return multiplicity(Eigenvalue{value});
}

std::int64_t Spectrum::multiplicity(const QuadraticPair& pair) const
{
    return multiplicity(Eigenvalue{pair});
}

std::int64_t Spectrum::multiplicity(const Eigenvalue& e) const
{
    for (const auto& entry : m_entries)
        if (entry.value == e)
            return entry.multiplicity;
    return 0;
}

std::vector<std::int64_t> Spectrum::integer_eigenvalues() const
{
    std::vector<std::int64_t> out;
    for (const auto& e : m_entries)
        if (is_integer(e.value))
            out.push_back(std::get<std::int64_t>(e.value));
    return out;
}

BigInt Spectrum::power_sum(int k) const
{
    if (k < 0 || k > 3)
        throw PreconditionError("power_sum supports k in 0..3");
    BigInt total = 0;
    for (const auto& e : m_entries) {
        BigInt s;
        if (is_integer(e.value)) {
            const BigInt v = std::get<std::int64_t>(e.value);
            s = boost::multiprecision::pow(v, static_cast<unsigned>(k));
        }
        else {
            // Newton sums of the roots of x^2 + p x + q
            const BigInt p = std::get<QuadraticPair>(e.value).p;
            const BigInt q = std::get<QuadraticPair>(e.value).q;
            switch (k) {
            case 0: s = 2; break;
            case 1: s = -p; break;
            case 2: s = p * p - 2 * q; break;
            default: s = -p * p * p + 3 * p * q; break;
            }
        }
        total += s * e.multiplicity;
    }
    return total;
}

IntPolynomial Spectrum::characteristic_polynomial() const
{
    IntPolynomial result = IntPolynomial::constant(1);
    for (const auto& e : m_entries) {
        const IntPolynomial factor = is_integer(e.value) ? IntPolynomial::linear(std::get<std::int64_t>(e.value))
                                                         : std::get<QuadraticPair>(e.value).polynomial();
        result = result * factor.pow(static_cast<unsigned>(e.multiplicity));
    }
    if (has_residual())
        result = result * m_residual;
    return result;
}

std::string Spectrum::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& e : m_entries) {
        if (!first)
            out << ",";
        out << seidel::to_string(e.value) << "^" << e.multiplicity;
        first = false;
    }
    if (has_residual()) {
        if (!first)
            out << ",";
        out << "residual(" << m_residual.to_string() << ")";
    }
    return out.str();
}

namespace {

class SpectrumParser
{
public:
    explicit SpectrumParser(const std::string& text) : m_text(text) {}

    Spectrum parse()
    {
        std::vector<SpectrumEntry> entries;
        std::set<Eigenvalue> seen;
        skip_space();
        if (at_end())
            fail("empty spectrum");
        while (true) {
            const std::size_t start = m_pos;
            SpectrumEntry entry = term();
            if (!seen.insert(entry.value).second) {
                m_pos = start;
                fail("duplicate eigenvalue " + seidel::to_string(entry.value));
            }
            entries.push_back(entry);
            skip_space();
            if (at_end())
                break;
            expect(',');
        }
        return Spectrum(std::move(entries));
    }

private:
    SpectrumEntry term()
    {
        skip_space();
        Eigenvalue value;
        if (m_text.compare(m_pos, 5, "surd(") == 0) {
            const std::size_t start = m_pos;
            m_pos += 5;
            QuadraticPair pair;
            pair.p = integer();
            expect(',');
            pair.q = integer();
            expect(')');
            try {
                pair.validate();
            }
            catch (const InputError& e) {
                m_pos = start;
                fail(e.what());
            }
            value = pair;
        }
        else {
            value = integer();
        }
        expect('^');
        const std::size_t mult_pos = m_pos;
        const std::int64_t m = integer();
        if (m <= 0) {
            m_pos = mult_pos;
            fail("multiplicity must be positive");
        }
        return {value, m};
    }

    std::int64_t integer()
    {
        skip_space();
        const std::size_t start = m_pos;
        if (!at_end() && (m_text[m_pos] == '-' || m_text[m_pos] == '+'))
            ++m_pos;
        const std::size_t digits = m_pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
            ++m_pos;
        if (m_pos == digits) {
            m_pos = start;
            fail("expected an integer");
        }
        try {
            return std::stoll(m_text.substr(start, m_pos - start));
        }
        catch (const std::out_of_range&) {
            m_pos = start;
            fail("integer out of range");
        }
    }

    void expect(char c)
    {
        skip_space();
        if (at_end() || m_text[m_pos] != c)
            fail(std::string("expected '") + c + "'");
        ++m_pos;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos])))
            ++m_pos;
    }

    bool at_end() const { return m_pos >= m_text.size(); }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("spectrum parse error at position " + std::to_string(m_pos) + ": " + what);
    }

    const std::string& m_text;
    std::size_t m_pos = 0;
};

} // namespace

Spectrum parse_spectrum(const std::string& text)
{
    return SpectrumParser(text).parse();
}

} // namespace seidel
