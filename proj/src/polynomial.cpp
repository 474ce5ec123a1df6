#include "seidel/polynomial.hpp"

#include <sstream>
#include <utility>

namespace seidel {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : m_coefficients(std::move(coefficients))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients)
{
    m_coefficients.reserve(coefficients.size());
    for (auto c : coefficients)
        m_coefficients.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c)
{
    return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::linear(std::int64_t root)
{
    return IntPolynomial{-root, 1};
}

IntPolynomial IntPolynomial::quadratic(std::int64_t p, std::int64_t q)
{
    return IntPolynomial{q, p, 1};
}

void IntPolynomial::trim()
{
    while (!m_coefficients.empty() && m_coefficients.back() == 0)
        m_coefficients.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const
{
    return i < m_coefficients.size() ? m_coefficients[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = m_coefficients.rbegin(); it != m_coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const
{
    if (m_coefficients.size() <= 1)
        return {};
    std::vector<BigInt> d(m_coefficients.size() - 1);
    for (std::size_t i = 1; i < m_coefficients.size(); ++i)
        d[i - 1] = m_coefficients[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(unsigned e) const
{
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e != 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.m_coefficients.size(), b.m_coefficients.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.m_coefficients.size(), b.m_coefficients.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coefficient(i) - b.coefficient(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.m_coefficients.size() + b.m_coefficients.size() - 1);
    for (std::size_t i = 0; i < a.m_coefficients.size(); ++i) {
        if (a.m_coefficients[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.m_coefficients.size(); ++j)
            c[i + j] += a.m_coefficients[i] * b.m_coefficients[j];
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = m_coefficients[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1 || i == 0)
            out << mag;
        if (i >= 1)
            out << "x";
        if (i >= 2)
            out << "^" << i;
        first = false;
    }
    return out.str();
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& numerator, const IntPolynomial& divisor)
{
    if (!divisor.is_monic())
        throw PreconditionError("divide_exact: divisor must be monic");
    if (numerator.is_zero())
        return IntPolynomial{};
    const int dn = numerator.degree();
    const int dd = divisor.degree();
    if (dn < dd)
        return std::nullopt;

    std::vector<BigInt> rem = numerator.coefficients();
    std::vector<BigInt> quot(static_cast<std::size_t>(dn - dd + 1));
    for (int i = dn - dd; i >= 0; --i) {
        const BigInt c = rem[static_cast<std::size_t>(i + dd)];
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i + j)] -= c * divisor.coefficients()[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < dd; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0)
            return std::nullopt;
    return IntPolynomial(std::move(quot));
}

int strip_factor(IntPolynomial& p, const IntPolynomial& divisor)
{
    if (divisor.degree() < 1)
        throw PreconditionError("strip_factor: divisor must be non-constant");
    int m = 0;
    while (!p.is_zero()) {
        auto q = divide_exact(p, divisor);
        if (!q)
            break;
        p = std::move(*q);
        ++m;
    }
    return m;
}

BigInt content(const IntPolynomial& p)
{
    BigInt g = 0;
    for (const auto& c : p.coefficients())
        g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

IntPolynomial primitive_part(const IntPolynomial& p)
{
    if (p.is_zero())
        return p;
    BigInt g = content(p);
    if (p.leading() < 0)
        g = -g;
    std::vector<BigInt> c = p.coefficients();
    for (auto& x : c)
        x /= g;
    return IntPolynomial(std::move(c));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> r = a.coefficients();
    const int db = b.degree();
    const BigInt& lb = b.leading();
    int dr = a.degree();
    while (dr >= db && !r.empty()) {
        const BigInt lr = r[static_cast<std::size_t>(dr)];
        for (auto& x : r)
            x *= lb;
        const int shift = dr - db;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(shift + j)] -= lr * b.coefficients()[static_cast<std::size_t>(j)];
        IntPolynomial trimmed(std::move(r));
        r = trimmed.coefficients();
        dr = trimmed.degree();
    }
    return IntPolynomial(std::move(r));
}

} // namespace

IntPolynomial gcd(IntPolynomial a, IntPolynomial b)
{
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

IntPolynomial reduce_mod(const IntPolynomial& p, std::int64_t m)
{
    std::vector<BigInt> c = p.coefficients();
    for (auto& x : c) {
        x %= m;
        if (x < 0)
            x += m;
    }
    return IntPolynomial(std::move(c));
}

} // namespace seidel
