#include "seidel/spectra.hpp"

#include <algorithm>

namespace seidel {

namespace detail {

IntPolynomial char_poly_int(const IntMatrix& a)
{
    const Index n = a.rows();
    std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1;
    if (n == 0)
        return IntPolynomial(std::move(c));

    // sparse row view of a
    std::vector<std::vector<std::pair<Index, std::int64_t>>> rows(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        for (Index l = 0; l < n; ++l)
            if (a(i, l) != 0)
                rows[static_cast<std::size_t>(i)].emplace_back(l, a(i, l));

    BigMatrix m = BigMatrix::Identity(n, n);
    BigMatrix am(n, n);
    for (Index k = 1; k <= n; ++k) {
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j)
                am(i, j) = 0;
            for (const auto& [l, v] : rows[static_cast<std::size_t>(i)]) {
                if (v == 1) {
                    for (Index j = 0; j < n; ++j)
                        am(i, j) += m(l, j);
                }
                else if (v == -1) {
                    for (Index j = 0; j < n; ++j)
                        am(i, j) -= m(l, j);
                }
                else {
                    const BigInt factor = v;
                    for (Index j = 0; j < n; ++j)
                        am(i, j) += factor * m(l, j);
                }
            }
        }
        BigInt tr = 0;
        for (Index i = 0; i < n; ++i)
            tr += am(i, i);
        BigInt coeff = -tr / k;
        if (coeff * k != -tr)
            throw Error("char_poly: inexact Faddeev-LeVerrier division");
        c[static_cast<std::size_t>(n - k)] = coeff;
        if (k < n) {
            m.swap(am);
            for (Index i = 0; i < n; ++i)
                m(i, i) += coeff;
        }
    }
    return IntPolynomial(std::move(c));
}

} // namespace detail

Spectrum factor_spectrum(const IntPolynomial& chi, std::int64_t root_bound)
{
    if (!chi.is_monic())
        throw PreconditionError("factor_spectrum: polynomial must be monic");
    IntPolynomial rest = chi;
    std::vector<SpectrumEntry> entries;

    for (std::int64_t v = -root_bound; v <= root_bound && rest.degree() > 0; ++v) {
        if (rest.evaluate(v) != 0)
            continue;
        const int m = strip_factor(rest, IntPolynomial::linear(v));
        entries.push_back({v, m});
    }

    if (rest.degree() >= 2) {
        IntPolynomial squarefree = *divide_exact(rest, gcd(rest, rest.derivative()));
        const BigInt c0 = squarefree.coefficient(0);
        const std::int64_t q_bound = root_bound * root_bound;
        for (std::int64_t q = -q_bound; q <= q_bound && rest.degree() >= 2; ++q) {
            if (q == 0 || c0 % q != 0)
                continue;
            for (std::int64_t p = -2 * root_bound; p <= 2 * root_bound; ++p) {
                const std::int64_t disc = p * p - 4 * q;
                if (disc <= 0 || is_perfect_square(disc))
                    continue;
                const IntPolynomial quad = IntPolynomial::quadratic(p, q);
                auto reduced = divide_exact(squarefree, quad);
                if (!reduced)
                    continue;
                squarefree = std::move(*reduced);
                const int m = strip_factor(rest, quad);
                entries.push_back({QuadraticPair{p, q}, m});
                if (rest.degree() < 2)
                    break;
            }
        }
    }
    if (rest.degree() > 0 && rest.degree() < 3)
        throw Error("factor_spectrum: unexpected low-degree remainder " + rest.to_string() +
                    " (root bound too small?)");
    return Spectrum(std::move(entries), rest.degree() > 0 ? rest : IntPolynomial{});
}

Spectrum spectrum(const SeidelMatrix& s)
{
    return factor_spectrum(char_poly(s), std::max<std::int64_t>(s.order() - 1, 0));
}

Spectrum spectrum(const IntMatrix& symmetric)
{
    if (!is_symmetric(symmetric))
        throw PreconditionError("spectrum: matrix is not symmetric");
    std::int64_t bound = 0;
    for (Index i = 0; i < symmetric.rows(); ++i)
        bound = std::max<std::int64_t>(bound, symmetric.row(i).cwiseAbs().sum());
    return factor_spectrum(char_poly(symmetric), bound);
}

std::int64_t distinct_root_count(const IntPolynomial& chi)
{
    if (chi.degree() <= 0)
        return 0;
    return chi.degree() - gcd(chi, chi.derivative()).degree();
}

std::int64_t distinct_eigenvalue_count(const SeidelMatrix& s)
{
    return distinct_root_count(char_poly(s));
}

bool is_psd_charpoly(const IntPolynomial& chi)
{
    const int n = chi.degree();
    for (int i = 0; i <= n; ++i) {
        BigInt c = chi.coefficient(static_cast<std::size_t>(i));
        if ((n - i) % 2 == 1)
            c = -c;
        if (c < 0)
            return false;
    }
    return true;
}

namespace {

IntMatrix mod_product(const IntMatrix& a, const IntMatrix& b, std::int64_t m)
{
    IntMatrix c = a * b;
    return c.unaryExpr([m](std::int64_t x) { return mod(x, m); });
}

} // namespace

bool mod2_power_check(const SeidelMatrix& s, int k)
{
    if (k < 1)
        throw PreconditionError("mod2_power_check needs k >= 1");
    const Index n = s.order();
    const IntMatrix base = s.matrix().unaryExpr([](std::int64_t x) { return mod(x, 2); });
    IntMatrix power = base;
    for (int i = 1; i < k; ++i)
        power = mod_product(power, base, 2);
    const std::int64_t j_coeff = (k % 2 == 1) ? 1 : n;
    const IntMatrix expected = (j_coeff * IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n))
                                   .unaryExpr([](std::int64_t x) { return mod(x, 2); });
    return power == expected;
}

bool mod2_charpoly_matches(const IntPolynomial& chi)
{
    const int n = chi.degree();
    const IntPolynomial x_plus_1{1, 1};
    const IntPolynomial target = (n % 2 == 0) ? x_plus_1.pow(static_cast<unsigned>(n))
                                              : IntPolynomial{0, 1} * x_plus_1.pow(static_cast<unsigned>(n - 1));
    return reduce_mod(chi, 2) == reduce_mod(target, 2);
}

Mod2Class mod2_charpoly_class(const SeidelMatrix& s)
{
    Mod2Class out;
    out.parity = (s.order() % 2 == 0) ? Mod2Class::Parity::Even : Mod2Class::Parity::Odd;
    out.matches = mod2_charpoly_matches(char_poly(s));
    return out;
}

bool mod4_square_check(const SeidelMatrix& s)
{
    const Graph g = graph_from_seidel(s);
    for (Index v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("mod4_square_check: underlying graph is not an Euler graph (vertex " +
                                    std::to_string(v) + " has odd degree)");
    const Index n = s.order();
    const IntMatrix square = mod_product(s.matrix(), s.matrix(), 4);
    const IntMatrix expected = ((n - 2) * IntMatrix::Ones(n, n) + IntMatrix::Identity(n, n))
                                   .unaryExpr([](std::int64_t x) { return mod(x, 4); });
    return square == expected;
}

} // namespace seidel
