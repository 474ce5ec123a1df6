#pragma once

#include <type_traits>

#include "seidel/core.hpp"
#include "seidel/eigenvalue.hpp"
#include "seidel/polynomial.hpp"

namespace seidel {

namespace detail {
IntPolynomial char_poly_int(const IntMatrix& a);
}

/// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recursion; every division in the recursion is exact.
template <typename Derived>
IntPolynomial char_poly(const Eigen::MatrixBase<Derived>& m)
{
    static_assert(std::is_integral_v<typename Derived::Scalar>, "char_poly needs an integer matrix");
    if (m.rows() != m.cols())
        throw PreconditionError("char_poly: matrix is not square");
    return detail::char_poly_int(m.template cast<std::int64_t>());
}

inline IntPolynomial char_poly(const SeidelMatrix& s) { return char_poly(s.matrix()); }

/// Splits a monic polynomial into integer roots and irrational quadratic factors
/// whose roots lie in [-root_bound, root_bound]; the rest becomes the residual.
Spectrum factor_spectrum(const IntPolynomial& chi, std::int64_t root_bound);

/// Exact spectrum; the spectral radius of an order-n Seidel matrix is at most n - 1.
Spectrum spectrum(const SeidelMatrix& s);

/// Exact spectrum of a symmetric integer matrix (root bound: max absolute row sum).
Spectrum spectrum(const IntMatrix& symmetric);

/// deg(chi) - deg(gcd(chi, chi')).
std::int64_t distinct_root_count(const IntPolynomial& chi);
std::int64_t distinct_eigenvalue_count(const SeidelMatrix& s);

/// A symmetric matrix is positive semidefinite iff the coefficients of its
/// characteristic polynomial alternate in sign, i.e. all elementary symmetric
/// functions of its eigenvalues are nonnegative.
bool is_psd_charpoly(const IntPolynomial& chi);

template <typename Derived>
bool is_psd(const Eigen::MatrixBase<Derived>& m)
{
    if (!is_symmetric(m))
        throw PreconditionError("is_psd: matrix is not symmetric");
    return is_psd_charpoly(char_poly(m));
}

/// Rank of a symmetric matrix: order minus the multiplicity of the root 0.
template <typename Derived>
Index symmetric_rank(const Eigen::MatrixBase<Derived>& m)
{
    const IntPolynomial chi = char_poly(m);
    Index zeros = 0;
    while (zeros <= chi.degree() && chi.coefficient(static_cast<std::size_t>(zeros)) == 0)
        ++zeros;
    return m.rows() - zeros;
}

/// Entrywise S^k against J - I (k odd) or nJ - I (k even), modulo 2.
bool mod2_power_check(const SeidelMatrix& s, int k);

struct Mod2Class
{
    enum class Parity { Even, Odd };
    Parity parity = Parity::Even;
    /// chi(x) equals (x+1)^n (n even) or x(x+1)^(n-1) (n odd) modulo 2.
    bool matches = false;
};

Mod2Class mod2_charpoly_class(const SeidelMatrix& s);
/// Same test on an arbitrary monic polynomial of degree n.
bool mod2_charpoly_matches(const IntPolynomial& chi);

/// S^2 == (n-2)J + I modulo 4. The underlying graph of `s` must be an Euler
/// graph (apply euler_switch first); otherwise PreconditionError.
bool mod4_square_check(const SeidelMatrix& s);

} // namespace seidel
