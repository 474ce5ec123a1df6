#pragma once

// Independent reference computations used by the tests. Everything here is
// deliberately naive: floating-point eigensolvers, full orbit walks and
// exhaustive sign enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "seidel/core.hpp"
#include "seidel/eigenvalue.hpp"

namespace oracle {

using seidel::Index;
using seidel::IntMatrix;
using seidel::SeidelMatrix;

inline Eigen::VectorXd eigenvalues(const IntMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.cast<double>(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

/// Sorted eigenvalues with values within tol merged, as (value, multiplicity).
inline std::vector<std::pair<double, int>> grouped_eigenvalues(const IntMatrix& m, double tol = 1e-7)
{
    const Eigen::VectorXd ev = eigenvalues(m);
    std::vector<std::pair<double, int>> out;
    for (Index i = 0; i < ev.size(); ++i) {
        if (!out.empty() && std::abs(out.back().first - ev(i)) < tol)
            ++out.back().second;
        else
            out.emplace_back(ev(i), 1);
    }
    return out;
}

inline int distinct_count(const IntMatrix& m) { return static_cast<int>(grouped_eigenvalues(m).size()); }

/// Row-major upper-triangle mask to matrix, bit set = -1.
inline IntMatrix from_mask(Index n, std::uint64_t mask)
{
    IntMatrix m = IntMatrix::Zero(n, n);
    int p = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j, ++p)
            m(i, j) = m(j, i) = ((mask >> p) & 1u) ? -1 : 1;
    return m;
}

inline std::uint64_t to_mask(const IntMatrix& m)
{
    std::uint64_t mask = 0;
    int p = 0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = i + 1; j < m.rows(); ++j, ++p)
            if (m(i, j) < 0)
                mask |= std::uint64_t{1} << p;
    return mask;
}

inline IntMatrix switched(const IntMatrix& m, std::uint64_t signs)
{
    IntMatrix out = m;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.rows(); ++j)
            if (((signs >> i) ^ (signs >> j)) & 1u)
                out(i, j) = -out(i, j);
    return out;
}

inline IntMatrix permuted(const IntMatrix& m, const std::vector<Index>& perm)
{
    IntMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.rows(); ++j)
            out(i, j) = m(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return out;
}

/// Number of switching classes by union-find over all 2^C(n,2) matrices,
/// joined along vertex switchings and adjacent transpositions.
inline std::size_t orbit_count_union_find(Index n)
{
    const int bits = static_cast<int>(n * (n - 1) / 2);
    const std::uint64_t total = std::uint64_t{1} << bits;
    std::vector<std::uint64_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint64_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const IntMatrix m = from_mask(n, mask);
        std::vector<std::uint64_t> images;
        for (Index v = 0; v < n; ++v)
            images.push_back(to_mask(switched(m, std::uint64_t{1} << v)));
        for (Index v = 0; v + 1 < n; ++v) {
            std::vector<Index> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(v + 1)]);
            images.push_back(to_mask(permuted(m, perm)));
        }
        for (std::uint64_t img : images)
            parent[find(img)] = find(mask);
    }
    std::size_t roots = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (find(mask) == mask)
            ++roots;
    return roots;
}

/// Burnside count over the group of signed permutations (size 2^n n!).
/// An element (signs d, permutation pi) fixes S iff S[pi i][pi j] = d_i d_j S[i][j];
/// each cycle of pi on pairs contributes 2 if its sign product is +1 and 0 otherwise.
inline std::uint64_t orbit_count_burnside(Index n)
{
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Index, Index>> pairs;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    auto pair_index = [&](Index a, Index b) {
        if (a > b)
            std::swap(a, b);
        return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
    };
    std::uint64_t fixed_total = 0;
    std::uint64_t group = 0;
    do {
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
            ++group;
            std::vector<bool> seen(pairs.size(), false);
            std::uint64_t fixed = 1;
            for (std::size_t start = 0; start < pairs.size() && fixed; ++start) {
                if (seen[start])
                    continue;
                int product = 1;
                std::size_t e = start;
                do {
                    seen[e] = true;
                    const auto [i, j] = pairs[e];
                    const int di = ((signs >> i) & 1u) ? -1 : 1;
                    const int dj = ((signs >> j) & 1u) ? -1 : 1;
                    product *= di * dj;
                    e = pair_index(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                } while (e != start);
                fixed = product == 1 ? fixed * 2 : 0;
            }
            fixed_total += fixed;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return fixed_total / group;
}

/// Column-order code (most significant bit = pair (0,1)) of a matrix.
inline std::uint64_t column_code(const IntMatrix& m)
{
    const Index n = m.rows();
    std::uint64_t code = 0;
    for (Index j = 1; j < n; ++j)
        for (Index i = 0; i < j; ++i)
            code = (code << 1) | (m(i, j) < 0 ? 1u : 0u);
    return code;
}

/// Minimum column code over every switching and permutation, and how many
/// (switching modulo -I, permutation) pairs reach it.
inline std::pair<std::uint64_t, std::uint64_t> brute_canonical(const IntMatrix& m)
{
    const Index n = m.rows();
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::uint64_t hits = 0;
    do {
        const IntMatrix p = permuted(m, perm);
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << (n - 1)); ++signs) {
            const std::uint64_t c = column_code(switched(p, signs << 1));
            if (c < best) {
                best = c;
                hits = 1;
            }
            else if (c == best) {
                ++hits;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, hits};
}

/// Switchings (first sign +) whose underlying graph is regular, by checking every degree.
inline std::vector<std::uint64_t> regular_switchings(const IntMatrix& m)
{
    const Index n = m.rows();
    std::vector<std::uint64_t> out;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << (n - 1)); ++signs) {
        const IntMatrix s = switched(m, signs << 1);
        Index first = -1;
        bool regular = true;
        for (Index i = 0; i < n && regular; ++i) {
            Index deg = 0;
            for (Index j = 0; j < n; ++j)
                deg += s(i, j) < 0 ? 1 : 0;
            if (first < 0)
                first = deg;
            regular = deg == first;
        }
        if (regular)
            out.push_back(signs);
    }
    return out;
}

/// Euler switching by trying all 2^(n-1) sign vectors.
inline bool has_euler_switching(const IntMatrix& m)
{
    const Index n = m.rows();
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << (n - 1)); ++signs) {
        const IntMatrix s = switched(m, signs << 1);
        bool even = true;
        for (Index i = 0; i < n && even; ++i) {
            Index deg = 0;
            for (Index j = 0; j < n; ++j)
                deg += s(i, j) < 0 ? 1 : 0;
            even = deg % 2 == 0;
        }
        if (even)
            return true;
    }
    return false;
}

inline IntMatrix random_seidel(Index n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
    return from_mask(n, bits(rng));
}

inline IntMatrix random_symmetric(Index n, int lo, int hi, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j)
            m(i, j) = m(j, i) = dist(rng);
    return m;
}

/// Roots of an exact spectrum as sorted doubles (residual factors are not expanded).
inline std::vector<double> expand(const seidel::Spectrum& s)
{
    std::vector<double> out;
    for (const auto& e : s.entries()) {
        for (std::int64_t k = 0; k < e.multiplicity; ++k) {
            if (seidel::is_integer(e.value)) {
                out.push_back(static_cast<double>(std::get<std::int64_t>(e.value)));
            }
            else {
                const auto& pair = std::get<seidel::QuadraticPair>(e.value);
                out.push_back(seidel::QuadraticReal::smaller_root(pair).approx());
                out.push_back(seidel::QuadraticReal::larger_root(pair).approx());
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
