#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "seidel/eigenvalue.hpp"
#include "seidel/types.hpp"

namespace seidel {

/// Symmetric integer matrix with zero diagonal and +-1 off the diagonal.
class SeidelMatrix
{
public:
    /// Throws InputError if `entries` violates the invariants.
    explicit SeidelMatrix(IntMatrix entries);

    /// J - I of order n.
    static SeidelMatrix all_ones(Index n);

    Index order() const { return m_entries.rows(); }
    const IntMatrix& matrix() const { return m_entries; }
    std::int64_t operator()(Index i, Index j) const { return m_entries(i, j); }

    friend bool operator==(const SeidelMatrix& a, const SeidelMatrix& b) { return a.m_entries == b.m_entries; }

private:
    IntMatrix m_entries;
};

/// Simple undirected graph, one adjacency bitset per vertex.
class Graph
{
public:
    explicit Graph(Index n = 0);
    /// Throws InputError unless `adjacency` is a symmetric 0/1 matrix with zero diagonal.
    static Graph from_adjacency(const IntMatrix& adjacency);

    Index order() const { return static_cast<Index>(m_rows.size()); }
    void add_edge(Index u, Index v);
    bool has_edge(Index u, Index v) const { return m_rows[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    Index degree(Index v) const { return static_cast<Index>(m_rows[static_cast<std::size_t>(v)].count()); }
    Index edge_count() const;
    const boost::dynamic_bitset<>& neighbours(Index v) const { return m_rows[static_cast<std::size_t>(v)]; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Index, Index>> edges() const;
    IntMatrix adjacency() const;

    /// Common valency if every vertex has the same degree.
    std::optional<Index> regular_valency() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<boost::dynamic_bitset<>> m_rows;
};

/// Diagonal +-1 conjugation, normalised so the first sign is +1 (conjugation
/// by -I acts trivially).
class SwitchingVector
{
public:
    SwitchingVector() = default;
    /// Throws InputError on entries other than +-1 or a leading -1.
    explicit SwitchingVector(std::vector<int> signs);

    static SwitchingVector identity(Index n);
    /// Flips all signs if the first one is -1.
    static SwitchingVector normalized(std::vector<int> signs);
    /// Sign i (i >= 1) is -1 iff bit i-1 of `mask` is set.
    static SwitchingVector from_mask(Index n, std::uint64_t mask);
    /// Parses "+-+-" strings.
    static SwitchingVector parse(const std::string& text);

    Index size() const { return static_cast<Index>(m_signs.size()); }
    int operator[](Index i) const { return m_signs[static_cast<std::size_t>(i)]; }
    const std::vector<int>& signs() const { return m_signs; }
    bool is_identity() const;

    std::string to_string() const;

    /// Pointwise product; the composite of two switchings.
    friend SwitchingVector operator*(const SwitchingVector& a, const SwitchingVector& b);
    friend bool operator==(const SwitchingVector&, const SwitchingVector&) = default;
    /// Lexicographic with +1 ordered before -1.
    friend std::strong_ordering operator<=>(const SwitchingVector& a, const SwitchingVector& b);

private:
    std::vector<int> m_signs;
};

/// Common angle data of the equiangular line system of a Seidel matrix.
struct LineSystemParams
{
    std::int64_t n = 0;
    std::int64_t d = 0;
    /// Smallest eigenvalue; the common angle is 1/|smallest| (the smaller root for a pair).
    Eigenvalue smallest;

    std::string alpha_string() const;
};

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m)
{
    return m.rows() == m.cols() && (m - m.transpose()).isZero(0);
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& m)
{
    return m.trace();
}

/// S = J - I - 2A.
SeidelMatrix seidel_from_graph(const Graph& g);

/// D S D with D = diag(v).
SeidelMatrix apply_switching(const SeidelMatrix& s, const SwitchingVector& v);

/// Underlying graph (J - I - DSD) / 2 of the switched matrix.
Graph graph_from_seidel(const SeidelMatrix& s, const SwitchingVector& v);
Graph graph_from_seidel(const SeidelMatrix& s);

/// A switching whose underlying graph has only even degrees, if one exists.
///
/// Switching a vertex set U changes the degree parity of v in U by n - |U| and
/// of v outside U by |U|. For odd n, switching the set of odd-degree vertices
/// always works; for even n an Euler switching exists iff all degrees already
/// share one parity.
std::optional<SwitchingVector> euler_switch(const SeidelMatrix& s);

/// n, d = n - mult(smallest eigenvalue), and the smallest eigenvalue.
/// Throws PreconditionError for n < 2 and NotApplicable when the smallest
/// eigenvalue is hidden in a residual factor.
LineSystemParams line_params(const SeidelMatrix& s);

// Fixtures

/// The 10x10 matrix with spectrum {-3^4, (2 +- sqrt 5)^3} whose switching class has no regular graph.
SeidelMatrix build_fixture_s10();
/// A 6x6 Seidel matrix with S^2 = 5I, i.e. spectrum {-sqrt5^3, sqrt5^3}.
SeidelMatrix build_s6();
/// J_{2k+1} (x) (S6 - I) + I.
SeidelMatrix build_sk_family(int k);

Graph cycle_graph(Index n);
Graph complete_graph(Index n);
Graph petersen_graph();

/// Kronecker product of dense matrices.
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    Matrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace seidel
