#include "seidel/core.hpp"

#include <sstream>

#include "seidel/spectra.hpp"

namespace seidel {

SeidelMatrix::SeidelMatrix(IntMatrix entries)
    : m_entries(std::move(entries))
{
    if (m_entries.rows() != m_entries.cols())
        throw InputError("Seidel matrix must be square");
    if (m_entries.rows() < 1)
        throw InputError("Seidel matrix must have order at least 1");
    const Index n = m_entries.rows();
    for (Index i = 0; i < n; ++i) {
        if (m_entries(i, i) != 0)
            throw InputError("Seidel matrix diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") is not 0");
        for (Index j = i + 1; j < n; ++j) {
            const auto a = m_entries(i, j);
            if (a != 1 && a != -1)
                throw InputError("Seidel matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not +-1");
            if (m_entries(j, i) != a)
                throw InputError("Seidel matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

SeidelMatrix SeidelMatrix::all_ones(Index n)
{
    return SeidelMatrix(IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n));
}

Graph::Graph(Index n)
    : m_rows(static_cast<std::size_t>(n), boost::dynamic_bitset<>(static_cast<std::size_t>(n)))
{
}

Graph Graph::from_adjacency(const IntMatrix& adjacency)
{
    if (adjacency.rows() != adjacency.cols())
        throw InputError("adjacency matrix must be square");
    Graph g(adjacency.rows());
    for (Index i = 0; i < adjacency.rows(); ++i) {
        if (adjacency(i, i) != 0)
            throw InputError("adjacency matrix has a loop at vertex " + std::to_string(i));
        for (Index j = i + 1; j < adjacency.cols(); ++j) {
            const auto a = adjacency(i, j);
            if ((a != 0 && a != 1) || adjacency(j, i) != a)
                throw InputError("adjacency matrix is not a symmetric 0/1 matrix");
            if (a == 1)
                g.add_edge(i, j);
        }
    }
    return g;
}

void Graph::add_edge(Index u, Index v)
{
    if (u == v || u < 0 || v < 0 || u >= order() || v >= order())
        throw InputError("invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    m_rows[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    m_rows[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

Index Graph::edge_count() const
{
    Index total = 0;
    for (const auto& row : m_rows)
        total += static_cast<Index>(row.count());
    return total / 2;
}

std::vector<std::pair<Index, Index>> Graph::edges() const
{
    std::vector<std::pair<Index, Index>> out;
    for (Index u = 0; u < order(); ++u)
        for (Index v = u + 1; v < order(); ++v)
            if (has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

IntMatrix Graph::adjacency() const
{
    IntMatrix a = IntMatrix::Zero(order(), order());
    for (Index u = 0; u < order(); ++u)
        for (Index v = 0; v < order(); ++v)
            a(u, v) = has_edge(u, v) ? 1 : 0;
    return a;
}

std::optional<Index> Graph::regular_valency() const
{
    if (order() == 0)
        return Index{0};
    const Index k = degree(0);
    for (Index v = 1; v < order(); ++v)
        if (degree(v) != k)
            return std::nullopt;
    return k;
}

SwitchingVector::SwitchingVector(std::vector<int> signs)
    : m_signs(std::move(signs))
{
    for (int s : m_signs)
        if (s != 1 && s != -1)
            throw InputError("switching vector entries must be +-1");
    if (!m_signs.empty() && m_signs.front() != 1)
        throw InputError("switching vector must start with +1");
}

SwitchingVector SwitchingVector::identity(Index n)
{
    return SwitchingVector(std::vector<int>(static_cast<std::size_t>(n), 1));
}

SwitchingVector SwitchingVector::normalized(std::vector<int> signs)
{
    if (!signs.empty() && signs.front() == -1)
        for (int& s : signs)
            s = -s;
    return SwitchingVector(std::move(signs));
}

SwitchingVector SwitchingVector::from_mask(Index n, std::uint64_t mask)
{
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    for (Index i = 1; i < n; ++i)
        if ((mask >> (i - 1)) & 1u)
            signs[static_cast<std::size_t>(i)] = -1;
    return SwitchingVector(std::move(signs));
}

SwitchingVector SwitchingVector::parse(const std::string& text)
{
    std::vector<int> signs;
    for (char c : text) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else
            throw InputError(std::string("invalid switching character '") + c + "'");
    }
    return SwitchingVector(std::move(signs));
}

bool SwitchingVector::is_identity() const
{
    for (int s : m_signs)
        if (s != 1)
            return false;
    return true;
}

std::string SwitchingVector::to_string() const
{
    std::string out;
    out.reserve(m_signs.size());
    for (int s : m_signs)
        out.push_back(s > 0 ? '+' : '-');
    return out;
}

SwitchingVector operator*(const SwitchingVector& a, const SwitchingVector& b)
{
    if (a.size() != b.size())
        throw PreconditionError("switching vectors differ in length");
    std::vector<int> out(a.m_signs.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.m_signs[i] * b.m_signs[i];
    return SwitchingVector::normalized(std::move(out));
}

std::strong_ordering operator<=>(const SwitchingVector& a, const SwitchingVector& b)
{
    // +1 sorts before -1
    const std::size_t len = std::min(a.m_signs.size(), b.m_signs.size());
    for (std::size_t i = 0; i < len; ++i)
        if (a.m_signs[i] != b.m_signs[i])
            return a.m_signs[i] > b.m_signs[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.m_signs.size() <=> b.m_signs.size();
}

std::string LineSystemParams::alpha_string() const
{
    if (is_integer(smallest)) {
        const auto v = std::get<std::int64_t>(smallest);
        return v == -1 || v == 1 ? "1" : "1/" + std::to_string(v < 0 ? -v : v);
    }
    const auto& pair = std::get<QuadraticPair>(smallest);
    // smaller root (-p - sqrt(D)) / 2
    std::ostringstream out;
    out << "1/|(" << -pair.p << "-sqrt(" << pair.discriminant() << "))/2|";
    if (pair.p == 0 && pair.discriminant() % 4 == 0) {
        out.str("");
        out << "1/sqrt(" << pair.discriminant() / 4 << ")";
    }
    return out.str();
}

SeidelMatrix seidel_from_graph(const Graph& g)
{
    const Index n = g.order();
    IntMatrix s = IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n) - 2 * g.adjacency();
    return SeidelMatrix(std::move(s));
}

SeidelMatrix apply_switching(const SeidelMatrix& s, const SwitchingVector& v)
{
    if (v.size() != s.order())
        throw PreconditionError("switching vector length " + std::to_string(v.size()) + " does not match order " +
                                std::to_string(s.order()));
    IntVector d(v.size());
    for (Index i = 0; i < v.size(); ++i)
        d(i) = v[i];
    IntMatrix out = d.asDiagonal() * s.matrix() * d.asDiagonal();
    return SeidelMatrix(std::move(out));
}

Graph graph_from_seidel(const SeidelMatrix& s, const SwitchingVector& v)
{
    const SeidelMatrix t = apply_switching(s, v);
    const Index n = t.order();
    Graph g(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (t(i, j) == -1)
                g.add_edge(i, j);
    return g;
}

Graph graph_from_seidel(const SeidelMatrix& s)
{
    return graph_from_seidel(s, SwitchingVector::identity(s.order()));
}

std::optional<SwitchingVector> euler_switch(const SeidelMatrix& s)
{
    const Index n = s.order();
    const Graph g = graph_from_seidel(s);
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    Index odd = 0;
    for (Index v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 1) {
            signs[static_cast<std::size_t>(v)] = -1;
            ++odd;
        }
    if (n % 2 == 1)
        return SwitchingVector::normalized(std::move(signs));
    if (odd == 0)
        return SwitchingVector::identity(n);
    if (odd == n) {
        // any odd-size set flips every parity
        std::vector<int> one(static_cast<std::size_t>(n), 1);
        one.back() = -1;
        return SwitchingVector(std::move(one));
    }
    return std::nullopt;
}

LineSystemParams line_params(const SeidelMatrix& s)
{
    if (s.order() < 2)
        throw PreconditionError("line_params needs order at least 2");
    const Spectrum spec = spectrum(s);
    if (spec.has_residual())
        throw NotApplicable("smallest eigenvalue may lie in an irreducible factor of degree >= 3");
    const SpectrumEntry* best = nullptr;
    for (const auto& e : spec.entries())
        if (best == nullptr || compare(smallest_root(e.value), smallest_root(best->value)) < 0)
            best = &e;
    LineSystemParams out;
    out.n = s.order();
    out.d = s.order() - best->multiplicity;
    out.smallest = best->value;
    return out;
}

SeidelMatrix build_fixture_s10()
{
    IntMatrix m(10, 10);
    // clang-format off
    m <<  0,  1,  1,  1,  1,  1,  1,  1,  1,  1,
          1,  0, -1,  1,  1, -1,  1, -1,  1, -1,
          1, -1,  0,  1,  1, -1, -1,  1, -1,  1,
          1,  1,  1,  0,  1, -1, -1,  1, -1, -1,
          1,  1,  1,  1,  0, -1,  1,  1,  1, -1,
          1, -1, -1, -1, -1,  0,  1,  1,  1,  1,
          1,  1, -1, -1,  1,  1,  0, -1,  1, -1,
          1, -1,  1,  1,  1,  1, -1,  0,  1,  1,
          1,  1, -1, -1,  1,  1,  1,  1,  0,  1,
          1, -1,  1, -1, -1,  1, -1,  1,  1,  0;
    // clang-format on
    return SeidelMatrix(std::move(m));
}

SeidelMatrix build_s6()
{
    // First hit of the exhaustive upper-triangle search (row-major bits, bit set
    // means -1) for S^2 = 5I; tests regenerate it.
    IntMatrix m(6, 6);
    // clang-format off
    m <<  0,  1,  1, -1, -1,  1,
          1,  0, -1,  1, -1,  1,
          1, -1,  0, -1,  1,  1,
         -1,  1, -1,  0,  1,  1,
         -1, -1,  1,  1,  0,  1,
          1,  1,  1,  1,  1,  0;
    // clang-format on
    return SeidelMatrix(std::move(m));
}

SeidelMatrix build_sk_family(int k)
{
    if (k < 1)
        throw PreconditionError("build_sk_family needs k >= 1");
    const Index blocks = 2 * k + 1;
    const IntMatrix s6 = build_s6().matrix();
    const IntMatrix inner = s6 - IntMatrix::Identity(6, 6);
    IntMatrix m = kronecker(IntMatrix::Ones(blocks, blocks), inner);
    m += IntMatrix::Identity(m.rows(), m.cols());
    return SeidelMatrix(std::move(m));
}

Graph cycle_graph(Index n)
{
    Graph g(n);
    for (Index i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(Index n)
{
    Graph g(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph petersen_graph()
{
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    Graph g(10);
    for (Index i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

} // namespace seidel
