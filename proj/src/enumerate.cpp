#include "seidel/enumerate.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "seidel/regular.hpp"
#include "seidel/spectra.hpp"

namespace seidel {

namespace {

constexpr int kMax = static_cast<int>(max_canonical_order);

// Branch and bound over labellings of the graph left after isolating a vertex.
// Column j of the code holds the pairs (1,j),...,(j-1,j) with (1,j) most significant;
// the pair (0,j) is always +1.
class CanonicalSearch
{
public:
    explicit CanonicalSearch(int n) : m_n(n) {}

    void run(const std::array<std::uint16_t, kMax>& adj, const std::vector<int>& others)
    {
        m_adj = adj;
        std::uint16_t remaining = 0;
        for (int u : others)
            remaining |= static_cast<std::uint16_t>(1u << u);
        for (int u = 0; u < kMax; ++u)
            m_col[1][u] = 0;
        dfs(1, remaining);
    }

    std::uint64_t leaves() const { return m_leaves; }

    std::uint64_t code() const
    {
        const int total = m_n * (m_n - 1) / 2;
        std::uint64_t out = 0;
        for (int j = 1; j < m_n; ++j)
            for (int i = 1; i < j; ++i)
                if ((m_best[j] >> (j - 1 - i)) & 1u) {
                    const int p = j * (j - 1) / 2 + i;
                    out |= std::uint64_t{1} << (total - 1 - p);
                }
        return out;
    }

private:
    void dfs(int j, std::uint16_t remaining)
    {
        if (j == m_n) {
            ++m_leaves;
            return;
        }
        std::uint32_t lowest = ~0u;
        for (int u = 0; u < kMax; ++u)
            if ((remaining >> u) & 1u)
                lowest = std::min(lowest, m_col[j][u]);

        if (j > m_best_len) {
            m_best[j] = lowest;
            m_best_len = j;
        }
        else if (lowest < m_best[j]) {
            m_best[j] = lowest;
            m_best_len = j;
            m_leaves = 0;
        }
        else if (lowest > m_best[j]) {
            return;
        }

        for (int u = 0; u < kMax; ++u) {
            if (!((remaining >> u) & 1u) || m_col[j][u] != lowest)
                continue;
            const std::uint16_t rest = static_cast<std::uint16_t>(remaining & ~(1u << u));
            for (int w = 0; w < kMax; ++w)
                if ((rest >> w) & 1u)
                    m_col[j + 1][w] = (m_col[j][w] << 1) | ((m_adj[u] >> w) & 1u);
            dfs(j + 1, rest);
            // a deeper improvement may have lowered a level above this one; re-check
            if (m_best[j] < lowest)
                return;
        }
    }

    int m_n;
    std::array<std::uint16_t, kMax> m_adj{};
    std::array<std::array<std::uint32_t, kMax>, kMax + 1> m_col{};
    std::array<std::uint32_t, kMax + 1> m_best{};
    int m_best_len = 0;
    std::uint64_t m_leaves = 0;
};

std::uint64_t canonical_code(const IntMatrix& s, std::uint64_t& automorphisms)
{
    const int n = static_cast<int>(s.rows());
    if (n > kMax)
        throw PreconditionError("canonical_form supports n <= " + std::to_string(kMax));
    if (n <= 1) {
        automorphisms = 1;
        return 0;
    }
    CanonicalSearch search(n);
    for (int v = 0; v < n; ++v) {
        // switch so that v is isolated: x_u = S(v,u)
        std::array<std::uint16_t, kMax> adj{};
        std::vector<int> others;
        for (int a = 0; a < n; ++a) {
            if (a == v)
                continue;
            others.push_back(a);
            for (int b = 0; b < n; ++b) {
                if (b == v || b == a)
                    continue;
                if (s(v, a) * s(v, b) * s(a, b) == -1)
                    adj[a] |= static_cast<std::uint16_t>(1u << b);
            }
        }
        search.run(adj, others);
    }
    automorphisms = search.leaves();
    return search.code();
}

SeidelMatrix from_code(Index n, std::uint64_t code)
{
    const Index total = n * (n - 1) / 2;
    IntMatrix m = IntMatrix::Zero(n, n);
    for (Index j = 1; j < n; ++j)
        for (Index i = 0; i < j; ++i) {
            const Index p = j * (j - 1) / 2 + i;
            const bool minus = (code >> (total - 1 - p)) & 1u;
            m(i, j) = m(j, i) = minus ? -1 : 1;
        }
    return SeidelMatrix(std::move(m));
}

std::uint64_t factorial(Index n)
{
    std::uint64_t f = 1;
    for (Index i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace

CanonicalClass canonical_form(const SeidelMatrix& s)
{
    CanonicalClass out;
    out.code = canonical_code(s.matrix(), out.automorphisms);
    const Index n = s.order();
    out.representative = from_code(n, out.code);
    out.orbit_size = (std::uint64_t{1} << (n - 1)) * factorial(n) / out.automorphisms;
    out.spectrum = spectrum(out.representative);
    return out;
}

SeidelMatrix seidel_from_mask(Index n, std::uint64_t mask)
{
    IntMatrix m = IntMatrix::Zero(n, n);
    int p = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j, ++p)
            m(i, j) = m(j, i) = ((mask >> p) & 1u) ? -1 : 1;
    return SeidelMatrix(std::move(m));
}

std::optional<std::uint64_t> first_mask(Index n, const std::function<bool(const SeidelMatrix&)>& accept)
{
    const Index bits = n * (n - 1) / 2;
    if (bits > 40)
        throw PreconditionError("mask search is limited to 40 upper-triangle bits");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
        if (accept(seidel_from_mask(n, mask)))
            return mask;
    return std::nullopt;
}

std::vector<EnumeratedClass> enumerate_classes(Index n, const EnumerateOptions& options)
{
    if (n < 1)
        throw PreconditionError("enumerate_classes needs n >= 1");
    if (n > 7 || (n == 7 && !options.allow_long))
        throw PreconditionError(n == 7 ? "order 7 needs the long-running flag" : "enumeration is limited to n <= 7");

    const Index free_pairs = (n - 1) * (n - 2) / 2;
    const std::uint64_t total = std::uint64_t{1} << free_pairs;
    std::vector<std::pair<Index, Index>> pairs;
    for (Index i = 1; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);

    using Bucket = std::map<std::uint64_t, std::uint64_t>;
    auto work = [&](std::uint64_t begin, std::uint64_t end, Bucket& bucket) {
        IntMatrix m = IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                const auto [i, j] = pairs[p];
                m(i, j) = m(j, i) = ((mask >> p) & 1u) ? -1 : 1;
            }
            std::uint64_t aut = 0;
            ++bucket[canonical_code(m, aut)];
        }
    };

    const unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    Bucket merged;
    if (threads <= 1 || total < 64) {
        work(0, total, merged);
    }
    else {
        std::vector<Bucket> buckets(threads);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = std::min(total, t * chunk);
            const std::uint64_t end = std::min(total, begin + chunk);
            pool.emplace_back(work, begin, end, std::ref(buckets[t]));
        }
        for (auto& t : pool)
            t.join();
        for (const auto& b : buckets)
            for (const auto& [code, count] : b)
                merged[code] += count;
    }

    std::vector<EnumeratedClass> out;
    SearchOptions search;
    search.graph_spectra = false;
    for (const auto& [code, count] : merged) {
        EnumeratedClass c;
        c.canonical = canonical_form(from_code(n, code));
        c.isolated_count = count;
        c.distinct_eigenvalues = distinct_eigenvalue_count(c.canonical.representative);
        if (options.count_witnesses)
            c.regular_witnesses = find_regular_graphs(c.canonical.representative, search).size();
        out.push_back(std::move(c));
    }
    return out;
}

std::string encode_rows(const SeidelMatrix& s)
{
    std::string out;
    for (Index i = 0; i < s.order(); ++i) {
        if (i)
            out += '/';
        for (Index j = 0; j < s.order(); ++j)
            out += s(i, j) == 0 ? '0' : (s(i, j) > 0 ? '+' : '-');
    }
    return out;
}

SeidelMatrix decode_rows(const std::string& text)
{
    std::vector<std::string> rows;
    std::stringstream in(text);
    std::string row;
    while (std::getline(in, row, '/'))
        rows.push_back(row);
    const Index n = static_cast<Index>(rows.size());
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        if (static_cast<Index>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw InputError("row " + std::to_string(i) + " of '" + text + "' has the wrong length");
        for (Index j = 0; j < n; ++j) {
            const char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != '0' && c != '+' && c != '-')
                throw InputError("unexpected character '" + std::string(1, c) + "' in row encoding");
            m(i, j) = c == '0' ? 0 : (c == '+' ? 1 : -1);
        }
    }
    return SeidelMatrix(std::move(m));
}

std::string results_line(const EnumeratedClass& c)
{
    return encode_rows(c.canonical.representative) + ' ' + c.canonical.spectrum.to_string() + ' ' +
           std::to_string(c.regular_witnesses);
}

std::string write_results(const std::vector<EnumeratedClass>& classes)
{
    std::string out;
    for (const auto& c : classes)
        out += results_line(c) + '\n';
    return out;
}

ResultsEntry parse_results_line(const std::string& line)
{
    std::istringstream in(line);
    std::string rows;
    std::string spectrum_text;
    long long count = -1;
    if (!(in >> rows >> spectrum_text >> count) || count < 0)
        throw InputError("malformed results line '" + line + "'");
    return {decode_rows(rows), parse_spectrum(spectrum_text), static_cast<std::size_t>(count)};
}

} // namespace seidel
