#include "seidel/regular.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "seidel/spectra.hpp"

namespace seidel {

namespace {

// Depth-first search for +-1 vectors x with x[0] = +1 and S x = theta x.
// partial[i] holds the contribution of the fixed prefix to (S x)_i.
class EigenvectorSearch
{
public:
    EigenvectorSearch(const IntMatrix& s, std::int64_t theta, std::atomic<std::uint64_t>& nodes,
                      std::uint64_t max_nodes)
        : m_s(s), m_n(s.rows()), m_theta(theta), m_nodes(nodes), m_max_nodes(max_nodes),
          m_x(static_cast<std::size_t>(s.rows()), 0), m_partial(static_cast<std::size_t>(s.rows()), 0)
    {
    }

    // Fixes signs 0..prefix.size()-1; false if the prefix is already infeasible.
    bool seed(const std::vector<int>& prefix)
    {
        for (std::size_t t = 0; t < prefix.size(); ++t) {
            fix(static_cast<Index>(t), prefix[t]);
            if (!feasible(static_cast<Index>(t) + 1))
                return false;
        }
        return true;
    }

    void run(Index next, bool find_one, const std::atomic<bool>& abort)
    {
        m_find_one = find_one;
        m_abort = &abort;
        dfs(next);
    }

    std::vector<std::vector<int>>& found() { return m_found; }

private:
    void fix(Index t, int sign)
    {
        m_x[static_cast<std::size_t>(t)] = sign;
        for (Index i = 0; i < m_n; ++i)
            m_partial[static_cast<std::size_t>(i)] += m_s(i, t) * sign;
    }

    void unfix(Index t)
    {
        const int sign = m_x[static_cast<std::size_t>(t)];
        for (Index i = 0; i < m_n; ++i)
            m_partial[static_cast<std::size_t>(i)] -= m_s(i, t) * sign;
        m_x[static_cast<std::size_t>(t)] = 0;
    }

    // Every row can still reach its target with the unfixed signs.
    bool feasible(Index fixed) const
    {
        const std::int64_t unfixed = m_n - fixed;
        for (Index i = 0; i < m_n; ++i) {
            const std::int64_t p = m_partial[static_cast<std::size_t>(i)];
            if (i < fixed) {
                const std::int64_t target = m_theta * m_x[static_cast<std::size_t>(i)] - p;
                if (target > unfixed || target < -unfixed)
                    return false;
            }
            else {
                const std::int64_t gap = std::abs(std::abs(p) - std::abs(m_theta));
                if (gap > unfixed - 1)
                    return false;
            }
        }
        return true;
    }

    void dfs(Index t)
    {
        if (m_abort->load(std::memory_order_relaxed) || (m_find_one && !m_found.empty()))
            return;
        const auto count = m_nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (m_max_nodes != 0 && count > m_max_nodes)
            throw BudgetExceeded("regular search exceeded " + std::to_string(m_max_nodes) + " nodes");
        if (t == m_n) {
            m_found.push_back(m_x);
            return;
        }
        for (int sign : {1, -1}) {
            fix(t, sign);
            if (feasible(t + 1))
                dfs(t + 1);
            unfix(t);
            if (m_find_one && !m_found.empty())
                return;
        }
    }

    const IntMatrix& m_s;
    Index m_n;
    std::int64_t m_theta;
    std::atomic<std::uint64_t>& m_nodes;
    std::uint64_t m_max_nodes;
    std::vector<int> m_x;
    std::vector<std::int64_t> m_partial;
    std::vector<std::vector<int>> m_found;
    bool m_find_one = false;
    const std::atomic<bool>* m_abort = nullptr;
};

std::vector<SwitchingVector> search(const SeidelMatrix& s, std::int64_t theta, const SearchOptions& options,
                                    bool find_one)
{
    const Index n = s.order();
    if (n > options.max_order)
        throw BudgetExceeded("order " + std::to_string(n) + " exceeds the search limit " +
                             std::to_string(options.max_order));
    if (mod(theta - (n - 1), 2) != 0)
        return {};

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

    // Prefix tasks: sign 0 is +1, the next `depth` signs enumerate all patterns.
    Index depth = 0;
    if (threads > 1) {
        while ((Index{1} << depth) < Index{8} * threads && depth + 1 < n)
            ++depth;
    }
    const std::size_t task_count = std::size_t{1} << depth;
    std::vector<std::vector<int>> prefixes(task_count);
    for (std::size_t task = 0; task < task_count; ++task) {
        std::vector<int> prefix{1};
        for (Index b = depth - 1; b >= 0; --b)
            prefix.push_back((task >> b) & 1 ? -1 : 1);
        prefixes[task] = std::move(prefix);
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::atomic<std::size_t> next_task{0};
    std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
    std::vector<std::vector<std::vector<int>>> results(task_count);
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t task = next_task.fetch_add(1);
                if (task >= task_count || abort.load())
                    return;
                if (find_one && task > best_task.load())
                    continue;
                EigenvectorSearch searcher(s.matrix(), theta, nodes, options.max_nodes);
                if (!searcher.seed(prefixes[task]))
                    continue;
                searcher.run(static_cast<Index>(prefixes[task].size()), find_one, abort);
                results[task] = std::move(searcher.found());
                if (find_one && !results[task].empty()) {
                    std::size_t current = best_task.load();
                    while (task < current && !best_task.compare_exchange_weak(current, task)) {
                    }
                }
            }
        }
        catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            abort = true;
        }
    };

    if (threads <= 1 || task_count == 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(threads, task_count); ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<SwitchingVector> out;
    for (auto& per_task : results) {
        for (auto& x : per_task) {
            out.emplace_back(std::move(x));
            if (find_one)
                return out;
        }
    }
    return out;
}

Graph witness_graph(const SeidelMatrix& s, const SwitchingVector& v) { return graph_from_seidel(s, v); }

} // namespace

std::vector<SwitchingVector> regular_eigenvectors(const SeidelMatrix& s, std::int64_t theta,
                                                  const SearchOptions& options)
{
    return search(s, theta, options, false);
}

bool is_connected(const Graph& g)
{
    const Index n = g.order();
    if (n <= 1)
        return true;
    boost::dynamic_bitset<> seen(static_cast<std::size_t>(n));
    std::vector<Index> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        const Index v = stack.back();
        stack.pop_back();
        const auto fresh = g.neighbours(v) - seen;
        for (auto u = fresh.find_first(); u != boost::dynamic_bitset<>::npos; u = fresh.find_next(u)) {
            seen.set(u);
            stack.push_back(static_cast<Index>(u));
        }
    }
    return seen.all();
}

std::vector<RegularWitness> find_regular_graphs(const SeidelMatrix& s, const SearchOptions& options)
{
    const Index n = s.order();
    if (n > options.max_order)
        throw BudgetExceeded("order " + std::to_string(n) + " exceeds the search limit " +
                             std::to_string(options.max_order));
    std::vector<RegularWitness> out;
    for (std::int64_t theta : spectrum(s).integer_eigenvalues()) {
        for (auto& x : search(s, theta, options, false)) {
            RegularWitness w;
            const Graph g = witness_graph(s, x);
            w.switching = std::move(x);
            w.theta = theta;
            w.valency = (n - 1 - theta) / 2;
            w.disconnected = !is_connected(g);
            if (options.graph_spectra)
                w.graph_spectrum = spectrum(g.adjacency());
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end(), [](const RegularWitness& a, const RegularWitness& b) {
        return a.switching < b.switching;
    });
    return out;
}

std::optional<SwitchingVector> regular_eigenspace_search(const SeidelMatrix& s, std::int64_t theta,
                                                         const SearchOptions& options)
{
    if (char_poly(s).evaluate(theta) != 0)
        throw PreconditionError(std::to_string(theta) + " is not an eigenvalue");
    auto found = search(s, theta, options, true);
    if (found.empty())
        return std::nullopt;
    return found.front();
}

std::optional<SwitchingVector> regular_eigenspace_search(const SeidelMatrix& s, const Eigenvalue& theta,
                                                         const SearchOptions& options)
{
    if (!is_integer(theta))
        throw NotApplicable("an irrational eigenvalue never has a +-1 eigenvector");
    return regular_eigenspace_search(s, std::get<std::int64_t>(theta), options);
}

namespace {

// lambda -> -1 - 2 lambda
Eigenvalue graph_to_seidel(const Eigenvalue& e)
{
    if (is_integer(e))
        return -1 - 2 * std::get<std::int64_t>(e);
    const auto& pair = std::get<QuadraticPair>(e);
    return QuadraticPair{2 - 2 * pair.p, 1 - 2 * pair.p + 4 * pair.q};
}

// theta -> (-1 - theta) / 2; throws when the image is not an algebraic integer.
Eigenvalue seidel_to_graph(const Eigenvalue& e)
{
    if (is_integer(e)) {
        const std::int64_t theta = std::get<std::int64_t>(e);
        if (mod(theta, 2) == 0)
            throw PreconditionError("eigenvalue " + std::to_string(theta) + " maps to a non-integer");
        return (-1 - theta) / 2;
    }
    const auto& pair = std::get<QuadraticPair>(e);
    if (mod(pair.p, 2) != 0 || mod(1 - pair.p + pair.q, 4) != 0)
        throw PreconditionError("pair " + to_string(e) + " maps to non-integral algebraic numbers");
    return QuadraticPair{1 - pair.p / 2, (1 - pair.p + pair.q) / 4};
}

void require_explicit(const Spectrum& s)
{
    if (s.has_residual())
        throw NotApplicable("spectrum has an unfactored residual");
}

} // namespace

Spectrum seidel_spectrum_of_regular_graph(const Spectrum& graph_spectrum, std::int64_t n, std::int64_t k)
{
    require_explicit(graph_spectrum);
    if (graph_spectrum.order() != n)
        throw PreconditionError("graph spectrum has " + std::to_string(graph_spectrum.order()) +
                                " eigenvalues, expected " + std::to_string(n));
    if (k < 0 || k > n - 1 || graph_spectrum.multiplicity(k) < 1)
        throw PreconditionError("valency " + std::to_string(k) + " is not a graph eigenvalue");
    std::vector<SpectrumEntry> entries;
    for (const auto& entry : graph_spectrum.entries()) {
        std::int64_t m = entry.multiplicity;
        if (entry.value == Eigenvalue{k})
            --m;
        entries.push_back({graph_to_seidel(entry.value), m});
    }
    entries.push_back({n - 1 - 2 * k, 1});
    return Spectrum(std::move(entries));
}

Spectrum regular_graph_spectrum_from_seidel(const Spectrum& seidel_spectrum, std::int64_t theta0)
{
    require_explicit(seidel_spectrum);
    const std::int64_t n = seidel_spectrum.order();
    const std::int64_t m0 = seidel_spectrum.multiplicity(theta0);
    if (m0 < 1)
        throw PreconditionError(std::to_string(theta0) + " is not an eigenvalue");
    if (!parity_conditions(n, theta0))
        throw PreconditionError("eigenvalue " + std::to_string(theta0) + " fails the regular parity conditions for n = " +
                                std::to_string(n));
    std::vector<SpectrumEntry> entries;
    for (const auto& entry : seidel_spectrum.entries()) {
        const std::int64_t m = entry.value == Eigenvalue{theta0} ? entry.multiplicity - 1 : entry.multiplicity;
        if (m > 0)
            entries.push_back({seidel_to_graph(entry.value), m});
    }
    entries.push_back({(n - 1 - theta0) / 2, 1});
    return Spectrum(std::move(entries));
}

std::optional<std::pair<std::int64_t, std::int64_t>> three_eigenvalue_symmetric_functions(const Spectrum& spectrum)
{
    if (spectrum.has_residual() || spectrum.distinct_explicit() != 3)
        return std::nullopt;
    std::int64_t e1 = 0;
    std::int64_t e3 = 1;
    for (const auto& entry : spectrum.entries()) {
        if (is_integer(entry.value)) {
            e1 += std::get<std::int64_t>(entry.value);
            e3 *= std::get<std::int64_t>(entry.value);
        }
        else {
            const auto& pair = std::get<QuadraticPair>(entry.value);
            e1 += pair.sum();
            e3 *= pair.product();
        }
    }
    return std::make_pair(e1, e3);
}

std::vector<ThreeWalkVerdict> three_walk_condition(std::int64_t n, std::int64_t e1, std::int64_t e3,
                                                   const std::vector<std::int64_t>& thetas)
{
    std::vector<ThreeWalkVerdict> out;
    for (std::int64_t theta : thetas) {
        if (mod(n - 1 - theta, 2) != 0)
            continue;
        ThreeWalkVerdict v;
        v.theta = theta;
        v.k = (n - 1 - theta) / 2;
        const BigInt bn = n;
        const BigInt bk = v.k;
        v.triangles_times_16 = (bn - 1) * (bn - 2) - 6 * bk * (bn - 2 * bk) - BigInt(e1) * (bn - 1) - BigInt(e3);
        v.feasible = v.triangles_times_16 >= 0 && v.triangles_times_16 % 16 == 0;
        out.push_back(v);
    }
    return out;
}

std::vector<ThreeWalkVerdict> three_walk_condition(const Spectrum& spectrum)
{
    const auto symmetric = three_eigenvalue_symmetric_functions(spectrum);
    if (!symmetric)
        throw NotApplicable("three-walk condition needs exactly three distinct eigenvalues");
    return three_walk_condition(spectrum.order(), symmetric->first, symmetric->second,
                                spectrum.integer_eigenvalues());
}

bool parity_conditions(std::int64_t n, std::int64_t nu)
{
    if (mod(nu - (n - 1), 2) != 0)
        return false;
    if (n % 2 == 1 && mod(nu - (n - 1), 4) != 0)
        return false;
    return true;
}

Spectrum srg_correspondence(const Spectrum& seidel_spectrum, std::optional<std::int64_t> nu)
{
    require_explicit(seidel_spectrum);
    if (seidel_spectrum.distinct_explicit() != 3)
        throw PreconditionError("expected exactly three distinct eigenvalues");
    const std::int64_t n = seidel_spectrum.order();
    if (nu) {
        if (seidel_spectrum.multiplicity(*nu) != 1)
            throw PreconditionError(std::to_string(*nu) + " is not a simple eigenvalue");
        return regular_graph_spectrum_from_seidel(seidel_spectrum, *nu);
    }
    std::vector<std::int64_t> simple;
    for (const auto& entry : seidel_spectrum.entries())
        if (is_integer(entry.value) && entry.multiplicity == 1)
            simple.push_back(std::get<std::int64_t>(entry.value));
    if (simple.size() > 1)
        std::erase_if(simple, [n](std::int64_t v) { return !parity_conditions(n, v); });
    if (simple.size() != 1)
        throw PreconditionError(simple.empty() ? "no simple integer eigenvalue" : "ambiguous simple eigenvalue");
    return regular_graph_spectrum_from_seidel(seidel_spectrum, simple.front());
}

Spectrum irrational_three_ev_form(std::int64_t n)
{
    if (n % 2 == 0)
        throw PreconditionError("irrational three-eigenvalue form needs odd n");
    if (is_perfect_square(n))
        throw NotApplicable("n = " + std::to_string(n) + " is a square: the eigenvalues would be rational");
    return Spectrum({{std::int64_t{0}, 1}, {QuadraticPair{0, -n}, (n - 1) / 2}});
}

} // namespace seidel
