#include "seidel/feasibility.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include "seidel/bounds.hpp"
#include "seidel/regular.hpp"
#include "seidel/spectra.hpp"
#include "seidel/structure.hpp"

namespace seidel {

// ---- facts ----

const char* Facts::default_text()
{
    return "# Strongly regular graphs shown not to exist.\n"
           "graph-spectrum 16^1,2^32,-5^16 nonexistent Bussemaker, Haemers, Mathon, Wilbrink 1989 (srg(49,16,3,6))\n"
           "graph-spectrum 32^1,2^56,-8^18 nonexistent Azarija, Marc 2015 (srg(75,32,10,16))\n"
           "graph-spectrum 40^1,2^75,-10^19 nonexistent Azarija, Marc 2016 (srg(95,40,12,20))\n";
}

Facts Facts::parse(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<Fact> facts;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string kind;
        if (!(words >> kind))
            continue;
        std::string spectrum_text;
        std::string status;
        if (kind != "graph-spectrum" || !(words >> spectrum_text >> status) || status != "nonexistent")
            throw InputError("facts line " + std::to_string(line_no) +
                             ": expected \"graph-spectrum <spectrum> nonexistent <citation>\"");
        std::string citation;
        std::getline(words, citation);
        citation.erase(0, citation.find_first_not_of(" \t"));
        try {
            facts.push_back({parse_spectrum(spectrum_text), citation});
        }
        catch (const InputError& e) {
            throw InputError("facts line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return Facts(std::move(facts));
}

Facts Facts::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open facts file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

Facts Facts::defaults() { return parse(default_text()); }

const Fact* Facts::find(const Spectrum& graph_spectrum) const
{
    for (const auto& fact : m_facts)
        if (fact.graph_spectrum == graph_spectrum)
            return &fact;
    return nullptr;
}

// ---- enums ----

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
    }
    return "n/a";
}

std::string to_string(Effect e)
{
    switch (e) {
    case Effect::None: return "none";
    case Effect::Nonexistence: return "nonexistence";
    case Effect::NoRegular: return "no-regular";
    case Effect::RegularForced: return "regular-forced";
    }
    return "none";
}

std::string to_string(Overall o)
{
    switch (o) {
    case Overall::Infeasible: return "Infeasible";
    case Overall::RegularImpossible: return "RegularImpossible";
    case Overall::RegularForced: return "RegularForced";
    case Overall::Open: return "Open";
    }
    return "Open";
}

namespace {

template <typename E>
E parse_enum(const std::string& text, std::initializer_list<E> values, const char* what)
{
    for (E v : values)
        if (to_string(v) == text)
            return v;
    throw InputError(std::string("unknown ") + what + " '" + text + "'");
}

} // namespace

Verdict parse_verdict(const std::string& text)
{
    return parse_enum(text, {Verdict::Pass, Verdict::Fail, Verdict::NotApplicable}, "verdict");
}

Effect parse_effect(const std::string& text)
{
    return parse_enum(text, {Effect::None, Effect::Nonexistence, Effect::NoRegular, Effect::RegularForced}, "effect");
}

Overall parse_overall(const std::string& text)
{
    return parse_enum(text, {Overall::Infeasible, Overall::RegularImpossible, Overall::RegularForced, Overall::Open},
                      "overall verdict");
}

std::vector<std::string> FeasibilityReport::decisive_rules() const
{
    std::vector<std::string> out;
    for (const auto& r : records) {
        const bool decisive = (r.verdict == Verdict::Fail && r.effect != Effect::None) ||
                              (r.verdict == Verdict::Pass && r.effect == Effect::RegularForced);
        if (decisive && std::find(out.begin(), out.end(), r.id) == out.end())
            out.push_back(r.id);
    }
    return out;
}

const ConditionRecord* FeasibilityReport::first_nonexistence() const
{
    for (const auto& r : records)
        if (r.verdict == Verdict::Fail && r.effect == Effect::Nonexistence)
            return &r;
    return nullptr;
}

// ---- battery ----

namespace {

std::string join(const std::vector<std::int64_t>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::string str(const BigInt& v) { return v.str(); }

class Battery
{
public:
    Battery(const Spectrum& spectrum, const Facts& facts) : m_s(spectrum), m_facts(facts), m_n(spectrum.order())
    {
        for (const auto& e : m_s.entries())
            if (!is_integer(e.value))
                m_has_pair = true;
        m_distinct = m_s.distinct_explicit();
        m_ints = m_s.integer_eigenvalues();
    }

    FeasibilityReport run()
    {
        m_report.spectrum = m_s.to_string();
        m_report.n = m_n;
        if (m_s.has_residual()) {
            add("explicit-spectrum", "battery needs every eigenvalue explicitly", Verdict::NotApplicable);
            finish();
            return m_report;
        }
        trace_identities();
        mod2();
        odd_order_simple();
        odd_order_irrational();
        regular_parity();
        three_walk();
        simple_eigenvalue();
        pair_diagonals();
        forced_consistency();
        deletion();
        trace_cube();
        relative();
        finish();
        return m_report;
    }

private:
    ConditionRecord& add(std::string id, std::string citation, Verdict verdict, Effect effect = Effect::None)
    {
        m_report.records.push_back({std::move(id), std::move(citation), verdict, effect, {}});
        return m_report.records.back();
    }

    bool three_eigenvalues() const { return m_distinct == 3; }

    void trace_identities()
    {
        const BigInt p1 = m_s.power_sum(1);
        const BigInt p2 = m_s.power_sum(2);
        const bool ok = p1 == 0 && p2 == BigInt(m_n) * (m_n - 1);
        auto& r = add("trace-identities", "trace S = 0 and trace S^2 = n(n-1)", ok ? Verdict::Pass : Verdict::Fail,
                      ok ? Effect::None : Effect::Nonexistence);
        r.data = {{"trace", str(p1)}, {"trace_square", str(p2)}, {"expected_trace_square", std::to_string(m_n * (m_n - 1))}};
    }

    void mod2()
    {
        const bool ok = mod2_charpoly_matches(m_s.characteristic_polynomial());
        auto& r = add("mod2-charpoly", "characteristic polynomial is (x+1)^n for even n and x(x+1)^(n-1) for odd n mod 2",
                      ok ? Verdict::Pass : Verdict::Fail, ok ? Effect::None : Effect::Nonexistence);
        std::vector<std::int64_t> even;
        for (std::int64_t v : m_ints)
            if (mod(v, 2) == 0)
                even.push_back(v);
        r.data = {{"parity", m_n % 2 == 0 ? "even" : "odd"}, {"even_eigenvalues", join(even)}};
    }

    void odd_order_simple()
    {
        const char* citation = "odd order with three distinct eigenvalues has a simple eigenvalue";
        if (m_n % 2 == 0 || !three_eigenvalues()) {
            add("odd-order-simple-eigenvalue", citation, Verdict::NotApplicable);
            return;
        }
        const bool ok = std::any_of(m_s.entries().begin(), m_s.entries().end(),
                                    [](const SpectrumEntry& e) { return e.multiplicity == 1; });
        add("odd-order-simple-eigenvalue", citation, ok ? Verdict::Pass : Verdict::Fail,
            ok ? Effect::None : Effect::Nonexistence);
    }

    void odd_order_irrational()
    {
        const char* citation = "odd order, three eigenvalues, one irrational: spectrum is {0^1, (+-sqrt n)^((n-1)/2)}";
        if (m_n % 2 == 0 || !three_eigenvalues() || !m_has_pair) {
            add("odd-order-irrational-form", citation, Verdict::NotApplicable);
            return;
        }
        bool ok = false;
        try {
            ok = m_s == irrational_three_ev_form(m_n);
        }
        catch (const NotApplicable&) {
            ok = false;
        }
        auto& r = add("odd-order-irrational-form", citation, ok ? Verdict::Pass : Verdict::Fail,
                      ok ? Effect::None : Effect::Nonexistence);
        r.data = {{"n", std::to_string(m_n)}};
    }

    void regular_parity()
    {
        for (std::int64_t v : m_ints)
            if (parity_conditions(m_n, v))
                m_parity_ok.push_back(v);
        const bool ok = !m_parity_ok.empty();
        auto& r = add("regular-parity", "a regular eigenspace needs an integer nu = n-1 mod 2 (and mod 4 for odd n)",
                      ok ? Verdict::Pass : Verdict::Fail, ok ? Effect::None : Effect::NoRegular);
        r.data = {{"candidates", join(m_parity_ok)}};
    }

    void three_walk()
    {
        const char* citation = "number of triangles through a vertex of a regular graph in the class is a nonnegative integer";
        const auto symmetric = three_eigenvalue_symmetric_functions(m_s);
        if (!symmetric) {
            add("three-walk", citation, Verdict::NotApplicable);
            return;
        }
        m_three_walk_ran = true;
        const auto verdicts = three_walk_condition(m_n, symmetric->first, symmetric->second, m_ints);
        auto& data = m_report.records.emplace_back().data;
        std::vector<std::int64_t> feasible;
        for (const auto& v : verdicts) {
            data.emplace_back("theta=" + std::to_string(v.theta),
                              "k=" + std::to_string(v.k) + " numerator=" + str(v.triangles_times_16) +
                                  (v.feasible ? " feasible" : " infeasible"));
            if (v.feasible && parity_conditions(m_n, v.theta))
                feasible.push_back(v.theta);
        }
        m_walk_feasible = feasible;
        auto& r = m_report.records.back();
        r.id = "three-walk";
        r.citation = citation;
        r.verdict = feasible.empty() ? Verdict::Fail : Verdict::Pass;
        r.effect = feasible.empty() ? Effect::NoRegular : Effect::None;
        data.insert(data.begin(), {{"e1", std::to_string(symmetric->first)}, {"e3", std::to_string(symmetric->second)}});
    }

    void force(std::int64_t nu)
    {
        if (std::find(m_forced.begin(), m_forced.end(), nu) == m_forced.end())
            m_forced.push_back(nu);
    }

    void simple_eigenvalue()
    {
        const char* citation = "a simple eigenvalue of a three-eigenvalue Seidel matrix has a regular eigenspace";
        if (!three_eigenvalues()) {
            add("simple-eigenvalue-srg", citation, Verdict::NotApplicable);
            return;
        }
        bool any = false;
        for (const auto& e : m_s.entries()) {
            if (e.multiplicity != 1)
                continue;
            any = true;
            if (is_integer(e.value)) {
                const std::int64_t nu = std::get<std::int64_t>(e.value);
                force(nu);
                auto& r = add("simple-eigenvalue-srg", citation, Verdict::Pass, Effect::RegularForced);
                r.data = {{"nu", std::to_string(nu)}};
            }
            else {
                auto& r = add("simple-eigenvalue-srg", citation, Verdict::Fail, Effect::Nonexistence);
                r.data = {{"nu", to_string(e.value)}, {"reason", "a regular eigenspace belongs to an integer eigenvalue"}};
            }
        }
        if (!any)
            add("simple-eigenvalue-srg", citation, Verdict::NotApplicable);
    }

    void pair_diagonals()
    {
        if (m_n % 2 == 1 || !three_eigenvalues()) {
            add("pair-diag", "classification by |n-1+lambda mu| (even order, three eigenvalues)", Verdict::NotApplicable);
            return;
        }
        for (const auto& third : m_s.entries()) {
            if (!is_integer(third.value))
                continue;
            const std::int64_t nu = std::get<std::int64_t>(third.value);
            std::vector<Eigenvalue> members;
            for (const auto& e : m_s.entries())
                if (!(e.value == third.value))
                    members.push_back(e.value);
            EigenPair pair;
            if (members.size() == 2 && is_integer(members[0]) && is_integer(members[1]))
                pair = EigenPair::integers(std::get<std::int64_t>(members[0]), std::get<std::int64_t>(members[1]));
            else if (members.size() == 1)
                pair = EigenPair::conjugates(std::get<QuadraticPair>(members[0]));
            else
                continue;
            const auto result = small_diag_classify(m_n, pair.product, third.multiplicity);
            using Kind = SmallDiagResult::Kind;
            Verdict verdict = Verdict::NotApplicable;
            Effect effect = Effect::None;
            if (result.kind == Kind::Regular) {
                verdict = Verdict::Pass;
                effect = Effect::RegularForced;
                force(nu);
            }
            else if (result.kind == Kind::Infeasible || result.kind == Kind::Impossible) {
                verdict = Verdict::Fail;
                effect = Effect::Nonexistence;
            }
            auto& r = add(result.rule.empty() ? "pair-diag" : result.rule, diag_citation(result.rule), verdict, effect);
            r.data = {{"pair", pair.to_string()}, {"nu", std::to_string(nu)}, {"D", std::to_string(result.d)},
                      {"c", std::to_string(result.c)}, {"detail", result.reason}};
            if (result.six) {
                r.data.emplace_back("q", std::to_string(result.six->q));
                r.data.emplace_back("q_divides_n", result.six->divides ? "yes" : "no");
                if (result.six->inner_spectrum)
                    r.data.emplace_back("inner_spectrum", result.six->inner_spectrum->to_string());
            }
        }
    }

    static std::string diag_citation(const std::string& rule)
    {
        if (rule == "zero-diag")
            return "|n-1+lambda mu| = 0 leaves at most two eigenvalues";
        if (rule == "two-diag")
            return "|n-1+lambda mu| = 2: M is switching equivalent to 2J";
        if (rule == "four-diag")
            return "|n-1+lambda mu| = 4: M is switching equivalent to 4 I_c (x) J_(n/c)";
        if (rule == "six-diag")
            return "|n-1+lambda mu| = 6: (q+8)(9-c) = 72 with q | n, so c in {1,3,5,6,7}";
        if (rule == "prime-rank2")
            return "c = 2 and |n-1+lambda mu|/2^r a prime 3 mod 4: the nu-eigenspace is regular";
        return "|n-1+lambda mu| outside the classified range";
    }

    void forced_consistency()
    {
        for (std::int64_t nu : m_forced) {
            const bool parity = parity_conditions(m_n, nu);
            const bool walk = !m_three_walk_ran ||
                              std::find(m_walk_feasible.begin(), m_walk_feasible.end(), nu) != m_walk_feasible.end();
            const bool ok = parity && walk;
            auto& r = add("forced-regular-consistency", "a forced regular eigenspace must pass parity and the 3-walk count",
                          ok ? Verdict::Pass : Verdict::Fail, ok ? Effect::None : Effect::Nonexistence);
            r.data = {{"nu", std::to_string(nu)}, {"parity", parity ? "ok" : "fails"}, {"three_walk", walk ? "ok" : "fails"}};
            if (!ok)
                continue;
            Spectrum graph;
            try {
                graph = regular_graph_spectrum_from_seidel(m_s, nu);
            }
            catch (const PreconditionError& e) {
                // the regular graph would need eigenvalues that are not algebraic integers
                r.verdict = Verdict::Fail;
                r.effect = Effect::Nonexistence;
                r.data.emplace_back("graph_spectrum", e.what());
                continue;
            }
            r.data.emplace_back("graph_spectrum", graph.to_string());
            lookup_fact(graph, "nu=" + std::to_string(nu));
        }
    }

    void lookup_fact(const Spectrum& graph, const std::string& origin)
    {
        const Fact* fact = m_facts.find(graph);
        auto& r = add("srg-nonexistence-fact", fact ? fact->citation : "no recorded nonexistence for this graph spectrum",
                      fact ? Verdict::Fail : Verdict::Pass, fact ? Effect::Nonexistence : Effect::None);
        r.data = {{"graph_spectrum", graph.to_string()}, {"from", origin}};
    }

    void deletion()
    {
        const char* citation = "deleting a vertex from {l^a, m^b} leaves {l^(a-1), m^(b-1), (l+m)^1}";
        if (m_distinct != 2 || m_ints.size() != 2) {
            add("two-eigenvalue-deletion", citation, Verdict::NotApplicable);
            return;
        }
        const std::int64_t l = m_ints[0];
        const std::int64_t m = m_ints[1];
        const Spectrum derived({{l, m_s.multiplicity(l) - 1}, {m, m_s.multiplicity(m) - 1}, {l + m, 1}});
        if (derived.distinct_explicit() != 3 || derived.multiplicity(l + m) != 1 || !parity_conditions(m_n - 1, l + m)) {
            auto& r = add("two-eigenvalue-deletion", citation, Verdict::NotApplicable);
            r.data = {{"derived_spectrum", derived.to_string()}};
            return;
        }
        Spectrum graph;
        try {
            graph = regular_graph_spectrum_from_seidel(derived, l + m);
        }
        catch (const PreconditionError& e) {
            auto& r = add("two-eigenvalue-deletion", citation, Verdict::NotApplicable);
            r.data = {{"derived_spectrum", derived.to_string()}, {"graph_spectrum", e.what()}};
            return;
        }
        const Fact* fact = m_facts.find(graph);
        auto& r = add("two-eigenvalue-deletion", fact ? std::string(citation) + "; " + fact->citation : citation,
                      fact ? Verdict::Fail : Verdict::Pass, fact ? Effect::Nonexistence : Effect::None);
        r.data = {{"derived_spectrum", derived.to_string()}, {"graph_spectrum", graph.to_string()}};
    }

    void trace_cube()
    {
        const char* citation = "diagonal of sigma S^3 is bounded below when sigma p(S) is PSD";
        TraceCubeResult result;
        try {
            result = trace_cube_test(m_s);
        }
        catch (const PreconditionError&) {
            add("trace-cube", citation, Verdict::NotApplicable);
            return;
        }
        auto& r = add("trace-cube", citation, result.holds ? Verdict::Pass : Verdict::Fail,
                      result.holds ? Effect::None : Effect::Nonexistence);
        r.data = {{"theta0", std::to_string(result.theta0)}, {"sigma", std::to_string(result.sigma)},
                  {"lhs", str(result.lhs)}, {"rhs", str(result.rhs)}, {"cube_sum", str(result.cube_sum)},
                  {"parity_value", std::to_string(result.parity_value)}};
    }

    void relative()
    {
        const char* rb_citation = "n <= d(l0^2-1)/(l0^2-d) when l0^2 >= d+2";
        const char* mlb_citation = "dim ker(S - mu I) is at least the sum-of-squares deficit d - sum (lambda_i - mu)^2";
        const SpectrumEntry* smallest = nullptr;
        for (const auto& e : m_s.entries())
            if (!smallest || compare(smallest_root(e.value), smallest_root(smallest->value)) < 0)
                smallest = &e;
        if (!smallest || !is_integer(smallest->value)) {
            add("relative-bound", rb_citation, Verdict::NotApplicable);
            add("multiplicity-lower-bound", mlb_citation, Verdict::NotApplicable);
            return;
        }
        const auto& first = *smallest;
        const std::int64_t l0 = std::get<std::int64_t>(first.value);
        const std::int64_t d = m_n - first.multiplicity;
        if (d < 1 || l0 * l0 < d + 2) {
            auto& r = add("relative-bound", rb_citation, Verdict::NotApplicable);
            r.data = {{"lambda0", std::to_string(l0)}, {"d", std::to_string(d)}};
            add("multiplicity-lower-bound", mlb_citation, Verdict::NotApplicable);
            return;
        }
        const auto rb = relative_bound(d, l0);
        const bool ok = Rational(m_n) <= rb.bound;
        auto& r = add("relative-bound", rb_citation, ok ? Verdict::Pass : Verdict::Fail,
                      ok ? Effect::None : Effect::Nonexistence);
        r.data = {{"lambda0", std::to_string(l0)}, {"d", std::to_string(d)}, {"bound", to_string(rb.bound)}};
        if (rb.equality_spectrum && *rb.equality_spectrum == m_s)
            r.data.emplace_back("equality", "yes");
        if (!ok) {
            add("multiplicity-lower-bound", mlb_citation, Verdict::NotApplicable);
            return;
        }
        std::optional<RelativeBoundGap> worst;
        for (std::int64_t mu = l0 + 1; mu <= m_n - 1; ++mu) {
            auto gap = multiplicity_lower_bound(d, l0, m_n, mu);
            if (m_s.multiplicity(mu) < gap.rhs) {
                worst = gap;
                break;
            }
        }
        auto& m = add("multiplicity-lower-bound", mlb_citation, worst ? Verdict::Fail : Verdict::Pass,
                      worst ? Effect::Nonexistence : Effect::None);
        if (worst)
            m.data = {{"mu", std::to_string(worst->mu)}, {"required", std::to_string(worst->rhs)},
                      {"multiplicity", std::to_string(m_s.multiplicity(worst->mu))}};
    }

    void finish()
    {
        bool nonexistence = false;
        bool no_regular = false;
        bool forced = false;
        for (const auto& r : m_report.records) {
            nonexistence |= r.verdict == Verdict::Fail && r.effect == Effect::Nonexistence;
            no_regular |= r.verdict == Verdict::Fail && r.effect == Effect::NoRegular;
            forced |= r.verdict == Verdict::Pass && r.effect == Effect::RegularForced;
        }
        if (nonexistence)
            m_report.overall = Overall::Infeasible;
        else if (no_regular)
            m_report.overall = Overall::RegularImpossible;
        else if (forced)
            m_report.overall = Overall::RegularForced;
        else
            m_report.overall = Overall::Open;
        m_report.regular = forced ? 'Y' : (no_regular ? 'N' : '?');
        m_report.exists = nonexistence ? 'N' : '?';
    }

    const Spectrum& m_s;
    const Facts& m_facts;
    std::int64_t m_n;
    bool m_has_pair = false;
    std::int64_t m_distinct = 0;
    std::vector<std::int64_t> m_ints;
    std::vector<std::int64_t> m_parity_ok;
    bool m_three_walk_ran = false;
    std::vector<std::int64_t> m_walk_feasible;
    std::vector<std::int64_t> m_forced;
    FeasibilityReport m_report;
};

} // namespace

FeasibilityReport run_battery(const Spectrum& spectrum, const Facts& facts)
{
    return Battery(spectrum, facts).run();
}

// ---- tables ----

const std::vector<std::pair<std::int64_t, std::string>>& table2_spectra()
{
    static const std::vector<std::pair<std::int64_t, std::string>> rows{
        {14, "-5^14,3^7,7^7"},   {14, "-5^16,5^9,7^5"},    {16, "-5^24,5^6,9^10"},  {16, "-5^24,7^15,15^1"},
        {16, "-5^26,7^7,9^9"},   {17, "-5^31,7^8,11^9"},   {17, "-5^32,9^16,16^1"}, {18, "-5^30,3^6,11^12"},
        {18, "-5^30,7^16,19^2"}, {18, "-5^36,7^9,13^9"},   {18, "-5^42,11^15,15^3"}, {19, "-5^53,13^16,19^3"},
        {19, "-5^56,10^1,15^18"}, {20, "-5^70,13^5,19^15"}, {20, "-5^75,14^1,19^19"},
    };
    return rows;
}

std::vector<Table2Row> table2_report(const Facts& facts, unsigned threads)
{
    const auto& input = table2_spectra();
    auto row_for = [&facts](const std::pair<std::int64_t, std::string>& in) {
        const auto report = run_battery(parse_spectrum(in.second), facts);
        return Table2Row{report.n, in.first, report.spectrum, report.regular, report.exists, report.decisive_rules()};
    };
    std::vector<Table2Row> rows;
    if (threads <= 1) {
        for (const auto& in : input)
            rows.push_back(row_for(in));
        return rows;
    }
    std::vector<std::future<Table2Row>> futures;
    for (const auto& in : input)
        futures.push_back(std::async(std::launch::async, row_for, in));
    for (auto& f : futures)
        rows.push_back(f.get());
    return rows;
}

std::vector<Table3Row> table3_report(std::int64_t d_from, std::int64_t d_to, std::int64_t lambda0, const Facts& facts)
{
    std::vector<Table3Row> rows;
    for (std::int64_t d = d_from; d <= d_to; ++d) {
        Table3Row row;
        row.d = d;
        row.lambda0 = lambda0;
        if (lambda0 * lambda0 <= d) {
            row.rule = "vacuous";
            rows.push_back(row);
            continue;
        }
        const auto forced = forced_spectrum_even_mu(d, lambda0);
        row.floor_bound = forced.n;
        row.tie = forced.tie;
        if (forced.spectrum)
            row.spectrum = forced.spectrum->to_string();
        switch (forced.kind) {
        case ForcedSpectrum::Kind::Nonexistent:
            row.exists = 'N';
            row.rule = "mod2-charpoly";
            break;
        case ForcedSpectrum::Kind::NotForced:
            row.rule = "not-forced";
            break;
        case ForcedSpectrum::Kind::Forced: {
            const auto report = run_battery(*forced.spectrum, facts);
            if (const auto* failing = report.first_nonexistence()) {
                row.exists = 'N';
                row.rule = failing->id;
            }
            else {
                const auto rb = relative_bound(d, lambda0);
                const bool equality = rb.equality_spectrum && *rb.equality_spectrum == *forced.spectrum;
                row.rule = equality ? "relative-bound-equality" : "open";
            }
            break;
        }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string render_table2(const std::vector<Table2Row>& rows)
{
    std::ostringstream out;
    out << std::left << std::setw(5) << "n" << std::setw(5) << "d" << std::setw(22) << "spectrum" << std::setw(9)
        << "regular" << std::setw(8) << "exists" << "rules\n";
    for (const auto& r : rows) {
        std::string rules;
        for (std::size_t i = 0; i < r.rules.size(); ++i)
            rules += (i ? "," : "") + r.rules[i];
        out << std::setw(5) << r.n << std::setw(5) << r.d << std::setw(22) << r.spectrum << std::setw(9) << r.regular
            << std::setw(8) << r.exists << rules << '\n';
    }
    return out.str();
}

std::string render_table3(const std::vector<Table3Row>& rows)
{
    std::ostringstream out;
    out << std::left << std::setw(5) << "d" << std::setw(9) << "lambda0" << std::setw(7) << "n" << std::setw(28)
        << "spectrum" << std::setw(8) << "exists" << "rule\n";
    for (const auto& r : rows)
        out << std::setw(5) << r.d << std::setw(9) << r.lambda0 << std::setw(7) << r.floor_bound << std::setw(28)
            << r.spectrum.value_or("-") << std::setw(8) << r.exists << r.rule << '\n';
    return out.str();
}

std::string render_report(const FeasibilityReport& report)
{
    std::ostringstream out;
    out << "spectrum: " << report.spectrum << "\n"
        << "n: " << report.n << "\n"
        << "overall: " << to_string(report.overall) << "  regular: " << report.regular
        << "  exists: " << report.exists << "\n";
    for (const auto& r : report.records) {
        out << "  " << std::left << std::setw(28) << r.id << std::setw(5) << to_string(r.verdict) << ' '
            << std::setw(15) << to_string(r.effect) << r.citation << '\n';
        for (const auto& [key, value] : r.data)
            out << "      " << key << " = " << value << '\n';
    }
    return out.str();
}

std::vector<LineBound> load_line_bounds(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::vector<LineBound> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream words(line);
        LineBound b;
        if (!(words >> b.d >> b.lower >> b.upper))
            throw InputError("malformed line bound '" + line + "'");
        out.push_back(b);
    }
    return out;
}

std::int64_t computed_upper_bound(std::int64_t d, std::int64_t lambda0, const Facts& facts)
{
    const auto forced = forced_spectrum_even_mu(d, lambda0);
    if (forced.kind == ForcedSpectrum::Kind::Nonexistent)
        return forced.n - 1;
    if (forced.kind == ForcedSpectrum::Kind::Forced && run_battery(*forced.spectrum, facts).overall == Overall::Infeasible)
        return forced.n - 1;
    return forced.n;
}

} // namespace seidel
