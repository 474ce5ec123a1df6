#include "seidel/report_json.hpp"

#include <sstream>

#include "seidel/spectra.hpp"

namespace seidel {

AnalyzeReport analyze(const SeidelMatrix& s)
{
    AnalyzeReport r;
    r.order = s.order();
    const Spectrum spec = spectrum(s);
    r.spectrum = spec.to_string();
    r.distinct_eigenvalues = distinct_eigenvalue_count(s);
    try {
        const LineSystemParams p = line_params(s);
        r.d = p.d;
        r.smallest = to_string(p.smallest);
        r.alpha = p.alpha_string();
    }
    catch (const PreconditionError&) {
    }
    catch (const NotApplicable&) {
    }
    const Mod2Class m = mod2_charpoly_class(s);
    r.mod2_parity = m.parity == Mod2Class::Parity::Even ? "even" : "odd";
    r.mod2_matches = m.matches;
    if (auto e = euler_switch(s))
        r.euler_switch = e->to_string();
    return r;
}

std::string render_analyze(const AnalyzeReport& r)
{
    std::ostringstream out;
    out << "order: " << r.order << '\n';
    out << "spectrum: " << r.spectrum << '\n';
    out << "distinct eigenvalues: " << r.distinct_eigenvalues << '\n';
    if (r.d)
        out << "line system: n=" << r.order << " d=" << *r.d << " smallest=" << *r.smallest << " alpha=" << *r.alpha
            << '\n';
    else
        out << "line system: n/a\n";
    out << "mod-2 class: " << r.mod2_parity << (r.mod2_matches ? " (matches)" : " (MISMATCH)") << '\n';
    out << "euler switch: " << (r.euler_switch ? *r.euler_switch : std::string("none")) << '\n';
    return out.str();
}

SearchReport search_report(const SeidelMatrix& s, const std::vector<RegularWitness>& witnesses)
{
    SearchReport r;
    r.order = s.order();
    BigInt total = 1;
    total <<= static_cast<unsigned>(std::max<Index>(0, s.order() - 1));
    r.switchings = total.str();
    for (const auto& w : witnesses)
        r.witnesses.push_back({w.switching.to_string(), w.valency, w.theta, w.graph_spectrum.to_string(), w.disconnected});
    return r;
}

std::string render_search(const SearchReport& r)
{
    std::ostringstream out;
    out << r.witnesses.size() << " witnesses (exhaustive over " << r.switchings << " switchings)\n";
    for (const auto& w : r.witnesses) {
        out << "  " << w.switching << " k=" << w.valency << " theta=" << w.theta;
        if (!w.graph_spectrum.empty())
            out << " graph spectrum " << w.graph_spectrum;
        if (w.disconnected)
            out << " (disconnected)";
        out << '\n';
    }
    return out.str();
}

void to_json(Json& j, const ConditionRecord& r)
{
    Json data = Json::object();
    for (const auto& [k, v] : r.data)
        data[k] = v;
    j = Json{{"id", r.id},
             {"citation", r.citation},
             {"verdict", to_string(r.verdict)},
             {"effect", to_string(r.effect)},
             {"data", data}};
}

void from_json(const Json& j, ConditionRecord& r)
{
    r.id = j.at("id").get<std::string>();
    r.citation = j.at("citation").get<std::string>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.effect = parse_effect(j.at("effect").get<std::string>());
    r.data.clear();
    for (const auto& [k, v] : j.at("data").items())
        r.data.emplace_back(k, v.get<std::string>());
}

void to_json(Json& j, const FeasibilityReport& r)
{
    j = Json{{"spectrum", r.spectrum},
             {"n", r.n},
             {"overall", to_string(r.overall)},
             {"regular", std::string(1, r.regular)},
             {"exists", std::string(1, r.exists)},
             {"records", r.records}};
}

void from_json(const Json& j, FeasibilityReport& r)
{
    r.spectrum = j.at("spectrum").get<std::string>();
    r.n = j.at("n").get<std::int64_t>();
    r.overall = parse_overall(j.at("overall").get<std::string>());
    r.regular = j.at("regular").get<std::string>().at(0);
    r.exists = j.at("exists").get<std::string>().at(0);
    r.records = j.at("records").get<std::vector<ConditionRecord>>();
}

void to_json(Json& j, const Table2Row& r)
{
    j = Json{{"n", r.n},
             {"d", r.d},
             {"spectrum", r.spectrum},
             {"regular", std::string(1, r.regular)},
             {"exists", std::string(1, r.exists)},
             {"rules", r.rules}};
}

void from_json(const Json& j, Table2Row& r)
{
    r.n = j.at("n").get<std::int64_t>();
    r.d = j.at("d").get<std::int64_t>();
    r.spectrum = j.at("spectrum").get<std::string>();
    r.regular = j.at("regular").get<std::string>().at(0);
    r.exists = j.at("exists").get<std::string>().at(0);
    r.rules = j.at("rules").get<std::vector<std::string>>();
}

void to_json(Json& j, const Table3Row& r)
{
    j = Json{{"d", r.d},
             {"lambda0", r.lambda0},
             {"floor_bound", r.floor_bound},
             {"spectrum", r.spectrum ? Json(*r.spectrum) : Json(nullptr)},
             {"exists", std::string(1, r.exists)},
             {"rule", r.rule},
             {"tie", r.tie}};
}

void from_json(const Json& j, Table3Row& r)
{
    r.d = j.at("d").get<std::int64_t>();
    r.lambda0 = j.at("lambda0").get<std::int64_t>();
    r.floor_bound = j.at("floor_bound").get<std::int64_t>();
    if (j.at("spectrum").is_null())
        r.spectrum.reset();
    else
        r.spectrum = j.at("spectrum").get<std::string>();
    r.exists = j.at("exists").get<std::string>().at(0);
    r.rule = j.at("rule").get<std::string>();
    r.tie = j.at("tie").get<bool>();
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key)
{
    if (j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

} // namespace

void to_json(Json& j, const AnalyzeReport& r)
{
    j = Json{{"order", r.order},
             {"spectrum", r.spectrum},
             {"distinct_eigenvalues", r.distinct_eigenvalues},
             {"d", optional_json(r.d)},
             {"smallest", optional_json(r.smallest)},
             {"alpha", optional_json(r.alpha)},
             {"mod2_parity", r.mod2_parity},
             {"mod2_matches", r.mod2_matches},
             {"euler_switch", optional_json(r.euler_switch)}};
}

void from_json(const Json& j, AnalyzeReport& r)
{
    r.order = j.at("order").get<std::int64_t>();
    r.spectrum = j.at("spectrum").get<std::string>();
    r.distinct_eigenvalues = j.at("distinct_eigenvalues").get<std::int64_t>();
    r.d = optional_from<std::int64_t>(j, "d");
    r.smallest = optional_from<std::string>(j, "smallest");
    r.alpha = optional_from<std::string>(j, "alpha");
    r.mod2_parity = j.at("mod2_parity").get<std::string>();
    r.mod2_matches = j.at("mod2_matches").get<bool>();
    r.euler_switch = optional_from<std::string>(j, "euler_switch");
}

void to_json(Json& j, const WitnessRecord& r)
{
    j = Json{{"switching", r.switching},
             {"valency", r.valency},
             {"theta", r.theta},
             {"graph_spectrum", r.graph_spectrum},
             {"disconnected", r.disconnected}};
}

void from_json(const Json& j, WitnessRecord& r)
{
    r.switching = j.at("switching").get<std::string>();
    r.valency = j.at("valency").get<std::int64_t>();
    r.theta = j.at("theta").get<std::int64_t>();
    r.graph_spectrum = j.at("graph_spectrum").get<std::string>();
    r.disconnected = j.at("disconnected").get<bool>();
}

void to_json(Json& j, const SearchReport& r)
{
    j = Json{{"order", r.order}, {"switchings", r.switchings}, {"witnesses", r.witnesses}};
}

void from_json(const Json& j, SearchReport& r)
{
    r.order = j.at("order").get<std::int64_t>();
    r.switchings = j.at("switchings").get<std::string>();
    r.witnesses = j.at("witnesses").get<std::vector<WitnessRecord>>();
}

bool operator==(const Table2Row& a, const Table2Row& b)
{
    return a.n == b.n && a.d == b.d && a.spectrum == b.spectrum && a.regular == b.regular && a.exists == b.exists &&
           a.rules == b.rules;
}

bool operator==(const Table3Row& a, const Table3Row& b)
{
    return a.d == b.d && a.lambda0 == b.lambda0 && a.floor_bound == b.floor_bound && a.spectrum == b.spectrum &&
           a.exists == b.exists && a.rule == b.rule && a.tie == b.tie;
}

} // namespace seidel
