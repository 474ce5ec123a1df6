#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seidel/core.hpp"
#include "seidel/feasibility.hpp"
#include "seidel/regular.hpp"

namespace seidel {

/// Summary printed by `seidel analyze`.
struct AnalyzeReport
{
    std::int64_t order = 0;
    std::string spectrum;
    std::int64_t distinct_eigenvalues = 0;
    /// Empty when line_params is not available (n < 2 or smallest eigenvalue in a residual).
    std::optional<std::int64_t> d;
    std::optional<std::string> smallest;
    std::optional<std::string> alpha;
    std::string mod2_parity;
    bool mod2_matches = false;
    /// "+-" string of an Euler switching, if one exists.
    std::optional<std::string> euler_switch;
    friend bool operator==(const AnalyzeReport&, const AnalyzeReport&) = default;
};

AnalyzeReport analyze(const SeidelMatrix& s);
std::string render_analyze(const AnalyzeReport& report);

struct WitnessRecord
{
    std::string switching;
    std::int64_t valency = 0;
    std::int64_t theta = 0;
    std::string graph_spectrum;
    bool disconnected = false;
    friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

/// Result of `seidel search-regular`.
struct SearchReport
{
    std::int64_t order = 0;
    /// 2^(n-1): switchings covered by the exhaustive search.
    std::string switchings;
    std::vector<WitnessRecord> witnesses;
    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

SearchReport search_report(const SeidelMatrix& s, const std::vector<RegularWitness>& witnesses);
std::string render_search(const SearchReport& report);

using Json = nlohmann::ordered_json;

void to_json(Json& j, const ConditionRecord& r);
void from_json(const Json& j, ConditionRecord& r);
void to_json(Json& j, const FeasibilityReport& r);
void from_json(const Json& j, FeasibilityReport& r);
void to_json(Json& j, const Table2Row& r);
void from_json(const Json& j, Table2Row& r);
void to_json(Json& j, const Table3Row& r);
void from_json(const Json& j, Table3Row& r);
void to_json(Json& j, const AnalyzeReport& r);
void from_json(const Json& j, AnalyzeReport& r);
void to_json(Json& j, const WitnessRecord& r);
void from_json(const Json& j, WitnessRecord& r);
void to_json(Json& j, const SearchReport& r);
void from_json(const Json& j, SearchReport& r);

bool operator==(const Table2Row& a, const Table2Row& b);
bool operator==(const Table3Row& a, const Table3Row& b);

} // namespace seidel
