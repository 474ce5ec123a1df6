#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seidel/eigenvalue.hpp"

namespace seidel {

/// Literature nonexistence results, one graph spectrum per line:
/// "graph-spectrum <spectrum> nonexistent <citation>". '#' starts a comment.
struct Fact
{
    Spectrum graph_spectrum;
    std::string citation;
};

class Facts
{
public:
    Facts() = default;
    explicit Facts(std::vector<Fact> facts) : m_facts(std::move(facts)) {}

    static Facts parse(const std::string& text);
    static Facts load(const std::string& path);
    /// The shipped facts (same content as data/facts.txt).
    static Facts defaults();
    static const char* default_text();

    const std::vector<Fact>& facts() const { return m_facts; }
    const Fact* find(const Spectrum& graph_spectrum) const;

private:
    std::vector<Fact> m_facts;
};

enum class Verdict { Pass, Fail, NotApplicable };
enum class Effect { None, Nonexistence, NoRegular, RegularForced };
enum class Overall { Infeasible, RegularImpossible, RegularForced, Open };

std::string to_string(Verdict v);
std::string to_string(Effect e);
std::string to_string(Overall o);
Verdict parse_verdict(const std::string& text);
Effect parse_effect(const std::string& text);
Overall parse_overall(const std::string& text);

struct ConditionRecord
{
    std::string id;
    std::string citation;
    Verdict verdict = Verdict::NotApplicable;
    Effect effect = Effect::None;
    std::vector<std::pair<std::string, std::string>> data;

    friend bool operator==(const ConditionRecord&, const ConditionRecord&) = default;
};

struct FeasibilityReport
{
    std::string spectrum;
    std::int64_t n = 0;
    std::vector<ConditionRecord> records;
    Overall overall = Overall::Open;
    /// 'Y' regular graph forced, 'N' impossible, '?' open
    char regular = '?';
    /// 'N' certified nonexistent, '?' otherwise (existence is never claimed)
    char exists = '?';

    /// Ids of records that fail or force regularity, in battery order.
    std::vector<std::string> decisive_rules() const;
    /// First record certifying nonexistence, if any.
    const ConditionRecord* first_nonexistence() const;

    friend bool operator==(const FeasibilityReport&, const FeasibilityReport&) = default;
};

/// Every applicable necessary condition for a candidate Seidel spectrum.
FeasibilityReport run_battery(const Spectrum& spectrum, const Facts& facts = Facts::defaults());

struct Table2Row
{
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::string spectrum;
    char regular = '?';
    char exists = '?';
    std::vector<std::string> rules;
};

/// The fifteen three-eigenvalue spectra of the large-set table, as (d, spectrum).
const std::vector<std::pair<std::int64_t, std::string>>& table2_spectra();
std::vector<Table2Row> table2_report(const Facts& facts = Facts::defaults(), unsigned threads = 1);

struct Table3Row
{
    std::int64_t d = 0;
    std::int64_t lambda0 = 0;
    std::int64_t floor_bound = 0;
    std::optional<std::string> spectrum;
    char exists = '?';
    std::string rule;
    bool tie = false;
};

std::vector<Table3Row> table3_report(std::int64_t d_from, std::int64_t d_to, std::int64_t lambda0,
                                     const Facts& facts = Facts::defaults());

std::string render_table2(const std::vector<Table2Row>& rows);
std::string render_table3(const std::vector<Table3Row>& rows);
std::string render_report(const FeasibilityReport& report);

/// Literature bounds on the largest number of equiangular lines in R^d.
struct LineBound
{
    std::int64_t d = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

std::vector<LineBound> load_line_bounds(const std::string& path);

/// Floor of the relative bound, lowered by one when the forced spectrum at that
/// order is refuted.
std::int64_t computed_upper_bound(std::int64_t d, std::int64_t lambda0, const Facts& facts = Facts::defaults());

} // namespace seidel
