#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "seidel/enumerate.hpp"
#include "seidel/feasibility.hpp"
#include "seidel/io.hpp"
#include "seidel/regular.hpp"
#include "seidel/report_json.hpp"
#include "seidel/spectra.hpp"

using namespace seidel;

namespace {

SeidelMatrix load_matrix(const std::string& path, const std::string& format)
{
    if (format == "edges")
        return seidel_from_graph(read_edges_file(path));
    return read_smat_file(path);
}

Facts load_facts(const std::string& path)
{
    return path.empty() ? Facts::defaults() : Facts::load(path);
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << text;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text)
{
    static const std::regex pattern(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw InputError("expected a range A..B, got '" + text + "'");
    const auto a = std::stoll(m[1].str());
    const auto b = std::stoll(m[2].str());
    if (a > b)
        throw InputError("empty range '" + text + "'");
    return {a, b};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Seidel matrix spectra, switching classes and equiangular line bounds"};
    app.require_subcommand(1, 1);

    std::string input;
    std::string format = "smat";
    bool json = false;
    unsigned threads = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "Spectrum and basic invariants of a matrix");
    analyze_cmd->add_option("--input", input, "Input file")->required();
    analyze_cmd->add_option("--format", format, "smat or edges")->check(CLI::IsMember({"smat", "edges"}));
    analyze_cmd->add_flag("--json", json, "Print JSON");

    std::uint64_t budget = 0;
    auto* search_cmd = app.add_subcommand("search-regular", "All switchings with a regular underlying graph");
    search_cmd->add_option("--input", input, "Input file")->required();
    search_cmd->add_option("--format", format, "smat or edges")->check(CLI::IsMember({"smat", "edges"}));
    search_cmd->add_option("--budget", budget, "Search-node budget (0 = unlimited)");
    search_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    search_cmd->add_flag("--json", json, "Print JSON");

    std::string spectrum_text;
    std::string facts_path;
    auto* battery_cmd = app.add_subcommand("battery", "Necessary conditions for a candidate spectrum");
    battery_cmd->add_option("--spectrum", spectrum_text, "Spectrum, e.g. -5^43,11^9,12^1,13^8")->required();
    battery_cmd->add_option("--facts", facts_path, "Facts file");
    battery_cmd->add_flag("--json", json, "Print JSON");

    auto* table2_cmd = app.add_subcommand("table2", "Verdicts for the three-eigenvalue candidate spectra");
    table2_cmd->add_option("--facts", facts_path, "Facts file");
    table2_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    table2_cmd->add_flag("--json", json, "Print JSON");

    std::string range = "14..23";
    std::int64_t lambda0 = -5;
    auto* table3_cmd = app.add_subcommand("table3", "Forced spectra at the relative bound");
    table3_cmd->add_option("--d-range", range, "Dimensions A..B");
    table3_cmd->add_option("--lambda0", lambda0, "Smallest eigenvalue")->allow_extra_args(false);
    table3_cmd->add_option("--facts", facts_path, "Facts file");
    table3_cmd->add_flag("--json", json, "Print JSON");

    Index order = 0;
    bool long_run = false;
    std::string output;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "All switching classes of a small order");
    enumerate_cmd->add_option("--n", order, "Order")->required();
    enumerate_cmd->add_flag("--long", long_run, "Allow order 7");
    enumerate_cmd->add_option("--output", output, "Append results to this file");
    enumerate_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

    std::string emit_dir;
    auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the fixture matrices in smat format");
    fixtures_cmd->add_option("--emit", emit_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) {
            const AnalyzeReport r = analyze(load_matrix(input, format));
            if (json)
                std::cout << Json(r).dump(2) << '\n';
            else
                std::cout << render_analyze(r);
        }
        else if (*search_cmd) {
            const SeidelMatrix s = load_matrix(input, format);
            SearchOptions opts;
            opts.max_nodes = budget;
            opts.threads = threads;
            const SearchReport r = search_report(s, find_regular_graphs(s, opts));
            if (json)
                std::cout << Json(r).dump(2) << '\n';
            else
                std::cout << render_search(r);
        }
        else if (*battery_cmd) {
            const Spectrum spec = parse_spectrum(spectrum_text);
            const FeasibilityReport r = run_battery(spec, load_facts(facts_path));
            if (json)
                std::cout << Json(r).dump(2) << '\n';
            else
                std::cout << render_report(r);
        }
        else if (*table2_cmd) {
            const auto rows = table2_report(load_facts(facts_path), threads);
            if (json)
                std::cout << Json(rows).dump(2) << '\n';
            else
                std::cout << render_table2(rows);
        }
        else if (*table3_cmd) {
            const auto [a, b] = parse_range(range);
            const auto rows = table3_report(a, b, lambda0, load_facts(facts_path));
            if (json)
                std::cout << Json(rows).dump(2) << '\n';
            else
                std::cout << render_table3(rows);
        }
        else if (*enumerate_cmd) {
            EnumerateOptions opts;
            opts.allow_long = long_run;
            opts.threads = threads;
            const auto classes = enumerate_classes(order, opts);
            std::cout << classes.size() << " classes\n";
            for (const auto& c : classes)
                std::cout << "  " << results_line(c) << '\n';
            if (!output.empty()) {
                std::ofstream out(output, std::ios::app);
                if (!out)
                    throw InputError("cannot write " + output);
                out << write_results(classes);
            }
        }
        else if (*fixtures_cmd) {
            const std::filesystem::path dir(emit_dir);
            std::filesystem::create_directories(dir);
            const std::vector<std::pair<std::string, SeidelMatrix>> fixtures = {
                {"s10", build_fixture_s10()},
                {"s6", build_s6()},
                {"s1", build_sk_family(1)},
                {"k4", seidel_from_graph(complete_graph(4))},
                {"petersen", seidel_from_graph(petersen_graph())},
                {"c5", seidel_from_graph(cycle_graph(5))},
            };
            for (const auto& [name, s] : fixtures) {
                write_file(dir / (name + ".smat"), to_smat(s));
                std::cout << (dir / (name + ".smat")).string() << '\n';
            }
            write_file(dir / "c5.edges", to_edges(cycle_graph(5)));
            std::cout << (dir / "c5.edges").string() << '\n';
        }
    }
    catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    }
    catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
