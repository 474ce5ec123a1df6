#include "seidel/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace seidel {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what)
{
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no)
{
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return true;
    }
    return false;
}

// Splits a line into integer tokens, recording 1-based columns.
std::vector<std::pair<long long, std::size_t>> tokens(const std::string& line, std::size_t line_no)
{
    std::vector<std::pair<long long, std::size_t>> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        if (pos >= line.size())
            break;
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
            ++pos;
        const std::string token = line.substr(start, pos - start);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        }
        catch (const std::exception&) {
            fail(line_no, start + 1, "expected an integer, found '" + token + "'");
        }
        if (used != token.size())
            fail(line_no, start + 1, "expected an integer, found '" + token + "'");
        out.emplace_back(value, start + 1);
    }
    return out;
}

} // namespace

SeidelMatrix parse_smat(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_content_line(in, line, line_no))
        fail(1, 1, "missing order line");
    const auto header = tokens(line, line_no);
    if (header.size() != 1 || header[0].first < 1)
        fail(line_no, 1, "first line must be a single positive order n");
    const Index n = header[0].first;

    IntMatrix m(n, n);
    std::vector<std::size_t> row_line(static_cast<std::size_t>(n));
    std::vector<std::vector<std::size_t>> columns(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        if (!next_content_line(in, line, line_no))
            fail(line_no + 1, 1, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(i));
        const auto row = tokens(line, line_no);
        if (static_cast<Index>(row.size()) != n)
            fail(line_no, 1, "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
        row_line[static_cast<std::size_t>(i)] = line_no;
        for (Index j = 0; j < n; ++j) {
            const auto [value, column] = row[static_cast<std::size_t>(j)];
            columns[static_cast<std::size_t>(i)].push_back(column);
            if (value < -1 || value > 1)
                fail(line_no, column, "entry " + std::to_string(value) + " is not in {-1,0,1}");
            m(i, j) = value;
        }
    }
    if (next_content_line(in, line, line_no))
        fail(line_no, 1, "trailing content after matrix");

    for (Index i = 0; i < n; ++i) {
        const auto li = row_line[static_cast<std::size_t>(i)];
        if (m(i, i) != 0)
            fail(li, columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], "diagonal entry must be 0");
        for (Index j = 0; j < n; ++j) {
            const auto col = columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i != j && m(i, j) == 0)
                fail(li, col, "off-diagonal entry must be +-1");
            if (m(i, j) != m(j, i))
                fail(li, col, "matrix is not symmetric (entry (" + std::to_string(i) + "," + std::to_string(j) + "))");
        }
    }
    return SeidelMatrix(std::move(m));
}

SeidelMatrix parse_smat(const std::string& text)
{
    std::istringstream in(text);
    return parse_smat(in);
}

void write_smat(std::ostream& out, const SeidelMatrix& s)
{
    const Index n = s.order();
    out << n << '\n';
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j)
            out << (j ? " " : "") << s(i, j);
        out << '\n';
    }
}

std::string to_smat(const SeidelMatrix& s)
{
    std::ostringstream out;
    write_smat(out, s);
    return out.str();
}

Graph parse_edges(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_content_line(in, line, line_no))
        fail(1, 1, "missing \"n m\" header");
    const auto header = tokens(line, line_no);
    if (header.size() != 2 || header[0].first < 1 || header[1].first < 0)
        fail(line_no, 1, "header must be \"n m\" with n >= 1 and m >= 0");
    const Index n = header[0].first;
    const long long m = header[1].first;
    Graph g(n);
    for (long long e = 0; e < m; ++e) {
        if (!next_content_line(in, line, line_no))
            fail(line_no + 1, 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        const auto uv = tokens(line, line_no);
        if (uv.size() != 2)
            fail(line_no, 1, "edge line must be \"u v\"");
        for (const auto& [v, col] : uv)
            if (v < 0 || v >= n)
                fail(line_no, col, "vertex " + std::to_string(v) + " out of range");
        if (uv[0].first == uv[1].first)
            fail(line_no, uv[1].second, "loops are not allowed");
        if (g.has_edge(uv[0].first, uv[1].first))
            fail(line_no, 1, "duplicate edge");
        g.add_edge(uv[0].first, uv[1].first);
    }
    if (next_content_line(in, line, line_no))
        fail(line_no, 1, "trailing content after edge list");
    return g;
}

Graph parse_edges(const std::string& text)
{
    std::istringstream in(text);
    return parse_edges(in);
}

void write_edges(std::ostream& out, const Graph& g)
{
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges)
        out << u << ' ' << v << '\n';
}

std::string to_edges(const Graph& g)
{
    std::ostringstream out;
    write_edges(out, g);
    return out.str();
}

namespace {

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return in;
}

} // namespace

SeidelMatrix read_smat_file(const std::string& path)
{
    auto in = open(path);
    try {
        return parse_smat(in);
    }
    catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Graph read_edges_file(const std::string& path)
{
    auto in = open(path);
    try {
        return parse_edges(in);
    }
    catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace seidel
