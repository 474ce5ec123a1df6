#pragma once

#include <iosfwd>
#include <string>

#include "seidel/core.hpp"

namespace seidel {

/// "smat": line 1 is n, then n lines of n integers in {-1, 0, 1}.
/// Violations are reported as InputError with line and column.
SeidelMatrix parse_smat(std::istream& in);
SeidelMatrix parse_smat(const std::string& text);
void write_smat(std::ostream& out, const SeidelMatrix& s);
std::string to_smat(const SeidelMatrix& s);

/// "edges": line 1 is "n m", then m lines "u v" with 0-based vertices.
Graph parse_edges(std::istream& in);
Graph parse_edges(const std::string& text);
void write_edges(std::ostream& out, const Graph& g);
std::string to_edges(const Graph& g);

SeidelMatrix read_smat_file(const std::string& path);
Graph read_edges_file(const std::string& path);

} // namespace seidel
