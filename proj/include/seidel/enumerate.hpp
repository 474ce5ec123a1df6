#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seidel/core.hpp"
#include "seidel/eigenvalue.hpp"

namespace seidel {

/// Orbit representative under switching and relabelling.
struct CanonicalClass
{
    SeidelMatrix representative = SeidelMatrix::all_ones(1);
    /// Upper triangle in column order (0,1),(0,2),(1,2),(0,3),...; a set bit is -1 and
    /// the first pair is the most significant bit.
    std::uint64_t code = 0;
    /// Signed permutations (modulo -I) fixing the matrix.
    std::uint64_t automorphisms = 0;
    /// 2^(n-1) n! / automorphisms
    std::uint64_t orbit_size = 0;
    Spectrum spectrum;
};

/// Largest order accepted by canonical_form.
constexpr Index max_canonical_order = 10;

/// Lexicographically minimal encoding over all switchings and vertex permutations.
/// A minimiser always has vertex 0 isolated, so the search tries each vertex in
/// position 0 (which fixes the switching) and branches over the remaining labels.
CanonicalClass canonical_form(const SeidelMatrix& s);

/// Upper-triangle bits in row-major order (0,1),(0,2),...,(1,2),...; bit p set means -1.
SeidelMatrix seidel_from_mask(Index n, std::uint64_t mask);

/// First row-major mask (ascending) whose Seidel matrix satisfies `accept`.
std::optional<std::uint64_t> first_mask(Index n, const std::function<bool(const SeidelMatrix&)>& accept);

struct EnumeratedClass
{
    CanonicalClass canonical;
    /// Matrices of the class with vertex 0 isolated; times 2^(n-1) this is the orbit size.
    std::uint64_t isolated_count = 0;
    std::int64_t distinct_eigenvalues = 0;
    std::size_t regular_witnesses = 0;
};

struct EnumerateOptions
{
    /// Order 7 takes noticeably longer and must be requested explicitly.
    bool allow_long = false;
    unsigned threads = 1;
    bool count_witnesses = true;
};

/// All switching classes of order n (1 <= n <= 6, or 7 with allow_long), sorted by code.
/// Every class has a member with vertex 0 isolated, so only the 2^C(n-1,2) graphs
/// on the other vertices are canonicalised.
std::vector<EnumeratedClass> enumerate_classes(Index n, const EnumerateOptions& options = {});

/// Row-major encoding with rows separated by '/', entries '0', '+', '-'.
std::string encode_rows(const SeidelMatrix& s);
SeidelMatrix decode_rows(const std::string& text);

/// Results file line: "<representative> <spectrum> <witness count>".
std::string results_line(const EnumeratedClass& c);
std::string write_results(const std::vector<EnumeratedClass>& classes);

struct ResultsEntry
{
    SeidelMatrix representative;
    Spectrum spectrum;
    std::size_t regular_witnesses = 0;
};
ResultsEntry parse_results_line(const std::string& line);

} // namespace seidel
