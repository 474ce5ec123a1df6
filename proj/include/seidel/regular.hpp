#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seidel/core.hpp"
#include "seidel/eigenvalue.hpp"

namespace seidel {

/// A switching whose underlying graph is regular.
struct RegularWitness
{
    SwitchingVector switching;
    std::int64_t valency = 0;
    /// Seidel eigenvalue of the switched all-ones vector: n - 1 - 2k.
    std::int64_t theta = 0;
    Spectrum graph_spectrum;
    bool disconnected = false;
};

struct SearchOptions
{
    /// Orders above this throw BudgetExceeded instead of searching.
    Index max_order = 24;
    /// Search-tree nodes allowed before BudgetExceeded (0 = unlimited).
    std::uint64_t max_nodes = 0;
    /// Worker threads; 0 means hardware concurrency.
    unsigned threads = 1;
    /// Compute the exact spectrum of each witness graph.
    bool graph_spectra = true;
};

/// Every +-1 vector x with x[0] = +1 and S x = theta x, in lexicographic order.
/// Throws BudgetExceeded when the order or node budget is exceeded.
std::vector<SwitchingVector> regular_eigenvectors(const SeidelMatrix& s, std::int64_t theta,
                                                  const SearchOptions& options = {});

/// All switchings (first sign +1) with a regular underlying graph, sorted by
/// switching vector. A graph DSD is regular iff diag(D) is a +-1 eigenvector of S,
/// so the search runs over the integer eigenvalues of S.
std::vector<RegularWitness> find_regular_graphs(const SeidelMatrix& s, const SearchOptions& options = {});

/// One +-1 theta-eigenvector, if any. PreconditionError if theta is not an
/// eigenvalue; NotApplicable for an irrational eigenvalue.
std::optional<SwitchingVector> regular_eigenspace_search(const SeidelMatrix& s, std::int64_t theta,
                                                         const SearchOptions& options = {});
std::optional<SwitchingVector> regular_eigenspace_search(const SeidelMatrix& s, const Eigenvalue& theta,
                                                         const SearchOptions& options = {});

bool is_connected(const Graph& g);

/// Graph eigenvalue lambda maps to Seidel eigenvalue -1 - 2 lambda, except one
/// copy of the valency k, which maps to n - 1 - 2k.
Spectrum seidel_spectrum_of_regular_graph(const Spectrum& graph_spectrum, std::int64_t n, std::int64_t k);

/// Inverse map given an eigenvalue theta0 with a regular eigenspace:
/// {((n-1-theta0)/2)^1, ((-1-theta0)/2)^(m0-1), ((-1-theta_i)/2)^m_i}.
/// PreconditionError if theta0 fails the parity conditions or an image is not an algebraic integer.
Spectrum regular_graph_spectrum_from_seidel(const Spectrum& seidel_spectrum, std::int64_t theta0);

struct ThreeWalkVerdict
{
    std::int64_t theta = 0;
    std::int64_t k = 0;
    /// 16 times the number of triangles through a vertex of the regular graph
    /// (half the closed 3-walks); must be a nonnegative multiple of 16.
    BigInt triangles_times_16;
    bool feasible = false;
};

/// Closed 3-walk count of a putative regular graph in the switching class of a
/// three-eigenvalue Seidel matrix, for each candidate theta with theta = n-1 mod 2.
/// e1 and e3 are the sum and product of the three distinct eigenvalues.
std::vector<ThreeWalkVerdict> three_walk_condition(std::int64_t n, std::int64_t e1, std::int64_t e3,
                                                   const std::vector<std::int64_t>& thetas);
/// Spectrum overload; NotApplicable unless there are exactly three distinct
/// eigenvalues with integral symmetric functions.
std::vector<ThreeWalkVerdict> three_walk_condition(const Spectrum& spectrum);

/// Sum and product of the three distinct eigenvalues, if the spectrum has that shape.
std::optional<std::pair<std::int64_t, std::int64_t>> three_eigenvalue_symmetric_functions(const Spectrum& spectrum);

/// nu = n-1 mod 2, and nu = n-1 mod 4 for odd n.
bool parity_conditions(std::int64_t n, std::int64_t nu);

/// Graph spectrum of the regular graph forced by a simple eigenvalue nu in a
/// three-eigenvalue spectrum {lambda^a, mu^b, nu^1}. If `nu` is not given the
/// unique simple integer eigenvalue is used.
Spectrum srg_correspondence(const Spectrum& seidel_spectrum, std::optional<std::int64_t> nu = std::nullopt);

/// {0^1, (+-sqrt n)^((n-1)/2)} for odd n. PreconditionError for even n,
/// NotApplicable when n is a perfect square (the eigenvalues are rational).
Spectrum irrational_three_ev_form(std::int64_t n);

} // namespace seidel
