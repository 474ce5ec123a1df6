#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seidel/core.hpp"
#include "seidel/eigenvalue.hpp"

namespace seidel {

/// Two eigenvalues taken jointly through their sum and product, so a conjugate
/// surd pair needs no irrational arithmetic.
struct EigenPair
{
    std::int64_t sum = 0;
    std::int64_t product = 0;
    /// The eigenvalue records that make up the pair (two integers or one surd pair).
    std::vector<Eigenvalue> members;

    static EigenPair integers(std::int64_t lambda, std::int64_t mu);
    static EigenPair conjugates(const QuadraticPair& pair);

    std::string to_string() const;
};

/// M = sigma (S - lambda I)(S - mu I) for a three-eigenvalue Seidel matrix.
struct MPair
{
    EigenPair pair;
    /// The third eigenvalue; empty when lambda, mu are the only eigenvalues (M = 0).
    std::optional<std::int64_t> nu;
    int sigma = 1;
    std::int64_t n = 0;
    /// |n - 1 + lambda mu|
    std::int64_t diag_value = 0;
    /// Multiplicity of nu.
    std::int64_t rank = 0;
    /// Absent in spectral mode.
    std::optional<IntMatrix> matrix;

    bool degenerate() const { return !nu.has_value(); }
};

/// Spectral mode: sigma, diagonal and rank from a candidate spectrum.
/// PreconditionError unless the pair members are eigenvalues and at most one
/// further eigenvalue (an integer) remains.
MPair build_M(const Spectrum& spectrum, const EigenPair& pair);
/// Explicit mode. Also verifies the invariants (PSD, constant diagonal,
/// off-diagonal bound, rank) and throws Error if any fails.
MPair build_M(const SeidelMatrix& s, const EigenPair& pair);

/// Whether some switching of M is entrywise congruent to diag_value J modulo 4.
/// NotApplicable for odd n.
bool mod4_M_check(const MPair& m);

struct RowClass
{
    std::vector<Index> members;
    /// Row members[i] equals signs[i] times row members[0].
    std::vector<int> signs;
};

/// Classes of rows i, j with M_ij = +-d for a constant-diagonal matrix M.
/// PreconditionError on non-constant or non-positive diagonal; Error if two rows
/// with M_ij = +-d are not equal up to sign (impossible for PSD input).
std::vector<RowClass> group_repeated_rows(const IntMatrix& m);

struct TensorStructure
{
    Index q = 0;
    Index k = 0;
    IntMatrix inner;
    SwitchingVector switching;
    /// order[p] is the original index placed at position p.
    std::vector<Index> order;
};

/// M switching equivalent (after reordering) to inner (x) J_k, or nothing when the
/// row classes have different sizes.
std::optional<TensorStructure> tensor_detect(const IntMatrix& m);

/// Per-row count of entries with square b^2 for a two-eigenvalue matrix with
/// entries in {+-a, +-b}, from the identity M^2 = (lambda+mu) M - lambda mu I.
/// Checked against the direct count; PreconditionError when the hypotheses fail.
std::vector<std::int64_t> two_valued_entry_count(const IntMatrix& m, std::int64_t lambda, std::int64_t mu,
                                                 std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t p);

struct Rank2Structure
{
    std::vector<RowClass> classes;
    SwitchingVector switching;
    /// Rank below two: nothing to prove.
    bool vacuous = false;
};

/// Rank-2 PSD matrix with constant prime diagonal p = 3 mod 4: a switching with
/// at most two distinct rows.
Rank2Structure rank2_prime_structure(const IntMatrix& m, std::int64_t p);

struct SixDiagResult
{
    std::int64_t c = 0;
    std::int64_t q = 0;
    bool feasible = false;
    bool divides = false;
    std::string reason;
    /// Inner Seidel matrix T (explicit mode only).
    std::optional<SeidelMatrix> inner_seidel;
    /// {-3^(q-c), ((q-1)/3)^c}
    std::optional<Spectrum> inner_spectrum;
};

/// Diagonal-6 analysis: (q + 8)(9 - c) = 72 with q | n.
SixDiagResult six_diag_analyze(std::int64_t n, std::int64_t c);
/// Explicit mode additionally extracts T from the tensor structure of M.
SixDiagResult six_diag_analyze(const MPair& m);

struct SmallDiagResult
{
    enum class Kind { Impossible, Infeasible, Regular, Unknown };
    Kind kind = Kind::Unknown;
    std::int64_t d = 0;
    std::int64_t c = 0;
    /// Rule id: "zero-diag", "two-diag", "four-diag", "six-diag", "prime-rank2" or "".
    std::string rule;
    std::string reason;
    std::optional<SixDiagResult> six;
};

std::string to_string(SmallDiagResult::Kind kind);

/// Classification by D = |n - 1 + lambda mu| for even n and nu of multiplicity c.
/// NotApplicable for odd n.
SmallDiagResult small_diag_classify(std::int64_t n, std::int64_t lambda_mu_product, std::int64_t c);

struct UniqueSmallCheck
{
    bool both_regular = false;
    /// False when the result is taken from the literature for lack of a witness.
    bool verified = false;
    std::string note;
};

/// The four two-eigenvalue spectra {-3^1,1^3}, {-3^5,3^5}, {-3^10,5^6}, {-3^21,9^7}
/// have both eigenspaces regular. Orders 4 and 10 are checked on K4 and the
/// Petersen graph; the others only on a supplied witness.
UniqueSmallCheck unique_small_seidel_check(const Spectrum& spectrum,
                                           const std::optional<SeidelMatrix>& witness = std::nullopt);

} // namespace seidel
