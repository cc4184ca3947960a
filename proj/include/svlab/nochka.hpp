#ifndef SVLAB_NOCHKA_HPP
#define SVLAB_NOCHKA_HPP

#include <functional>
#include <string>
#include <vector>

#include "svlab/multipoly.hpp"
#include "svlab/rational.hpp"
#include "svlab/rng.hpp"
#include "svlab/variety.hpp"

namespace svlab {

/// One named exact check with its outcome, for verification transcripts.
struct CheckRecord {
    std::string name;
    bool pass;
    std::string detail;
};

bool all_pass(const std::vector<CheckRecord>& records);

/**
 * Weight system for a family in subgeneral position: weights omega_i, the
 * max weight omega_tilde, and a transcript of the exact constraint checks
 * the certificate was verified against.
 */
struct WeightCertificate {
    int q, n_param, k;
    std::vector<Rat> omega;
    Rat omega_tilde;
    int pinned_index; // which omega the solver pinned to omega_tilde
    std::vector<CheckRecord> transcript;
};

/// Rank oracle over index subsets of the family.
using RankFn = std::function<int(const std::vector<int>&)>;

/**
 * Compute weights for q objects in N-subgeneral position with rank
 * function `rank` (values capped at k+1).  Exact LP feasibility search:
 * the candidate max-weight index is pinned and tried in increasing order;
 * the first feasible system wins.  Throws PreconditionError when the
 * position precondition fails and LemmaViolation if no weights exist.
 */
WeightCertificate nochka_weights(int q, int N, int k, const RankFn& rank);

/**
 * Hyperplane case: each vector is a linear form on C^{k+1} (k inferred
 * from the arity); the rank oracle is exact linear algebra.
 */
WeightCertificate nochka_weights_hyperplanes(
    const std::vector<std::vector<GaussRat>>& vectors, int N);

/**
 * Independent verification of a certificate; shares only the rank oracle
 * with the producer, re-deriving every inequality by direct enumeration.
 */
std::vector<CheckRecord> verify_weight_certificate(const WeightCertificate& cert,
                                                   const RankFn& rank);

struct SubsetSelection {
    std::vector<int> chosen;
    double lhs_log, rhs_log; // sum_R omega_i log E_i vs sum_chosen log E_i
};

/**
 * Choose a subset R0 of R with #R0 = rank(R0) = rank(R) and
 * sum_{i in R} omega_i log E_i <= sum_{i in R0} log E_i (within relative
 * tolerance 1e-12 in the log domain; lexicographically smallest
 * qualifying subset wins).  E values must be >= 1.  Throws LemmaViolation
 * when no subset qualifies.
 */
SubsetSelection select_subset(const std::vector<Rat>& omega, const RankFn& rank,
                              const std::vector<int>& r_set,
                              const std::vector<double>& e_values);

/**
 * A generic linear subspace L of dimension `dim` through which `forms`
 * (vectors in C^M) keep their subset ranks: rank of every restricted
 * subfamily of size <= dim equals min(original rank, dim), which extends
 * to all subset sizes.  Randomized with exhaustive exact verification;
 * retries with fresh draws up to max_retries.
 */
struct SubspaceWitness {
    int m_dim, dim;
    std::vector<std::vector<GaussRat>> basis; // dim columns of length M
    int retries;
    std::vector<CheckRecord> transcript;

    /// Restrict a form v (length M) to L: (v.b_1, ..., v.b_dim).
    std::vector<GaussRat> restrict_form(const std::vector<GaussRat>& v) const;
};

SubspaceWitness generic_subspace(const std::vector<std::vector<GaussRat>>& forms,
                                 int dim, Rng& rng, int max_retries = 16);

/**
 * Weights for hypersurface sections of a variety: classes of the
 * normalized members are restricted to a generic (k+1)-dimensional
 * subspace and the hyperplane construction is applied there.  The family
 * must already be known to be in position (pass the report, or it is
 * recomputed).
 */
WeightCertificate generalized_weights(const VarietyModel& v,
                                      const HypersurfaceFamily& fam, Rng& rng,
                                      const PositionReport* position = nullptr);

/**
 * H - k - 1 random degree-d forms extending any maximal independent
 * subfamily to a basis of the degree-d quotient: for every subset R with
 * #R = class-rank(R) = k+1 the classes of {members in R} + extras have
 * full rank H.  Verified exhaustively; retried on failure.
 */
struct BasisCompletion {
    std::vector<MultiPoly> extras;
    std::vector<std::vector<GaussRat>> extra_coords;
    int retries;
    std::vector<CheckRecord> transcript;
};

BasisCompletion basis_completion(const VarietyModel& v, const HypersurfaceFamily& fam,
                                 Rng& rng, int max_retries = 16);

} // namespace svlab

#endif
