#ifndef SVLAB_VARIETY_HPP
#define SVLAB_VARIETY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "svlab/matrix.hpp"
#include "svlab/multipoly.hpp"

namespace svlab {

/// The degree-d data of the coordinate ring of a variety model.
struct GradedPiece {
    int d;
    std::vector<ExpVec> basis;            // all monomials of degree d
    ExactMatrix ideal_rref;               // rref of the ideal's degree-d rows
    std::vector<std::size_t> pivot_cols;
    std::size_t ideal_rank;
    std::vector<ExpVec> complement;       // monomials at non-pivot columns
    int hilbert;                          // dim of the quotient = #complement
};

/**
 * Projective variety V in P^n described by homogeneous ideal generators
 * and a declared dimension k.  All graded data is derived from the listed
 * generators only: the degree-d ideal piece is the span of monomial
 * multiples of the generators, which equals the full ideal piece whenever
 * the generators generate the saturated ideal in that degree (true for all
 * shipped models; a finite-difference cross-check on the declared k is
 * available as a warning).
 */
class VarietyModel {
public:
    VarietyModel(int n, int k, std::vector<MultiPoly> generators);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }

    /// Cached per degree; safe to call concurrently.
    const GradedPiece& graded_piece(int d) const;

    int hilbert(int d) const { return graded_piece(d).hilbert; }

    /**
     * Coordinates of the residue class of Q (homogeneous of degree d) in
     * the canonical monomial-complement basis of the degree-d quotient.
     * Congruent polynomials get identical coordinates.
     */
    std::vector<GaussRat> class_coords(const MultiPoly& q) const;

    /**
     * Cross-check of the declared dimension: the Hilbert values over a
     * window of consecutive degrees must agree with a polynomial of degree
     * k (vanishing (k+1)-th finite differences).  Returns warning strings,
     * empty when the check passes.
     */
    std::vector<std::string> dimension_warnings() const;

private:
    int n_, k_;
    std::vector<MultiPoly> gens_;
    mutable std::map<int, std::unique_ptr<GradedPiece>> cache_;
    mutable std::mutex mu_;
};

/// Family of hypersurface sections with a subgeneral-position parameter N.
struct HypersurfaceFamily {
    std::vector<MultiPoly> members;   // homogeneous, nonzero
    std::vector<int> degrees;         // deg of each member
    int N;
    int common_degree;                // lcm of the degrees

    static HypersurfaceFamily make(std::vector<MultiPoly> members, int N);

    int q() const { return static_cast<int>(members.size()); }

    /// Q_i raised to common_degree / deg_i, so all members compare in one degree.
    MultiPoly normalized(int i) const;
};

/// Classes of the normalized members in the degree-lcm quotient piece.
struct FamilyClasses {
    int d;
    int hilbert;
    std::vector<std::vector<GaussRat>> coords;
};

FamilyClasses family_classes(const VarietyModel& v, const HypersurfaceFamily& fam);

/// Throws PreconditionError if some normalized member vanishes identically on V.
void validate_family_on(const VarietyModel& v, const HypersurfaceFamily& fam);

/// Rank of the normalized class vectors of the chosen members.
int family_rank(const VarietyModel& v, const HypersurfaceFamily& fam,
                const std::vector<int>& subset);

enum class Emptiness { Empty, NonEmpty, Inconclusive };

std::string emptiness_str(Emptiness e);

struct EmptinessReport {
    Emptiness verdict;
    /// Empty: first degree with Hilbert value 0.  Otherwise the last degree scanned.
    int witness_degree;
    std::vector<int> hilbert_values; // degrees 0..witness_degree
    int cap;
};

/**
 * Does V intersected with the common zero set of qs come out empty?
 * Empty is a certificate (the augmented graded piece collapses to zero,
 * which forces an empty projective zero set).  NonEmpty is a stabilization
 * heuristic: positive Hilbert values constant over the last k+2 scanned
 * degrees.  Anything else is Inconclusive.  d_cap <= 0 selects the default
 * cap sum(deg g - 1) + n + 1 over the augmented generators.
 */
EmptinessReport is_empty_on_variety(const VarietyModel& v,
                                    const std::vector<MultiPoly>& qs,
                                    int d_cap = 0);

struct SubsetVerdict {
    std::vector<int> subset;
    Emptiness verdict;
    int witness_degree;
};

struct PositionReport {
    enum class Overall { InPosition, NotInPosition, Inconclusive };
    Overall overall;
    int n_param;       // the N the subsets were sized by
    int subset_size;   // N + 1
    std::vector<SubsetVerdict> rows; // all (N+1)-subsets, lexicographic
};

std::string overall_str(PositionReport::Overall o);

/**
 * N-subgeneral position test: every (N+1)-subset of the normalized members
 * must cut V down to the empty set.  The subset scan is data-parallel; the
 * serial path (parallel = false) produces identical results and is kept as
 * the reference implementation.
 */
PositionReport check_subgeneral(const VarietyModel& v, const HypersurfaceFamily& fam,
                                bool parallel = true, int d_cap = 0);

} // namespace svlab

#endif
