#ifndef SVLAB_UNIQUENESS_HPP
#define SVLAB_UNIQUENESS_HPP

#include <string>
#include <vector>

#include "svlab/curve.hpp"
#include "svlab/nochka.hpp"
#include "svlab/variety.hpp"

namespace svlab {

struct UniquenessOptions {
    double quad_tol = 1e-8;
    double root_tol = 1e-12;
    std::vector<double> r_grid;
    bool parallel = true;
    int d_cap = 0;
};

/**
 * Outcome of the uniqueness test for two curves against one family.
 * `consistent` is the theorem-shaped implication: it is false exactly when
 * the threshold is met, both hypotheses hold, and the maps still differ.
 */
struct UniquenessReport {
    int q, n_param, k, d, hilbert;
    int deg_f, deg_g;
    Rat threshold; // 2(H-1)/d + (2N-k+1)H/(k+1)
    bool threshold_met;
    bool hyp_separated; // compositions of distinct members share no zero
    std::string separated_detail;
    bool hyp_agree;     // curves agree on every composition zero set
    std::string agree_detail;
    bool maps_equal;    // all 2x2 minors of (f, g) vanish identically
    bool consistent;
    std::vector<std::string> warnings;
};

/**
 * Check the uniqueness statement on exact input.  Hypotheses are decided
 * by polynomial divisibility: the curves agree at a point iff every minor
 * f_s g_t - f_t g_s vanishes there, so agreement on the zero set of a
 * composition is squarefree-part divisibility.  Preconditions (reduced
 * nonconstant curves on V, nondegeneracy of both over the degree-d
 * quotient, family in position, no curve inside a member) raise
 * PreconditionError.
 */
UniquenessReport uniqueness_check(const VarietyModel& v, const HypersurfaceFamily& fam,
                                  const RationalCurve& f, const RationalCurve& g,
                                  const UniquenessOptions& opt);

/// Exact ratio of characteristic growth orders, deg f / deg g.
Rat growth_ratio(const RationalCurve& f, const RationalCurve& g);

struct Ineq52Numeric {
    double r;
    double sum_n1;  // sum_i N^{[1]}(r, zeros of Q_i(f))
    double t_h;     // characteristic of the reference minor
    double t_fg;    // T_f(r) + T_g(r)
    double margin_counting; // t_h - sum_n1
    double margin_growth;   // t_fg - t_h
};

/**
 * The auxiliary counting inequality behind the uniqueness proof: with both
 * hypotheses in force and f != g, the distinct zeros of all compositions
 * inject into the zeros of any nonzero minor H, so
 *   sum_i (distinct zeros of Q_i(f)) <= deg H <= deg f + deg g.
 * Exact margins plus an informational numeric table over rN_grid.
 */
struct Ineq52Report {
    bool identical_maps; // all minors vanish; the inequality is vacuous
    int minor_s, minor_t;
    std::string minor;
    long sum_distinct;
    long h_degree;
    long margin_counting; // deg H - sum_distinct
    long margin_growth;   // deg f + deg g - deg H
    bool pass;
    std::vector<Ineq52Numeric> rows;
    std::vector<double> skipped_radii;
    std::vector<std::string> warnings;
};

/**
 * Verify the counting inequality.  Requires both uniqueness hypotheses to
 * hold (PreconditionError otherwise); identical maps short-circuit with
 * the vacuous flag set.
 */
Ineq52Report inequality_52_check(const VarietyModel& v, const HypersurfaceFamily& fam,
                                 const RationalCurve& f, const RationalCurve& g,
                                 const UniquenessOptions& opt);

} // namespace svlab

#endif
