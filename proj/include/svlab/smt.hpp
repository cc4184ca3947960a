#ifndef SVLAB_SMT_HPP
#define SVLAB_SMT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svlab/curve.hpp"
#include "svlab/nochka.hpp"
#include "svlab/variety.hpp"

namespace svlab {

struct SMTOptions {
    bool deep = false;
    double quad_tol = 1e-8;
    double root_tol = 1e-12;
    std::vector<double> r_grid;
    std::uint64_t seed = 0xC0FFEE;
    int d_cap = 0;
    int max_retries = 16;
    bool parallel = true;
    std::vector<std::vector<GaussRat>> alpha_beta_samples;
};

struct SlopeRow {
    int index;
    int degree;            // d_i
    long total_count;      // zeros of Q_i(f) with multiplicity
    long truncated_count;  // sum over zeros of min(mult, H-1)
    Rat contribution;      // truncated_count / d_i
};

struct NumericRow {
    double r;
    double t_f;
    std::vector<double> counting; // N^{[H-1]} of each composition
    double lhs, rhs, margin;
};

struct ClaimRow {
    std::string cluster;    // canonical printed form of the coprime cluster
    int cluster_degree;
    std::vector<int> mults; // multiplicity inside each normalized composition
    int mult_w;             // multiplicity inside the Wronskian
    int vanish_count;
    Rat rhs;                // sum omega_i * max(mult_i - (H-1), 0)
    bool pass;
};

struct ClaimLedger {
    std::vector<ClaimRow> rows;
    Rat slope_lhs;   // sum omega_i deg u_i - deg W
    Rat slope_rhs;   // sum omega_i * truncated count of u_i at H-1
    bool slope_pass;
    std::vector<CheckRecord> extras;
    bool all_pass;
};

struct SMTReport {
    int q, n_param, k, d, hilbert;
    Rat coefficient; // (2N - k + 1) H / (k + 1)
    int curve_degree;
    PositionReport position;
    Rat slope_lhs, slope_rhs, slope_margin;
    std::vector<SlopeRow> slope_rows;
    std::vector<NumericRow> numeric_rows;
    std::vector<double> skipped_radii;
    bool deep = false;
    std::optional<WeightCertificate> weights;
    std::optional<BasisCompletion> completion;
    std::optional<ClaimLedger> claim;
    std::optional<std::pair<double, double>> alpha_beta;
    std::vector<std::string> warnings;

    /// No defects: nonnegative slope margin and a fully passing claim ledger.
    bool ok() const;
};

/**
 * Verify the main inequality for the given variety, family, and curve:
 * exact slope ledger, numeric ledger over the radius grid, and in deep
 * mode the weight certificate, basis completion, and per-zero claim
 * ledger.  Preconditions (reduced curve on V, nondegeneracy, position,
 * q above the coefficient, compositions nonzero) raise PreconditionError.
 */
SMTReport smt_verify(const VarietyModel& v, const HypersurfaceFamily& fam,
                     const RationalCurve& f, const SMTOptions& opt);

/**
 * Per-zero ledger of the key divisor inequality: for every zero cluster,
 * mult_W >= sum_i omega_i * max(mult_i - (H-1), 0), at most N of the
 * normalized compositions vanish, plus the integrated slope form.  Exact;
 * zero locations are never touched numerically (clusters are coprime
 * polynomial factors).
 */
ClaimLedger claim_check(const VarietyModel& v, const HypersurfaceFamily& fam,
                        const RationalCurve& f, const std::vector<Rat>& omega,
                        const BasisCompletion* completion = nullptr);

/**
 * Sampled bounds for max_i |Q~_i(x)| / ||x||^d over points of V: returns
 * (min, max) across the samples.  These are estimates used for reporting
 * only; no verdict ever depends on them.  Samples must satisfy the
 * generators to 1e-9 relative tolerance.
 */
std::pair<double, double> estimate_alpha_beta(
    const VarietyModel& v, const HypersurfaceFamily& fam,
    const std::vector<std::vector<GaussRat>>& samples);

} // namespace svlab

#endif
