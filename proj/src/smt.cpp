#include "svlab/smt.hpp"

#include <algorithm>
#include <cmath>

#include "svlab/errors.hpp"
#include "svlab/matrix.hpp"
#include "svlab/nevanlinna.hpp"
#include "svlab/parse.hpp"
#include "svlab/subsets.hpp"

namespace svlab {

namespace {

void require_reduced(const RationalCurve& f) {
    UniPoly g;
    for (const auto& c : f.comps) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd(g, c);
        if (g.degree() == 0) return;
    }
    if (g.is_zero())
        throw PreconditionError("curve has no nonzero component");
    if (g.degree() > 0)
        throw PreconditionError("curve representation is not reduced (common factor " +
                                poly_str(g) + ")");
}

// multiplicity of each coprime cluster inside a squarefree decomposition
int cluster_mult(const UniPoly& cluster, const SquarefreeDecomp& dec) {
    for (const auto& [factor, mult] : dec.factors)
        if (cluster.degree() <= factor.degree() && divides(cluster, factor)) return mult;
    return 0;
}

// pairwise-coprime monic basis refining all inputs
std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& inputs) {
    std::vector<UniPoly> basis;
    for (UniPoly p : inputs) {
        if (p.degree() < 1) continue;
        p = p.monic();
        for (std::size_t idx = 0; idx < basis.size() && p.degree() > 0; ++idx) {
            UniPoly g = gcd(p, basis[idx]);
            if (g.degree() == 0) continue;
            if (g.degree() < basis[idx].degree()) {
                UniPoly rest = exact_div(basis[idx], g);
                basis[idx] = g;
                basis.push_back(rest);
            }
            p = exact_div(p, g);
        }
        if (p.degree() > 0) basis.push_back(p);
    }
    std::sort(basis.begin(), basis.end(), [](const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int j = a.degree(); j >= 0; --j) {
            int c = cmp(a.coeff(j), b.coeff(j));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return basis;
}

} // namespace

bool SMTReport::ok() const {
    if (slope_margin < 0) return false;
    if (claim && !claim->all_pass) return false;
    return true;
}

ClaimLedger claim_check(const VarietyModel& v, const HypersurfaceFamily& fam,
                        const RationalCurve& f, const std::vector<Rat>& omega,
                        const BasisCompletion* completion) {
    int q = fam.q();
    if (static_cast<int>(omega.size()) != q)
        throw PreconditionError("claim_check: weight count mismatch");
    int d = fam.common_degree;
    int h = v.hilbert(d);
    int k = v.k();
    int n_param = fam.N;

    std::vector<UniPoly> basis_comps = quotient_basis_compositions(v, f, d);
    UniPoly w = wronskian(basis_comps);
    if (w.is_zero())
        throw PreconditionError("claim_check: Wronskian vanishes (degenerate curve)");

    // normalized compositions u~_i = Q_i(f)^{d/d_i}; decompose the base once
    // and scale the multiplicities
    std::vector<UniPoly> u(static_cast<std::size_t>(q));
    std::vector<SquarefreeDecomp> dec(static_cast<std::size_t>(q));
    std::vector<long> u_deg(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        UniPoly base = compose(fam.members[static_cast<std::size_t>(i)], f.comps);
        if (base.is_zero())
            throw PreconditionError("claim_check: composition " + std::to_string(i) +
                                    " vanishes identically");
        int power = d / fam.degrees[static_cast<std::size_t>(i)];
        dec[static_cast<std::size_t>(i)] = squarefree_decomp(base);
        for (auto& [factor, mult] : dec[static_cast<std::size_t>(i)].factors)
            mult *= power;
        u[static_cast<std::size_t>(i)] = base.pow(static_cast<unsigned>(power));
        u_deg[static_cast<std::size_t>(i)] =
            static_cast<long>(base.degree()) * power;
    }
    SquarefreeDecomp wdec = squarefree_decomp(w);

    std::vector<UniPoly> pool;
    for (const auto& di : dec)
        for (const auto& [factor, mult] : di.factors) pool.push_back(factor);
    for (const auto& [factor, mult] : wdec.factors) pool.push_back(factor);
    std::vector<UniPoly> clusters = coprime_basis(pool);

    ClaimLedger ledger;
    ledger.all_pass = true;
    for (const auto& c : clusters) {
        std::vector<int> mults(static_cast<std::size_t>(q), 0);
        int vanish = 0;
        for (int i = 0; i < q; ++i) {
            mults[static_cast<std::size_t>(i)] =
                cluster_mult(c, dec[static_cast<std::size_t>(i)]);
            if (mults[static_cast<std::size_t>(i)] > 0) ++vanish;
        }
        if (vanish == 0) continue; // zero of W only, not of any composition
        ClaimRow row;
        row.cluster = poly_str(c);
        row.cluster_degree = c.degree();
        row.mults = mults;
        row.mult_w = cluster_mult(c, wdec);
        row.vanish_count = vanish;
        row.rhs = 0;
        for (int i = 0; i < q; ++i) {
            int excess = mults[static_cast<std::size_t>(i)] - (h - 1);
            if (excess > 0) row.rhs += omega[static_cast<std::size_t>(i)] * excess;
        }
        row.pass = (vanish <= n_param) && (Rat(row.mult_w) >= row.rhs);
        if (!row.pass) ledger.all_pass = false;
        ledger.rows.push_back(std::move(row));
    }

    ledger.slope_lhs = -Rat(w.degree());
    ledger.slope_rhs = 0;
    for (int i = 0; i < q; ++i) {
        ledger.slope_lhs += omega[static_cast<std::size_t>(i)] *
                            Rat(u_deg[static_cast<std::size_t>(i)]);
        long trunc = 0;
        for (const auto& [factor, mult] : dec[static_cast<std::size_t>(i)].factors)
            trunc += static_cast<long>(std::min(mult, h - 1)) * factor.degree();
        ledger.slope_rhs += omega[static_cast<std::size_t>(i)] * Rat(trunc);
    }
    ledger.slope_pass = ledger.slope_lhs <= ledger.slope_rhs;
    if (!ledger.slope_pass) ledger.all_pass = false;

    // deep cross-check: rebuild the Wronskian from a selected independent
    // subfamily plus the completion; it must be a constant multiple of W
    if (completion != nullptr && !ledger.rows.empty()) {
        FamilyClasses fc = family_classes(v, fam);
        RankFn capped_rank = [&](const std::vector<int>& sub) {
            std::vector<std::vector<GaussRat>> rows;
            for (int i : sub) rows.push_back(fc.coords[static_cast<std::size_t>(i)]);
            return std::min(static_cast<int>(rank_of(ExactMatrix::from_rows(rows))),
                            k + 1);
        };
        // the first ledger cluster, padded to an (N+1)-set
        const ClaimRow& row0 = ledger.rows.front();
        std::vector<int> r_set;
        for (int i = 0; i < q; ++i)
            if (row0.mults[static_cast<std::size_t>(i)] > 0) r_set.push_back(i);
        for (int i = 0; i < q && static_cast<int>(r_set.size()) < n_param + 1; ++i)
            if (std::find(r_set.begin(), r_set.end(), i) == r_set.end())
                r_set.push_back(i);
        std::sort(r_set.begin(), r_set.end());
        std::vector<double> e_values(static_cast<std::size_t>(q), 1.0);
        for (int i = 0; i < q; ++i)
            e_values[static_cast<std::size_t>(i)] = std::exp(
                std::min(row0.mults[static_cast<std::size_t>(i)], 60));
        SubsetSelection sel = select_subset(omega, capped_rank, r_set, e_values);
        std::vector<UniPoly> rebuilt;
        for (int i : sel.chosen) rebuilt.push_back(u[static_cast<std::size_t>(i)]);
        if (completion->extras.size() + rebuilt.size() ==
            static_cast<std::size_t>(h)) {
            for (const auto& t : completion->extras)
                rebuilt.push_back(compose(t, f.comps));
            UniPoly w2 = wronskian(rebuilt);
            bool proportional =
                !w2.is_zero() && (w2.lead().inv() * w2 == w.lead().inv() * w);
            ledger.extras.push_back(
                {"selected_subfamily_wronskian_proportional", proportional,
                 "subset {" + [&] {
                     std::string s;
                     for (std::size_t j = 0; j < sel.chosen.size(); ++j) {
                         if (j) s += ",";
                         s += std::to_string(sel.chosen[j]);
                     }
                     return s;
                 }() + "} plus completion rebuilds W up to a constant"});
            if (!proportional) ledger.all_pass = false;
        } else {
            ledger.extras.push_back(
                {"selected_subfamily_wronskian_proportional", false,
                 "selected subset size " + std::to_string(sel.chosen.size()) +
                     " plus completion does not total " + std::to_string(h)});
            ledger.all_pass = false;
        }
    }
    return ledger;
}

SMTReport smt_verify(const VarietyModel& v, const HypersurfaceFamily& fam,
                     const RationalCurve& f, const SMTOptions& opt) {
    if (static_cast<int>(f.comps.size()) != v.n() + 1)
        throw PreconditionError("smt_verify: curve component count != n+1");
    require_reduced(f);
    if (f.degree() < 1)
        throw PreconditionError("smt_verify: constant curve");
    if (!curve_on_variety(v, f))
        throw PreconditionError("smt_verify: curve does not lie on the variety");

    SMTReport rep;
    rep.q = fam.q();
    rep.n_param = fam.N;
    rep.k = v.k();
    rep.d = fam.common_degree;
    rep.hilbert = v.hilbert(rep.d);
    rep.coefficient =
        Rat(2 * fam.N - v.k() + 1) * Rat(rep.hilbert) / Rat(v.k() + 1);
    rep.curve_degree = f.degree();
    rep.deep = opt.deep;

    validate_family_on(v, fam);

    NondegeneracyResult nd = nondegenerate_over_quotient(v, f, rep.d);
    if (!nd.nondegenerate)
        throw PreconditionError(
            "smt_verify: curve is degenerate over the degree-" +
            std::to_string(rep.d) + " quotient (witness " + poly_str(nd.witness) + ")");

    rep.position = check_subgeneral(v, fam, opt.parallel, opt.d_cap);
    if (rep.position.overall != PositionReport::Overall::InPosition)
        throw PreconditionError("smt_verify: family position verdict is " +
                                overall_str(rep.position.overall));

    if (Rat(rep.q) <= rep.coefficient)
        throw PreconditionError(
            "smt_verify: q = " + std::to_string(rep.q) +
            " does not exceed the coefficient " + rat_str(rep.coefficient) +
            "; the asserted inequality is vacuous");

    for (auto wmsg : v.dimension_warnings()) rep.warnings.push_back(wmsg);

    // exact slope ledger over the original (unnormalized) compositions
    std::vector<UniPoly> comps(static_cast<std::size_t>(rep.q));
    rep.slope_rhs = 0;
    for (int i = 0; i < rep.q; ++i) {
        comps[static_cast<std::size_t>(i)] =
            compose(fam.members[static_cast<std::size_t>(i)], f.comps);
        const UniPoly& u = comps[static_cast<std::size_t>(i)];
        if (u.is_zero())
            throw PreconditionError("smt_verify: curve lies inside hypersurface " +
                                    std::to_string(i));
        SlopeRow row;
        row.index = i;
        row.degree = fam.degrees[static_cast<std::size_t>(i)];
        row.total_count = u.degree();
        row.truncated_count = truncated_zero_count(u, rep.hilbert - 1);
        row.contribution = Rat(row.truncated_count) / Rat(row.degree);
        rep.slope_rhs += row.contribution;
        rep.slope_rows.push_back(std::move(row));
    }
    rep.slope_lhs = (Rat(rep.q) - rep.coefficient) * Rat(rep.curve_degree);
    rep.slope_margin = rep.slope_rhs - rep.slope_lhs;

    // numeric ledger; radii colliding with zero moduli are reported, not used
    std::vector<Divisor> divisors;
    divisors.reserve(comps.size());
    for (const auto& u : comps) divisors.push_back(zero_divisor(u, opt.root_tol));
    double q_minus_coeff = static_cast<double>(rep.q) - rat_to_double(rep.coefficient);
    for (double r : opt.r_grid) {
        if (!(r > 1.0)) {
            rep.skipped_radii.push_back(r);
            continue;
        }
        bool collision = false;
        for (const auto& dv : divisors)
            for (const auto& z : dv.zeros)
                if (std::fabs(z.modulus - r) < 1e-6) collision = true;
        if (collision) {
            rep.skipped_radii.push_back(r);
            continue;
        }
        NumericRow row;
        row.r = r;
        row.t_f = characteristic(f, r, opt.quad_tol, false, opt.parallel);
        row.rhs = 0;
        for (int i = 0; i < rep.q; ++i) {
            double ni = counting_function(divisors[static_cast<std::size_t>(i)], r,
                                          rep.hilbert - 1);
            row.counting.push_back(ni);
            row.rhs += ni / static_cast<double>(fam.degrees[static_cast<std::size_t>(i)]);
        }
        row.lhs = q_minus_coeff * row.t_f;
        row.margin = row.rhs - row.lhs;
        rep.numeric_rows.push_back(std::move(row));
    }

    if (opt.deep) {
        Rng rng(opt.seed);
        rep.weights = generalized_weights(v, fam, rng, &rep.position);
        rep.completion = basis_completion(v, fam, rng, opt.max_retries);
        rep.claim = claim_check(v, fam, f, rep.weights->omega, &*rep.completion);
    }

    if (!opt.alpha_beta_samples.empty())
        rep.alpha_beta = estimate_alpha_beta(v, fam, opt.alpha_beta_samples);

    return rep;
}

std::pair<double, double> estimate_alpha_beta(
    const VarietyModel& v, const HypersurfaceFamily& fam,
    const std::vector<std::vector<GaussRat>>& samples) {
    if (samples.empty())
        throw PreconditionError("estimate_alpha_beta: no samples");
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto& x : samples) {
        if (static_cast<int>(x.size()) != v.n() + 1)
            throw PreconditionError("estimate_alpha_beta: sample arity != n+1");
        double sup = 0, norm2 = 0;
        for (const auto& c : x) {
            double a = std::sqrt(rat_to_double(c.norm()));
            sup = std::max(sup, a);
            norm2 += rat_to_double(c.norm());
        }
        if (sup == 0)
            throw PreconditionError("estimate_alpha_beta: zero sample point");
        for (const auto& g : v.generators()) {
            double val = std::sqrt(rat_to_double(g.eval(x).norm()));
            double scale = std::pow(sup, static_cast<double>(g.homogeneous_degree()));
            if (val > 1e-9 * scale)
                throw PreconditionError(
                    "estimate_alpha_beta: sample does not satisfy the generators");
        }
        double h = 0;
        for (int i = 0; i < fam.q(); ++i) {
            double val = std::sqrt(rat_to_double(fam.normalized(i).eval(x).norm()));
            h = std::max(h, val);
        }
        h /= std::pow(std::sqrt(norm2), static_cast<double>(fam.common_degree));
        if (first) {
            lo = hi = h;
            first = false;
        } else {
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
    }
    return {lo, hi};
}

} // namespace svlab
