#include "svlab/uniqueness.hpp"

#include <cmath>

#include "svlab/divisor.hpp"
#include "svlab/errors.hpp"
#include "svlab/nevanlinna.hpp"
#include "svlab/parse.hpp"

namespace svlab {

namespace {

void check_curve(const VarietyModel& v, const RationalCurve& f, const char* label) {
    if (static_cast<int>(f.comps.size()) != v.n() + 1)
        throw PreconditionError(std::string(label) + ": component count != n+1");
    UniPoly g;
    for (const auto& c : f.comps) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd(g, c);
        if (g.degree() == 0) break;
    }
    if (g.is_zero())
        throw PreconditionError(std::string(label) + ": all components are zero");
    if (g.degree() > 0)
        throw PreconditionError(std::string(label) +
                                ": representation is not reduced (common factor " +
                                poly_str(g) + ")");
    if (f.degree() < 1)
        throw PreconditionError(std::string(label) + ": constant curve");
    if (!curve_on_variety(v, f))
        throw PreconditionError(std::string(label) + ": curve does not lie on the variety");
}

std::vector<UniPoly> compositions(const HypersurfaceFamily& fam, const RationalCurve& f,
                                  const char* label) {
    std::vector<UniPoly> out;
    out.reserve(static_cast<std::size_t>(fam.q()));
    for (int i = 0; i < fam.q(); ++i) {
        out.push_back(compose(fam.members[static_cast<std::size_t>(i)], f.comps));
        if (out.back().is_zero())
            throw PreconditionError(std::string(label) + ": curve lies inside hypersurface " +
                                    std::to_string(i));
    }
    return out;
}

/// All 2x2 minors f_s g_t - f_t g_s, s < t, in lexicographic order.
std::vector<std::pair<std::pair<int, int>, UniPoly>> minors_of(const RationalCurve& f,
                                                               const RationalCurve& g) {
    std::vector<std::pair<std::pair<int, int>, UniPoly>> out;
    int m = static_cast<int>(f.comps.size());
    for (int s = 0; s < m; ++s)
        for (int t = s + 1; t < m; ++t)
            out.push_back({{s, t},
                           f.comps[static_cast<std::size_t>(s)] *
                                   g.comps[static_cast<std::size_t>(t)] -
                               f.comps[static_cast<std::size_t>(t)] *
                                   g.comps[static_cast<std::size_t>(s)]});
    return out;
}

std::pair<bool, std::string> separated(const std::vector<UniPoly>& uf) {
    int q = static_cast<int>(uf.size());
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            const UniPoly& a = uf[static_cast<std::size_t>(i)];
            const UniPoly& b = uf[static_cast<std::size_t>(j)];
            if (a.degree() < 1 || b.degree() < 1) continue;
            UniPoly g = gcd(a, b);
            if (g.degree() > 0)
                return {false, "compositions " + std::to_string(i) + " and " +
                                   std::to_string(j) + " share the factor " + poly_str(g)};
        }
    return {true, ""};
}

std::pair<bool, std::string> agree_on_zero_sets(
    const std::vector<UniPoly>& uf, const std::vector<UniPoly>& ug,
    const std::vector<std::pair<std::pair<int, int>, UniPoly>>& minors) {
    auto side = [&](const std::vector<UniPoly>& u,
                    const char* tag) -> std::pair<bool, std::string> {
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i].degree() < 1) continue;
            UniPoly sf = squarefree_part(u[i]);
            for (const auto& [st, h] : minors)
                if (!divides(sf, h))
                    return {false, std::string(tag) + " composition " + std::to_string(i) +
                                       ": " + poly_str(sf) + " does not divide the (" +
                                       std::to_string(st.first) + "," +
                                       std::to_string(st.second) + ") minor"};
        }
        return {true, ""};
    };
    auto [okf, df] = side(uf, "f");
    if (!okf) return {false, df};
    return side(ug, "g");
}

} // namespace

Rat growth_ratio(const RationalCurve& f, const RationalCurve& g) {
    if (f.degree() < 1 || g.degree() < 1)
        throw PreconditionError("growth_ratio: both curves must be nonconstant");
    return Rat(f.degree()) / Rat(g.degree());
}

UniquenessReport uniqueness_check(const VarietyModel& v, const HypersurfaceFamily& fam,
                                  const RationalCurve& f, const RationalCurve& g,
                                  const UniquenessOptions& opt) {
    check_curve(v, f, "curve f");
    check_curve(v, g, "curve g");
    validate_family_on(v, fam);

    UniquenessReport rep;
    rep.q = fam.q();
    rep.n_param = fam.N;
    rep.k = v.k();
    rep.d = fam.common_degree;
    rep.hilbert = v.hilbert(rep.d);
    rep.deg_f = f.degree();
    rep.deg_g = g.degree();
    rep.threshold = Rat(2 * (rep.hilbert - 1)) / Rat(rep.d) +
                    Rat((2 * fam.N - v.k() + 1) * rep.hilbert) / Rat(v.k() + 1);
    rep.threshold_met = Rat(rep.q) > rep.threshold;

    NondegeneracyResult ndf = nondegenerate_over_quotient(v, f, rep.d);
    if (!ndf.nondegenerate)
        throw PreconditionError("curve f is degenerate over the degree-" +
                                std::to_string(rep.d) + " quotient (witness " +
                                poly_str(ndf.witness) + ")");
    NondegeneracyResult ndg = nondegenerate_over_quotient(v, g, rep.d);
    if (!ndg.nondegenerate)
        throw PreconditionError("curve g is degenerate over the degree-" +
                                std::to_string(rep.d) + " quotient (witness " +
                                poly_str(ndg.witness) + ")");

    PositionReport pos = check_subgeneral(v, fam, opt.parallel, opt.d_cap);
    if (pos.overall != PositionReport::Overall::InPosition)
        throw PreconditionError("family position verdict is " + overall_str(pos.overall));

    std::vector<UniPoly> uf = compositions(fam, f, "curve f");
    std::vector<UniPoly> ug = compositions(fam, g, "curve g");

    auto [sep, sep_detail] = separated(uf);
    rep.hyp_separated = sep;
    rep.separated_detail = sep_detail;

    auto minors = minors_of(f, g);
    rep.maps_equal = true;
    for (const auto& [st, h] : minors)
        if (!h.is_zero()) rep.maps_equal = false;

    auto [agree, agree_detail] = agree_on_zero_sets(uf, ug, minors);
    rep.hyp_agree = agree;
    rep.agree_detail = agree_detail;

    rep.consistent =
        !(rep.threshold_met && rep.hyp_separated && rep.hyp_agree && !rep.maps_equal);

    for (auto w : v.dimension_warnings()) rep.warnings.push_back(w);
    return rep;
}

Ineq52Report inequality_52_check(const VarietyModel& v, const HypersurfaceFamily& fam,
                                 const RationalCurve& f, const RationalCurve& g,
                                 const UniquenessOptions& opt) {
    check_curve(v, f, "curve f");
    check_curve(v, g, "curve g");
    validate_family_on(v, fam);

    std::vector<UniPoly> uf = compositions(fam, f, "curve f");
    std::vector<UniPoly> ug = compositions(fam, g, "curve g");

    auto [sep, sep_detail] = separated(uf);
    if (!sep)
        throw PreconditionError("separation hypothesis fails: " + sep_detail);
    auto minors = minors_of(f, g);
    auto [agree, agree_detail] = agree_on_zero_sets(uf, ug, minors);
    if (!agree)
        throw PreconditionError("agreement hypothesis fails: " + agree_detail);

    Ineq52Report rep;
    rep.identical_maps = true;
    rep.minor_s = rep.minor_t = -1;
    const UniPoly* href = nullptr;
    for (const auto& [st, h] : minors)
        if (!h.is_zero()) {
            rep.identical_maps = false;
            rep.minor_s = st.first;
            rep.minor_t = st.second;
            href = &h;
            break;
        }
    if (rep.identical_maps) {
        rep.sum_distinct = 0;
        rep.h_degree = 0;
        rep.margin_counting = 0;
        rep.margin_growth = 0;
        rep.pass = true;
        return rep;
    }

    rep.minor = poly_str(*href);
    rep.h_degree = href->degree();
    rep.sum_distinct = 0;
    for (const auto& u : uf)
        if (u.degree() >= 1) rep.sum_distinct += distinct_zero_count(u);
    rep.margin_counting = rep.h_degree - rep.sum_distinct;
    rep.margin_growth = f.degree() + g.degree() - rep.h_degree;
    rep.pass = rep.margin_counting >= 0 && rep.margin_growth >= 0;

    std::vector<Divisor> divs;
    for (const auto& u : uf)
        divs.push_back(u.degree() >= 1 ? zero_divisor(u, opt.root_tol) : Divisor{});
    Divisor hdiv = zero_divisor(*href, opt.root_tol);
    RationalCurve hcurve{{*href}};
    // the characteristic baseline at radius 1 diverges when the minor
    // vanishes on the unit circle; the exact margins above are unaffected
    for (const auto& z : hdiv.zeros)
        if (std::fabs(z.modulus - 1.0) < 1e-9) {
            rep.warnings.push_back(
                "minor has a zero of modulus 1; numeric table omitted");
            for (double r : opt.r_grid) rep.skipped_radii.push_back(r);
            return rep;
        }
    for (double r : opt.r_grid) {
        if (!(r > 1.0)) {
            rep.skipped_radii.push_back(r);
            continue;
        }
        bool collision = false;
        for (const auto& z : hdiv.zeros)
            if (std::fabs(z.modulus - r) < 1e-6) collision = true;
        for (const auto& dv : divs)
            for (const auto& z : dv.zeros)
                if (std::fabs(z.modulus - r) < 1e-6) collision = true;
        if (collision) {
            rep.skipped_radii.push_back(r);
            continue;
        }
        Ineq52Numeric row;
        row.r = r;
        row.sum_n1 = 0;
        for (const auto& dv : divs) row.sum_n1 += counting_function(dv, r, 1);
        row.t_h = characteristic(hcurve, r, opt.quad_tol, false, opt.parallel);
        row.t_fg = characteristic(f, r, opt.quad_tol, false, opt.parallel) +
                   characteristic(g, r, opt.quad_tol, false, opt.parallel);
        row.margin_counting = row.t_h - row.sum_n1;
        row.margin_growth = row.t_fg - row.t_h;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace svlab
