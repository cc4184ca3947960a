#include "svlab/curve.hpp"

#include <stdexcept>

#include "svlab/errors.hpp"
#include "svlab/matrix.hpp"

namespace svlab {

int RationalCurve::degree() const {
    int d = -1;
    for (const auto& c : comps) d = std::max(d, c.degree());
    return d;
}

RationalCurve reduce_representation(std::vector<UniPoly> comps) {
    if (comps.empty())
        throw PreconditionError("reduce_representation: no components");
    UniPoly g;
    bool any = false;
    for (const auto& c : comps) {
        if (c.is_zero()) continue;
        any = true;
        g = g.is_zero() ? c.monic() : gcd(g, c);
        if (g.degree() == 0) break;
    }
    if (!any)
        throw PreconditionError("reduce_representation: all components vanish");
    if (g.degree() > 0)
        for (auto& c : comps)
            if (!c.is_zero()) c = exact_div(c, g);
    return RationalCurve{std::move(comps)};
}

bool curve_on_variety(const VarietyModel& v, const RationalCurve& f) {
    if (static_cast<int>(f.comps.size()) != v.n() + 1)
        throw PreconditionError("curve_on_variety: component count != n+1");
    for (const auto& g : v.generators())
        if (!compose(g, f.comps).is_zero()) return false;
    return true;
}

UniPoly wronskian(const std::vector<UniPoly>& fs) {
    std::size_t m = fs.size();
    if (m == 0) throw std::invalid_argument("wronskian of empty list");
    if (m > 20) throw std::invalid_argument("wronskian: too many functions");

    std::vector<std::vector<UniPoly>> deriv(m, std::vector<UniPoly>(m));
    for (std::size_t j = 0; j < m; ++j) {
        deriv[0][j] = fs[j];
        for (std::size_t i = 1; i < m; ++i) deriv[i][j] = deriv[i - 1][j].derivative();
    }

    // minors[mask] = det of the first popcount(mask) rows and columns in mask
    std::vector<UniPoly> minors(1u << m);
    minors[0] = UniPoly::constant(GaussRat(1));
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        int row = __builtin_popcount(mask) - 1;
        UniPoly acc;
        int pos = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(mask & (1u << j))) continue;
            UniPoly term = deriv[static_cast<std::size_t>(row)][j] *
                           minors[mask & ~(1u << j)];
            if (pos % 2 == static_cast<int>(row) % 2)
                acc += term;
            else
                acc -= term;
            ++pos;
        }
        minors[mask] = std::move(acc);
    }
    return minors[(1u << m) - 1];
}

std::vector<UniPoly> quotient_basis_compositions(const VarietyModel& v,
                                                 const RationalCurve& f, int d) {
    if (static_cast<int>(f.comps.size()) != v.n() + 1)
        throw PreconditionError("curve component count != n+1");
    const GradedPiece& piece = v.graded_piece(d);
    std::vector<UniPoly> out;
    out.reserve(piece.complement.size());
    for (const auto& e : piece.complement)
        out.push_back(compose(MultiPoly::monomial(v.n() + 1, e), f.comps));
    return out;
}

NondegeneracyResult nondegenerate_over_quotient(const VarietyModel& v,
                                                const RationalCurve& f, int d) {
    const GradedPiece& piece = v.graded_piece(d);
    std::vector<UniPoly> comps = quotient_basis_compositions(v, f, d);
    int width = 0;
    for (const auto& u : comps) width = std::max(width, u.degree() + 1);
    width = std::max(width, 1);
    ExactMatrix mat(comps.size(), static_cast<std::size_t>(width));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (int j = 0; j <= comps[i].degree(); ++j)
            mat.at(i, static_cast<std::size_t>(j)) = comps[i].coeff(j);
    if (rank_of(mat) == comps.size())
        return {true, MultiPoly(v.n() + 1)};

    auto basis = nullspace(mat.transposed());
    if (basis.empty())
        throw LemmaViolation("nondegenerate_over_quotient: rank deficit without "
                             "a left null vector");
    const std::vector<GaussRat>& c = basis.front();
    MultiPoly witness(v.n() + 1);
    for (std::size_t i = 0; i < piece.complement.size(); ++i)
        if (!c[i].is_zero())
            witness += MultiPoly::monomial(v.n() + 1, piece.complement[i], c[i]);
    return {false, witness};
}

int characteristic_slope(const RationalCurve& f) {
    int d = f.degree();
    if (d < 0) throw PreconditionError("characteristic_slope: zero curve");
    return d;
}

} // namespace svlab
