#ifndef SVLAB_CURVE_HPP
#define SVLAB_CURVE_HPP

#include <vector>

#include "svlab/multipoly.hpp"
#include "svlab/unipoly.hpp"
#include "svlab/variety.hpp"

namespace svlab {

/**
 * Rational curve C -> P^n given by coprime polynomial components
 * (f_0 : ... : f_n), not all zero.
 */
struct RationalCurve {
    std::vector<UniPoly> comps;

    int degree() const;
};

/// Strip the common gcd from the components; throws on the all-zero tuple.
RationalCurve reduce_representation(std::vector<UniPoly> comps);

/// Do all generators of V vanish identically on the curve?
bool curve_on_variety(const VarietyModel& v, const RationalCurve& f);

/**
 * Wronskian determinant of the given functions (rows are successive
 * derivatives).  Exact; computed by Laplace expansion with minors
 * memoized over column subsets, so no polynomial division is needed.
 */
UniPoly wronskian(const std::vector<UniPoly>& fs);

struct NondegeneracyResult {
    bool nondegenerate;
    /// When degenerate: a nonzero class of degree d with witness(f) == 0.
    MultiPoly witness;
};

/**
 * Is f linearly nondegenerate over the degree-d quotient of V: do the
 * canonical quotient-basis monomials stay independent after composing
 * with f?
 */
NondegeneracyResult nondegenerate_over_quotient(const VarietyModel& v,
                                                const RationalCurve& f, int d);

/// Compositions of the canonical degree-d quotient basis monomials with f.
std::vector<UniPoly> quotient_basis_compositions(const VarietyModel& v,
                                                 const RationalCurve& f, int d);

/// Exact growth order of the characteristic: deg f.
int characteristic_slope(const RationalCurve& f);

} // namespace svlab

#endif
