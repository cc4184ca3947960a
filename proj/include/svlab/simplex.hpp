#ifndef SVLAB_SIMPLEX_HPP
#define SVLAB_SIMPLEX_HPP

#include <vector>

#include "svlab/rational.hpp"

namespace svlab {

struct LinearConstraint {
    std::vector<Rat> a;
    Rat b;
    bool equality; // a.x == b when true, a.x <= b otherwise
};

struct LPResult {
    bool feasible;
    std::vector<Rat> x;
};

/**
 * Exact rational feasibility test for { lo <= x <= hi, constraints }.
 * Phase-1 simplex with Bland's rule, so the search is finite and fully
 * deterministic.  lo and hi must both have nvars entries with lo <= hi.
 */
LPResult lp_feasible(std::size_t nvars, const std::vector<LinearConstraint>& cons,
                     const std::vector<Rat>& lo, const std::vector<Rat>& hi);

} // namespace svlab

#endif
