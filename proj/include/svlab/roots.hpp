#ifndef SVLAB_ROOTS_HPP
#define SVLAB_ROOTS_HPP

#include <complex>
#include <vector>

#include "svlab/unipoly.hpp"

namespace svlab {

struct Root {
    std::complex<double> location;
    int multiplicity;
};

/**
 * All complex roots of p with exact multiplicities.  The multiplicity
 * structure comes from an exact squarefree decomposition (the root at the
 * origin is split off exactly first); only the locations of the simple
 * roots of each squarefree factor are numeric, via Aberth-Ehrlich iteration
 * in long double followed by Newton polishing.  Roots are sorted by
 * (re, im).  A constant nonzero p has no roots; p = 0 is rejected.
 */
std::vector<Root> complex_roots(const UniPoly& p, double tol = 1e-12);

} // namespace svlab

#endif
