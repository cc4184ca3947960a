#ifndef SVLAB_DIVISOR_HPP
#define SVLAB_DIVISOR_HPP

#include <complex>
#include <vector>

#include "svlab/unipoly.hpp"

namespace svlab {

struct ZeroEntry {
    std::complex<double> location;
    double modulus;
    int multiplicity; // exact, from the squarefree decomposition
};

/// Zero divisor of a nonzero polynomial, sorted by (re, im) of the location.
struct Divisor {
    std::vector<ZeroEntry> zeros;
};

Divisor zero_divisor(const UniPoly& p, double tol = 1e-12);

/**
 * Counting function N(r) = sum over zeros of min(mult, trunc) *
 * max(0, log r - log max(|a|, 1)), the exact closed form of the
 * integrated counting integral from 1 to r.  trunc = 0 means untruncated.
 * Requires r > 1.
 */
double counting_function(const Divisor& nu, double r, int trunc = 0);

/// Exact slope of the counting function: sum over distinct zeros of min(mult, trunc).
long truncated_zero_count(const UniPoly& p, int trunc = 0);

/// Number of distinct complex zeros.
long distinct_zero_count(const UniPoly& p);

} // namespace svlab

#endif
