#ifndef SVLAB_NEVANLINNA_HPP
#define SVLAB_NEVANLINNA_HPP

#include <vector>

#include "svlab/curve.hpp"
#include "svlab/divisor.hpp"
#include "svlab/unipoly.hpp"

namespace svlab {

/**
 * Characteristic function T_f(r): circle average of log ||f|| at radius r
 * minus the same average at radius 1.  The norm is Euclidean by default;
 * sup_norm switches to max_i |f_i| (used by the Jensen residual, whose
 * exact constancy needs the max norm).  Requires r >= 1 and a curve whose
 * components do not all vanish anywhere (reduced representations qualify).
 */
double characteristic(const RationalCurve& f, double r, double tol,
                      bool sup_norm = false, bool parallel = true);

/**
 * Proximity function m(r, num/den): circle average of log^+ |num/den| at
 * radius r.  Throws PreconditionError when a zero of den lies within tol
 * of the circle (the caller must perturb r).
 */
double proximity(const UniPoly& num, const UniPoly& den, double r, double tol,
                 bool parallel = true);

/**
 * Proximity of the logarithmic derivative phi^(order)/phi for
 * phi = num/den, computed exactly as a rational function first.  phi must
 * be nonconstant.
 */
double logderiv_proximity(const UniPoly& num, const UniPoly& den, int order,
                          double r, double tol, bool parallel = true);

struct JensenRow {
    double r;
    double characteristic; // sup-norm T of the curve (den : num)
    double counting;       // N(r, poles of num/den) = zeros of the reduced den
    double proximity;      // m(r, num/den)
    double residual;       // T - N - m, constant in r up to quadrature error
};

/// Jensen residual table of phi = num/den over the given radii (> 1 each).
std::vector<JensenRow> jensen_residual(const UniPoly& num, const UniPoly& den,
                                       const std::vector<double>& radii, double tol,
                                       bool parallel = true);

} // namespace svlab

#endif
