#ifndef SVLAB_QUADRATURE_HPP
#define SVLAB_QUADRATURE_HPP

#include <functional>

namespace svlab {

/**
 * (1/2pi) * integral of g over [0, 2pi), by the trapezoid rule on the
 * periodic grid with successive doubling until two refinements agree
 * within tol (then the finer value is returned).  Point batches can be
 * evaluated in parallel; values land in preassigned slots and are reduced
 * by a fixed-shape pairwise tree, so the serial path (parallel = false)
 * returns bit-identical results.  Throws QuadratureError if the point cap
 * is hit before convergence.
 */
double circle_average(const std::function<double(double)>& g, double tol,
                      bool parallel = true);

} // namespace svlab

#endif
