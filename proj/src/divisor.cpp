#include "svlab/divisor.hpp"

#include <cmath>

#include "svlab/errors.hpp"
#include "svlab/roots.hpp"

namespace svlab {

Divisor zero_divisor(const UniPoly& p, double tol) {
    if (p.is_zero())
        throw PreconditionError("zero_divisor: the zero polynomial has no divisor");
    Divisor d;
    for (const auto& root : complex_roots(p, tol))
        d.zeros.push_back({root.location, std::abs(root.location), root.multiplicity});
    return d;
}

double counting_function(const Divisor& nu, double r, int trunc) {
    if (!(r > 1.0))
        throw PreconditionError("counting_function: r must exceed 1");
    if (trunc < 0)
        throw PreconditionError("counting_function: negative truncation");
    double logr = std::log(r);
    double acc = 0;
    for (const auto& z : nu.zeros) {
        int m = trunc == 0 ? z.multiplicity : std::min(z.multiplicity, trunc);
        double contrib = logr - std::log(std::max(z.modulus, 1.0));
        if (contrib > 0) acc += static_cast<double>(m) * contrib;
    }
    return acc;
}

long truncated_zero_count(const UniPoly& p, int trunc) {
    if (p.is_zero())
        throw PreconditionError("truncated_zero_count: zero polynomial");
    if (trunc < 0)
        throw PreconditionError("truncated_zero_count: negative truncation");
    long acc = 0;
    for (const auto& [factor, mult] : squarefree_decomp(p).factors) {
        long m = trunc == 0 ? mult : std::min(mult, trunc);
        acc += m * factor.degree();
    }
    return acc;
}

long distinct_zero_count(const UniPoly& p) { return truncated_zero_count(p, 1); }

} // namespace svlab
