#include "svlab/quadrature.hpp"

#include <cmath>
#include <vector>

#include "svlab/errors.hpp"

namespace svlab {

namespace {

const double two_pi = 6.283185307179586476925286766559;

// fixed-shape pairwise tree over the slot vector: deterministic for a
// given n no matter how the slots were filled
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0;
        for (std::size_t j = lo; j < hi; ++j) s += v[j];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

void fill_slots(const std::function<double(double)>& g, std::vector<double>& slots,
                double theta0, double step, bool parallel) {
#ifdef _OPENMP
    if (parallel && slots.size() >= 64) {
#pragma omp parallel for schedule(static)
        for (std::size_t j = 0; j < slots.size(); ++j)
            slots[j] = g(theta0 + step * static_cast<double>(j));
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t j = 0; j < slots.size(); ++j)
        slots[j] = g(theta0 + step * static_cast<double>(j));
}

} // namespace

double circle_average(const std::function<double(double)>& g, double tol,
                      bool parallel) {
    if (!(tol > 0)) throw QuadratureError("circle_average: tolerance must be positive");
    const std::size_t n0 = 32;
    const std::size_t cap = 1u << 20;

    std::vector<double> slots(n0);
    fill_slots(g, slots, 0.0, two_pi / static_cast<double>(n0), parallel);
    double avg = pairwise_sum(slots, 0, slots.size()) / static_cast<double>(n0);

    for (std::size_t n = n0; n < cap; n *= 2) {
        // midpoints of the current grid
        slots.assign(n, 0.0);
        double step = two_pi / static_cast<double>(n);
        fill_slots(g, slots, step / 2.0, step, parallel);
        double mid_avg = pairwise_sum(slots, 0, slots.size()) / static_cast<double>(n);
        double refined = 0.5 * (avg + mid_avg);
        if (std::fabs(refined - avg) < tol) return refined;
        avg = refined;
    }
    throw QuadratureError("circle_average: did not converge within the point cap");
}

} // namespace svlab
