#include "svlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace svlab {

namespace {

using CL = std::complex<long double>;

CL horner(const std::vector<CL>& c, const CL& z) {
    CL acc(0, 0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// simultaneous Aberth-Ehrlich iteration on a monic squarefree polynomial
std::vector<CL> aberth(const std::vector<CL>& c, double tol, int restart) {
    int m = static_cast<int>(c.size()) - 1;
    std::vector<CL> d(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j)
        d[j - 1] = static_cast<long double>(j) * c[j];

    long double bound = 0;
    for (int j = 0; j < m; ++j) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(j)]));
    long double radius = 1.0L + bound;

    std::vector<CL> z(static_cast<std::size_t>(m));
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int i = 0; i < m; ++i) {
        long double ang = 2.0L * pi * (static_cast<long double>(i) + 0.25L) /
                              static_cast<long double>(m) +
                          0.61803L * static_cast<long double>(restart + 1);
        z[static_cast<std::size_t>(i)] =
            radius * CL(std::cos(ang), std::sin(ang)) * (0.7L + 0.13L * restart);
    }

    const long double eps = static_cast<long double>(tol);
    for (int it = 0; it < 600; ++it) {
        long double worst = 0;
        for (int i = 0; i < m; ++i) {
            CL zi = z[static_cast<std::size_t>(i)];
            CL pv = horner(c, zi);
            CL dv = horner(d, zi);
            if (pv == CL(0, 0)) continue;
            if (dv == CL(0, 0)) dv = CL(1e-30L, 0);
            CL w = pv / dv;
            CL s(0, 0);
            for (int j = 0; j < m; ++j)
                if (j != i) s += CL(1, 0) / (zi - z[static_cast<std::size_t>(j)]);
            CL denom = CL(1, 0) - w * s;
            if (denom == CL(0, 0)) denom = CL(1e-30L, 0);
            CL delta = w / denom;
            z[static_cast<std::size_t>(i)] = zi - delta;
            worst = std::max(worst, std::abs(delta) / std::max(1.0L, std::abs(zi)));
        }
        if (worst < eps) {
            // Newton polish
            for (int i = 0; i < m; ++i) {
                for (int t = 0; t < 3; ++t) {
                    CL zi = z[static_cast<std::size_t>(i)];
                    CL pv = horner(c, zi);
                    CL dv = horner(d, zi);
                    if (dv == CL(0, 0)) break;
                    z[static_cast<std::size_t>(i)] = zi - pv / dv;
                }
            }
            return z;
        }
    }
    throw std::runtime_error("complex_roots: iteration did not converge");
}

} // namespace

std::vector<Root> complex_roots(const UniPoly& p, double tol) {
    if (p.is_zero())
        throw std::invalid_argument("complex_roots of zero polynomial");
    std::vector<Root> out;
    int om = origin_multiplicity(p);
    UniPoly q = shift_down(p, om);
    if (om > 0) out.push_back({{0.0, 0.0}, om});
    if (q.degree() > 0) {
        for (const auto& [factor, mult] : squarefree_decomp(q).factors) {
            std::vector<CL> c;
            c.reserve(factor.coeffs().size());
            for (const auto& g : factor.coeffs()) c.push_back(g.to_complex<long double>());
            for (const auto& v : c)
                if (!std::isfinite(static_cast<double>(v.real())) ||
                    !std::isfinite(static_cast<double>(v.imag())))
                    throw std::invalid_argument(
                        "complex_roots: coefficient exceeds floating range");
            std::vector<CL> roots;
            for (int restart = 0;; ++restart) {
                try {
                    roots = aberth(c, tol, restart);
                    break;
                } catch (const std::runtime_error&) {
                    if (restart >= 3) throw;
                }
            }
            for (const auto& z : roots)
                out.push_back({{static_cast<double>(z.real()), static_cast<double>(z.imag())},
                               mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.location.real() != b.location.real())
            return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

} // namespace svlab
