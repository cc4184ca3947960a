#include "svlab/nevanlinna.hpp"

#include <cmath>

#include "svlab/errors.hpp"
#include "svlab/quadrature.hpp"
#include "svlab/roots.hpp"

namespace svlab {

namespace {

/**
 * p(r e^{i theta}) = r^deg * q(e^{i theta}) with q_j = p_j r^{j - deg};
 * evaluating q on the unit circle keeps magnitudes moderate at large r.
 */
struct ScaledPoly {
    std::vector<std::complex<double>> c;
    int deg;

    std::complex<double> eval(double theta) const {
        std::complex<double> z(std::cos(theta), std::sin(theta));
        std::complex<double> acc(0, 0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
};

ScaledPoly scale_poly(const UniPoly& p, double r, int deg_reference) {
    ScaledPoly s;
    s.deg = deg_reference;
    s.c.reserve(p.coeffs().size());
    for (int j = 0; j <= p.degree(); ++j)
        s.c.push_back(p.coeff(j).to_complex<double>() *
                      std::pow(r, static_cast<double>(j - deg_reference)));
    return s;
}

double log_norm_average(const std::vector<UniPoly>& comps, double r, double tol,
                        bool sup_norm, bool parallel) {
    int deg = -1;
    for (const auto& c : comps) deg = std::max(deg, c.degree());
    std::vector<ScaledPoly> scaled;
    scaled.reserve(comps.size());
    for (const auto& c : comps)
        if (!c.is_zero()) scaled.push_back(scale_poly(c, r, deg));
    double avg = circle_average(
        [&scaled, sup_norm](double theta) {
            double acc = 0;
            for (const auto& s : scaled) {
                double a = std::norm(s.eval(theta));
                acc = sup_norm ? std::max(acc, a) : acc + a;
            }
            return 0.5 * std::log(acc);
        },
        tol, parallel);
    return static_cast<double>(deg) * std::log(r) + avg;
}

} // namespace

double characteristic(const RationalCurve& f, double r, double tol, bool sup_norm,
                      bool parallel) {
    if (!(r >= 1.0))
        throw PreconditionError("characteristic: r must be >= 1");
    if (f.degree() < 0)
        throw PreconditionError("characteristic: zero curve");
    return log_norm_average(f.comps, r, tol / 2, sup_norm, parallel) -
           log_norm_average(f.comps, 1.0, tol / 2, sup_norm, parallel);
}

double proximity(const UniPoly& num, const UniPoly& den, double r, double tol,
                 bool parallel) {
    if (!(r >= 1.0)) throw PreconditionError("proximity: r must be >= 1");
    if (den.is_zero()) throw PreconditionError("proximity: zero denominator");
    if (num.is_zero()) return 0.0;
    if (den.degree() > 0)
        for (const auto& z : zero_divisor(den).zeros)
            if (std::fabs(z.modulus - r) < tol)
                throw PreconditionError(
                    "proximity: a pole lies within tol of the circle |z| = r; "
                    "perturb r");
    ScaledPoly sn = scale_poly(num, r, num.degree());
    ScaledPoly sd = scale_poly(den, r, den.degree());
    double shift = static_cast<double>(num.degree() - den.degree()) * std::log(r);
    return circle_average(
        [&sn, &sd, shift](double theta) {
            double ln = 0.5 * std::log(std::norm(sn.eval(theta)));
            double ld = 0.5 * std::log(std::norm(sd.eval(theta)));
            return std::max(0.0, shift + ln - ld);
        },
        tol, parallel);
}

double logderiv_proximity(const UniPoly& num, const UniPoly& den, int order,
                          double r, double tol, bool parallel) {
    if (order < 1)
        throw PreconditionError("logderiv_proximity: order must be >= 1");
    if (num.is_zero() || den.is_zero())
        throw PreconditionError("logderiv_proximity: zero numerator or denominator");
    // constant phi has identically vanishing derivative
    if (num.derivative() * den == num * den.derivative())
        throw PreconditionError("logderiv_proximity: num/den is constant");
    UniPoly u = num, v = den;
    for (int j = 0; j < order; ++j) {
        UniPoly nu = u.derivative() * v - u * v.derivative();
        UniPoly nv = v * v;
        UniPoly g = gcd(nu, nv);
        if (g.degree() > 0) {
            nu = exact_div(nu, g);
            nv = exact_div(nv, g);
        }
        u = std::move(nu);
        v = std::move(nv);
        if (u.is_zero())
            throw PreconditionError("logderiv_proximity: derivative vanished");
    }
    // m(r, phi^(order) / phi) with phi^(order)/phi = (u * den) / (v * num)
    UniPoly p = u * den, q = v * num;
    UniPoly g = gcd(p, q);
    if (g.degree() > 0) {
        p = exact_div(p, g);
        q = exact_div(q, g);
    }
    return proximity(p, q, r, tol, parallel);
}

std::vector<JensenRow> jensen_residual(const UniPoly& num, const UniPoly& den,
                                       const std::vector<double>& radii, double tol,
                                       bool parallel) {
    if (num.is_zero() || den.is_zero())
        throw PreconditionError("jensen_residual: zero numerator or denominator");
    UniPoly nr = num, dr = den;
    UniPoly g = gcd(nr, dr);
    if (g.degree() > 0) {
        nr = exact_div(nr, g);
        dr = exact_div(dr, g);
    }
    RationalCurve curve{{dr, nr}};
    Divisor poles;
    if (dr.degree() > 0) poles = zero_divisor(dr);
    std::vector<JensenRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        if (!(r > 1.0))
            throw PreconditionError("jensen_residual: radii must exceed 1");
        JensenRow row;
        row.r = r;
        row.characteristic = characteristic(curve, r, tol, true, parallel);
        row.counting = dr.degree() > 0 ? counting_function(poles, r, 0) : 0.0;
        row.proximity = proximity(nr, dr, r, tol, parallel);
        row.residual = row.characteristic - row.counting - row.proximity;
        rows.push_back(row);
    }
    return rows;
}

} // namespace svlab
