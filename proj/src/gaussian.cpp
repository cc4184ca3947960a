#include "svlab/gaussian.hpp"

#include <stdexcept>

namespace svlab {

GaussRat GaussRat::inv() const {
    if (is_zero()) throw std::domain_error("division by zero GaussRat");
    Rat n = norm();
    return {re / n, -im / n};
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inv(); }

GaussRat GaussRat::pow(unsigned e) const {
    GaussRat acc(Rat(1));
    GaussRat base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    std::string s = "(" + rat_str(re);
    Rat a = abs(im);
    s += (im > 0) ? "+" : "-";
    if (a != 1) s += rat_str(a);
    s += "i)";
    return s;
}

int cmp(const GaussRat& a, const GaussRat& b) {
    int c = ::cmp(a.re, b.re);
    if (c != 0) return c;
    return ::cmp(a.im, b.im);
}

} // namespace svlab
