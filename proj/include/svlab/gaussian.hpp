#ifndef SVLAB_GAUSSIAN_HPP
#define SVLAB_GAUSSIAN_HPP

#include <complex>
#include <string>

#include "svlab/rational.hpp"

namespace svlab {

/**
 * Exact Gaussian rational a + bi with a, b arbitrary-precision rationals.
 * This is the scalar type of every exact computation in the library; there
 * is deliberately no floating fast path.
 */
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, Rat(-im)}; }

    /// |z|^2 = re^2 + im^2, exact.
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return {Rat(-re), Rat(-im)}; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat inv() const;
    GaussRat pow(unsigned e) const;

    template <typename F>
    std::complex<F> to_complex() const {
        return {static_cast<F>(rat_to_double(re)), static_cast<F>(rat_to_double(im))};
    }

    /**
     * Canonical text form: pure reals print as a rational ("3/2", "-2"),
     * anything else as "(a+bi)" / "(a-bi)" with unit imaginary parts
     * shortened to the bare "i".
     */
    std::string str() const;
};

/// Deterministic total order (lexicographic on (re, im)); used for sorting only.
int cmp(const GaussRat& a, const GaussRat& b);

inline GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

} // namespace svlab

#endif
