#ifndef SVLAB_UNIPOLY_HPP
#define SVLAB_UNIPOLY_HPP

#include <complex>
#include <utility>
#include <vector>

#include "svlab/gaussian.hpp"

namespace svlab {

/**
 * Univariate polynomial in z over the Gaussian rationals.  Coefficients are
 * stored lowest degree first; the zero polynomial is the empty vector and
 * reports degree -1.
 */
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const GaussRat& a) { return UniPoly({a}); }
    static UniPoly variable() { return UniPoly({GaussRat(0), GaussRat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const GaussRat& coeff(int j) const {
        static const GaussRat zero;
        if (j < 0 || j >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(j)];
    }
    const std::vector<GaussRat>& coeffs() const { return c_; }

    GaussRat lead() const { return is_zero() ? GaussRat() : c_.back(); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const GaussRat& s, UniPoly p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;
    UniPoly monic() const;

    /// Multiply by z^k.
    UniPoly shifted_up(int k) const;

    GaussRat eval(const GaussRat& z) const;

    template <typename F>
    std::complex<F> eval(const std::complex<F>& z) const {
        std::complex<F> acc(0, 0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * z + it->template to_complex<F>();
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GaussRat> c_;
};

/// Quotient and remainder of field division: a = q*b + r, deg r < deg b.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

/// Division known to be exact; throws std::invalid_argument on nonzero remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Does d divide a exactly?
bool divides(const UniPoly& d, const UniPoly& a);

/**
 * Monic gcd, computed with a primitive polynomial remainder sequence over
 * the Gaussian integers so intermediate coefficients stay small.
 */
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeDecomp {
    GaussRat lead;
    /// Monic pairwise-coprime squarefree factors with their multiplicities.
    std::vector<std::pair<UniPoly, int>> factors;
};

/// Yun's algorithm; reconstructs p = lead * prod factor^mult exactly.
SquarefreeDecomp squarefree_decomp(const UniPoly& p);

/// Monic product of the distinct irreducible factors (the radical).
UniPoly squarefree_part(const UniPoly& p);

/// Multiplicity of z = 0 as a root (0 if p(0) != 0); p must be nonzero.
int origin_multiplicity(const UniPoly& p);

/// Divide by z^k; the first k coefficients must be zero.
UniPoly shift_down(const UniPoly& p, int k);

} // namespace svlab

#endif
