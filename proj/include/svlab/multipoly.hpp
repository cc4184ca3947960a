#ifndef SVLAB_MULTIPOLY_HPP
#define SVLAB_MULTIPOLY_HPP

#include <map>
#include <vector>

#include "svlab/gaussian.hpp"
#include "svlab/unipoly.hpp"

namespace svlab {

/// Exponent tuple, one entry per variable.
using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/**
 * Graded lexicographic order, leading terms first: higher total degree
 * wins, ties broken by lexicographically larger exponent tuple.  This is
 * also the order mono_basis lists monomials in.
 */
struct GradLexBefore {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/**
 * Sparse multivariate polynomial over the Gaussian rationals with a fixed
 * number of variables x0..x_{nvars-1}.
 */
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly monomial(int nvars, const ExpVec& e, const GaussRat& c = GaussRat(1));

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, GaussRat, GradLexBefore>& terms() const { return terms_; }

    /// Max total degree of a term, -1 for the zero polynomial.
    int degree() const;

    bool is_homogeneous() const;

    /// Degree, requiring homogeneity (throws std::invalid_argument otherwise).
    int homogeneous_degree() const;

    void add_term(const ExpVec& e, const GaussRat& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const GaussRat& s, MultiPoly p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    GaussRat eval(const std::vector<GaussRat>& x) const;

private:
    int nvars_;
    std::map<ExpVec, GaussRat, GradLexBefore> terms_;
};

/**
 * All exponent tuples of total degree exactly d in `nvars` variables,
 * listed in graded-lex order (so C(nvars-1+d, d) entries).
 */
std::vector<ExpVec> mono_basis(int nvars, int d);

/// Coefficients of Q against the monomial list `basis` (entries not in the list must be absent).
std::vector<GaussRat> coeff_vector(const MultiPoly& q, const std::vector<ExpVec>& basis);

/// Substitute the curve components into Q: Q(f_0(z), ..., f_n(z)).
UniPoly compose(const MultiPoly& q, const std::vector<UniPoly>& f);

} // namespace svlab

#endif
