#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <complex>

#include "svlab/errors.hpp"
#include "svlab/gaussian.hpp"
#include "svlab/matrix.hpp"
#include "svlab/multipoly.hpp"
#include "svlab/parse.hpp"
#include "svlab/rng.hpp"
#include "svlab/roots.hpp"
#include "svlab/subsets.hpp"
#include "svlab/unipoly.hpp"

using namespace svlab;

namespace {

UniPoly up(const std::string& s) { return parse_uni(s); }

UniPoly random_poly(Rng& rng, int maxdeg) {
    int deg = static_cast<int>(rng.int_in(0, maxdeg));
    std::vector<GaussRat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c)
        x = GaussRat(Rat(static_cast<long>(rng.int_in(-6, 6))),
                     Rat(static_cast<long>(rng.int_in(-2, 2))));
    UniPoly p(c);
    return p.is_zero() ? UniPoly::variable() : p;
}

} // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussRat a(Rat(1, 2), Rat(3));
    GaussRat b(Rat(-2), Rat(1, 3));
    CHECK((a + b) == GaussRat(Rat(-3, 2), Rat(10, 3)));
    CHECK((a * b).re == Rat(1, 2) * Rat(-2) - Rat(3) * Rat(1, 3));
    CHECK(a * a.inv() == GaussRat(1));
    CHECK(a.conj().im == Rat(-3));
    CHECK(a.norm() == Rat(1, 4) + Rat(9));
    CHECK(gauss_i().pow(4) == GaussRat(1));
    CHECK(gauss_i().pow(3) == -gauss_i());
    CHECK((a / b) * b == a);
}

TEST_CASE("gaussian rational printing") {
    CHECK(GaussRat(Rat(3, 2)).str() == "3/2");
    CHECK(GaussRat(Rat(-2)).str() == "-2");
    CHECK(gauss_i().str() == "(0+i)");
    CHECK(GaussRat(Rat(1), Rat(1)).str() == "(1+i)");
    CHECK(GaussRat(Rat(1), Rat(-1)).str() == "(1-i)");
    CHECK(GaussRat(Rat(0), Rat(-5, 3)).str() == "(0-5/3i)");
    CHECK(GaussRat(Rat(1, 2), Rat(2, 7)).str() == "(1/2+2/7i)");
}

TEST_CASE("rational parsing and errors") {
    CHECK(rat_parse("3/4") == Rat(3, 4));
    CHECK(rat_parse("-6/4") == Rat(-3, 2));
    CHECK_THROWS_AS(rat_parse("+7"), ParseError);
    CHECK_THROWS_AS(rat_parse("3/"), ParseError);
    CHECK_THROWS_AS(rat_parse("a"), ParseError);
    try {
        rat_parse("12x", 100);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 102);
    }
}

TEST_CASE("unipoly basic operations") {
    UniPoly z = UniPoly::variable();
    UniPoly p = up("z^2 - 2*z + 2");
    CHECK(p.degree() == 2);
    CHECK(p.eval(GaussRat(Rat(1), Rat(1))) == GaussRat(0));
    CHECK((z * z - GaussRat(2) * z + UniPoly::constant(GaussRat(2))) == p);
    CHECK(p.derivative() == up("2*z - 2"));
    CHECK(up("z + 1").pow(3) == up("z^3 + 3*z^2 + 3*z + 1"));
    CHECK(up("2*z^2 - 2").monic() == up("z^2 - 1"));
    CHECK(up("z").shifted_up(2) == up("z^3"));
    CHECK(shift_down(up("z^3 + z^2"), 2) == up("z + 1"));
    CHECK(origin_multiplicity(up("z^3 + z^2")) == 2);
    CHECK(origin_multiplicity(up("1 + z")) == 0);
    CHECK(UniPoly().degree() == -1);
}

TEST_CASE("unipoly division") {
    UniPoly a = up("z^4 - 1");
    UniPoly b = up("z^2 + 1");
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.is_zero());
    CHECK(exact_div(a, b) == up("z^2 - 1"));
    CHECK(divides(b, a));
    CHECK(!divides(up("z - 2"), a));
    CHECK_THROWS(exact_div(up("z^2 + z + 1"), up("z - 1")));
    CHECK(divides(up("z - 1"), UniPoly()));
}

TEST_CASE("gcd oracles") {
    CHECK(gcd(up("z^2 + z - 2"), up("z^2 - 4*z + 3")) == up("z - 1"));
    CHECK(gcd(up("z^3"), up("z^2 + 1")).degree() == 0);
    CHECK(gcd(UniPoly(), up("3*z + 3")) == up("z + 1"));
    // gaussian-integer content handling: factor z - i
    UniPoly zi = up("z - i");
    CHECK(gcd(zi * up("z + 2"), zi * up("z - 7")) == zi);
    // large coefficients stay exact through the primitive sequence
    UniPoly big = up("1000000000000/7*z^2 - 3/1000000000000");
    CHECK(gcd(big * up("z - 1"), big * up("z + 1")) == big.monic());
}

TEST_CASE("gcd divides both inputs") {
    Rng rng(2024);
    for (int it = 0; it < 40; ++it) {
        UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        UniPoly g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) continue;
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(g.lead() == GaussRat(1));
        // common factors are found
        UniPoly c = random_poly(rng, 3);
        UniPoly g2 = gcd(a * c, b * c);
        CHECK(divides(c.monic(), g2));
    }
}

TEST_CASE("squarefree decomposition") {
    SquarefreeDecomp d = squarefree_decomp(up("z^3 - z^2"));
    REQUIRE(d.factors.size() == 2);
    // sorted by multiplicity ascending from Yun's loop
    bool has_z2 = false, has_zm1 = false;
    for (const auto& [f, m] : d.factors) {
        if (f == up("z") && m == 2) has_z2 = true;
        if (f == up("z - 1") && m == 1) has_zm1 = true;
    }
    CHECK(has_z2);
    CHECK(has_zm1);
    CHECK(squarefree_part(up("z^4 + 2*z^3 + z^2")) == up("z^2 + z"));

    Rng rng(7);
    for (int it = 0; it < 25; ++it) {
        UniPoly p = random_poly(rng, 3) * random_poly(rng, 2).pow(2);
        if (p.degree() < 1) continue;
        SquarefreeDecomp dec = squarefree_decomp(p);
        UniPoly rebuilt = UniPoly::constant(dec.lead);
        for (const auto& [f, m] : dec.factors) {
            rebuilt = rebuilt * f.pow(static_cast<unsigned>(m));
            CHECK(f.lead() == GaussRat(1));
            CHECK(gcd(f, f.derivative()).degree() == 0);
        }
        CHECK(rebuilt == p);
        // factors are pairwise coprime
        for (std::size_t i = 0; i < dec.factors.size(); ++i)
            for (std::size_t j = i + 1; j < dec.factors.size(); ++j)
                CHECK(gcd(dec.factors[i].first, dec.factors[j].first).degree() == 0);
    }
}

TEST_CASE("mono basis order and counts") {
    auto b = mono_basis(2, 3);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == ExpVec{3, 0});
    CHECK(b[1] == ExpVec{2, 1});
    CHECK(b[2] == ExpVec{1, 2});
    CHECK(b[3] == ExpVec{0, 3});
    CHECK(mono_basis(3, 2).size() == 6);
    CHECK(mono_basis(4, 3).size() == 20);
    auto b3 = mono_basis(3, 2);
    GradLexBefore lt;
    for (std::size_t i = 0; i + 1 < b3.size(); ++i) CHECK(lt(b3[i], b3[i + 1]));
}

TEST_CASE("multipoly arithmetic and evaluation") {
    MultiPoly p = parse_multi("x0^2 - x1*x2", 3);
    CHECK(p.is_homogeneous());
    CHECK(p.homogeneous_degree() == 2);
    CHECK(p.eval({GaussRat(2), GaussRat(1), GaussRat(4)}) == GaussRat(0));
    MultiPoly q = parse_multi("x0 + x1", 3);
    CHECK((q * q) == parse_multi("x0^2 + 2*x0*x1 + x1^2", 3));
    CHECK(!parse_multi("x0^2 + x1", 3).is_homogeneous());
    CHECK((p - p).is_zero());
    CHECK(p.degree() == 2);
}

TEST_CASE("coeff vector against a basis") {
    auto basis = mono_basis(3, 2);
    MultiPoly p = parse_multi("3*x0^2 - x2^2", 3);
    auto v = coeff_vector(p, basis);
    REQUIRE(v.size() == 6);
    CHECK(v[0] == GaussRat(3));
    CHECK(v[5] == GaussRat(-1));
    CHECK_THROWS(coeff_vector(parse_multi("x0", 3), basis));
}

TEST_CASE("compose substitutes curve components") {
    MultiPoly q = parse_multi("x1^2 - x0*x2", 3);
    std::vector<UniPoly> f{up("1"), up("z"), up("z^2")};
    CHECK(compose(q, f).is_zero());
    MultiPoly l = parse_multi("x0 + 2*x1 + x2", 3);
    CHECK(compose(l, f) == up("z^2 + 2*z + 1"));
    // power memoization handles repeated high exponents
    MultiPoly h = parse_multi("x1^5 + x1^5*x0 - 2*x1^5", 3);
    CHECK(compose(h, {up("1"), up("z + 1"), up("0")}) == UniPoly());
}

TEST_CASE("rref determinism and properties") {
    ExactMatrix m = ExactMatrix::from_rows({
        {GaussRat(1), GaussRat(2), GaussRat(3)},
        {GaussRat(2), GaussRat(4), GaussRat(6)},
        {GaussRat(0), GaussRat(1), GaussRat(1)},
    });
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    REQUIRE(r.pivot_cols.size() == 2);
    CHECK(r.pivot_cols[0] == 0);
    CHECK(r.pivot_cols[1] == 1);
    RrefResult r2 = rref(r.reduced);
    CHECK(r2.reduced == r.reduced);
    CHECK(rank_of(m.transposed()) == 2);

    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        GaussRat acc;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * ns[0][j];
        CHECK(acc == GaussRat(0));
    }
}

TEST_CASE("rank of random products is bounded") {
    Rng rng(11);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.int_in(2, 5));
        ExactMatrix m(n, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n + 1; ++j)
                m.at(i, j) = GaussRat(Rat(static_cast<long>(rng.int_in(-4, 4))),
                                      Rat(static_cast<long>(rng.int_in(-1, 1))));
        CHECK(rank_of(m) <= n);
        auto ns = nullspace(m);
        CHECK(ns.size() == m.cols() - rank_of(m));
    }
}

TEST_CASE("parser round trips") {
    for (const char* s : {"z^3 + 3*z^2 + 3*z + 1", "-z + 2", "(1+i)*z^2 - i",
                          "1/2*z^4 - 7/3", "z", "-1", "0", "(2-3/5i)*z"}) {
        UniPoly p = up(s);
        CHECK(parse_uni(poly_str(p)) == p);
    }
    for (const char* s : {"x0^2 - x1*x2", "x0 + x1 + x2", "-x0*x1 + (3/2)*x2^2",
                          "i*x0^3", "x2^2 + 2*x0*x1 + 4*x0^2"}) {
        MultiPoly p = parse_multi(s, 3);
        CHECK(parse_multi(poly_str(p), 3) == p);
    }
    Rng rng(99);
    for (int it = 0; it < 30; ++it) {
        UniPoly p = random_poly(rng, 6);
        CHECK(parse_uni(poly_str(p)) == p);
    }
}

TEST_CASE("parser accepts sign and parenthesized coefficient forms") {
    CHECK(up("+z") == up("z"));
    CHECK(up("(3/2)*z") == up("3/2*z"));
    CHECK(up("(1+2i)*z") == UniPoly({GaussRat(0), GaussRat(Rat(1), Rat(2))}));
    CHECK(up("(1-i)") == UniPoly::constant(GaussRat(Rat(1), Rat(-1))));
    CHECK(up("-i*z") == UniPoly({GaussRat(0), GaussRat(Rat(0), Rat(-1))}));
    CHECK(parse_multi("x1*x0", 2) == parse_multi("x0*x1", 2));
    CHECK(up("2*z - z") == up("z"));
}

TEST_CASE("parser reports byte offsets") {
    try {
        parse_uni("z^2 + $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
    try {
        parse_multi("x0 + x9", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() >= 5);
    }
    CHECK_THROWS_AS(parse_uni("z^9999999"), ParseError);
    CHECK_THROWS_AS(parse_uni(""), ParseError);
    CHECK_THROWS_AS(parse_multi("x0 ++ x1", 2), ParseError);
}

TEST_CASE("printer emits canonical forms") {
    CHECK(poly_str(up("z^2 - 2*z + 2")) == "z^2 - 2*z + 2");
    CHECK(poly_str(up("-z^2")) == "-z^2");
    CHECK(poly_str(UniPoly()) == "0");
    CHECK(poly_str(up("i*z")) == "i*z");
    // terms come out graded-lex: x0*x2 precedes x1^2
    CHECK(poly_str(parse_multi("x1^2 - x0*x2", 3)) == "-x0*x2 + x1^2");
}

TEST_CASE("complex root finding oracles") {
    auto roots = complex_roots(up("z^2 - 2*z + 2"), 1e-12);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.location.imag() < b.location.imag();
    });
    CHECK(std::abs(roots[0].location - std::complex<double>(1, -1)) < 1e-10);
    CHECK(std::abs(roots[1].location - std::complex<double>(1, 1)) < 1e-10);
    CHECK(roots[0].multiplicity == 1);

    auto r2 = complex_roots(up("z^3 - z^2"), 1e-12);
    REQUIRE(r2.size() == 2);
    bool origin2 = false, one1 = false;
    for (const auto& r : r2) {
        if (std::abs(r.location) < 1e-12 && r.multiplicity == 2) origin2 = true;
        if (std::abs(r.location - 1.0) < 1e-10 && r.multiplicity == 1) one1 = true;
    }
    CHECK(origin2);
    CHECK(one1);
}

TEST_CASE("complex roots residuals and multiplicity sums") {
    Rng rng(5150);
    for (int it = 0; it < 20; ++it) {
        UniPoly p = random_poly(rng, 6);
        if (p.degree() < 1) continue;
        auto roots = complex_roots(p, 1e-12);
        int total = 0;
        double scale = 0;
        for (const auto& c : p.coeffs())
            scale = std::max(scale, std::abs(c.to_complex<double>()));
        for (const auto& r : roots) {
            total += r.multiplicity;
            double mag = std::max(1.0, std::abs(r.location));
            double bound = 1e-7 * scale * std::pow(mag, p.degree());
            CHECK(std::abs(p.eval(std::complex<double>(r.location))) <= bound);
        }
        CHECK(total == p.degree());
    }
}

TEST_CASE("rng reproducibility") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 10; ++i) CHECK(a.raw() == b.raw());
    Rng c(1);
    long long v = c.int_in(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    double u = c.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}

TEST_CASE("subset enumeration") {
    auto s = subsets_of_size(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<int>{0, 1});
    CHECK(s.back() == std::vector<int>{2, 3});
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(subsets_up_to_size(3, 2).size() == 6);
    CHECK(subsets_of_size(3, 0).size() == 1); // just the empty subset
}
