#include "svlab/unipoly.hpp"

#include <stdexcept>

namespace svlab {

UniPoly UniPoly::operator-() const {
    std::vector<GaussRat> r(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) r[j] = -c_[j];
    return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<GaussRat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly operator*(const GaussRat& s, UniPoly p) {
    for (auto& c : p.c_) c *= s;
    p.trim();
    return p;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<GaussRat> r(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j)
        r[j - 1] = GaussRat(Rat(static_cast<long>(j))) * c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = UniPoly::constant(GaussRat(1));
    UniPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return lead().inv() * *this;
}

UniPoly UniPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<GaussRat> r(c_.size() + static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < c_.size(); ++j) r[j + static_cast<std::size_t>(k)] = c_[j];
    return UniPoly(std::move(r));
}

GaussRat UniPoly::eval(const GaussRat& z) const {
    GaussRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly r = a;
    std::vector<GaussRat> q(a.degree() >= b.degree()
                                ? static_cast<std::size_t>(a.degree() - b.degree() + 1)
                                : 0);
    GaussRat binv = b.lead().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        GaussRat c = r.lead() * binv;
        q[static_cast<std::size_t>(k)] = c;
        r -= c * b.shifted_up(k);
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::invalid_argument("exact_div: division not exact");
    return q;
}

bool divides(const UniPoly& d, const UniPoly& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < d.degree()) return false;
    return divrem(a, d).second.is_zero();
}

namespace {

// --- Gaussian integer helpers for primitive remainder sequences ---------

struct GInt {
    Int re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

Int round_to_int(const Rat& x) {
    // nearest integer, halves toward +infinity: floor((2num + den) / (2den))
    Int t = 2 * x.get_num() + x.get_den();
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), Int(2 * x.get_den()).get_mpz_t());
    return q;
}

GInt gint_mul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt gint_sub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

// Euclidean gcd in Z[i] (result up to a unit); division rounds both
// coordinates to the nearest integer, which keeps the norm strictly
// decreasing.
GInt gint_gcd(GInt a, GInt b) {
    while (!b.is_zero()) {
        Int n = b.re * b.re + b.im * b.im;
        GInt t = gint_mul(a, {b.re, Int(-b.im)});
        GInt q{round_to_int(Rat(t.re) / Rat(n)), round_to_int(Rat(t.im) / Rat(n))};
        GInt r = gint_sub(a, gint_mul(q, b));
        a = b;
        b = r;
    }
    return a;
}

// Scale to Gaussian-integer coefficients and strip the Z[i] content.
UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    Int scale = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.re.get_den().get_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
    std::vector<GInt> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rat re = c.re * scale, im = c.im * scale;
        ic.push_back({Int(re.get_num()), Int(im.get_num())});
    }
    GInt content{0, 0};
    for (const auto& g : ic) {
        if (g.is_zero()) continue;
        content = content.is_zero() ? g : gint_gcd(content, g);
    }
    GaussRat cinv = GaussRat(Rat(content.re), Rat(content.im)).inv();
    std::vector<GaussRat> out;
    out.reserve(ic.size());
    for (const auto& g : ic) out.push_back(GaussRat(Rat(g.re), Rat(g.im)) * cinv);
    return UniPoly(std::move(out));
}

} // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    UniPoly A = primitive_part(a), B = primitive_part(b);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        // pseudo-remainder: lead(B)^(degA-degB+1) * A mod B stays in Z[i]
        GaussRat scale = B.lead().pow(static_cast<unsigned>(A.degree() - B.degree() + 1));
        UniPoly R = divrem(scale * A, B).second;
        A = B;
        B = R.is_zero() ? UniPoly() : primitive_part(R);
    }
    return A.monic();
}

SquarefreeDecomp squarefree_decomp(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomp of zero polynomial");
    SquarefreeDecomp out;
    out.lead = p.lead();
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly fd = f.derivative();
    UniPoly a = gcd(f, fd);
    UniPoly b = exact_div(f, a);
    UniPoly d = exact_div(fd, a) - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        UniPoly ai = gcd(b, d);
        if (ai.degree() > 0) out.factors.emplace_back(ai, mult);
        b = exact_div(b, ai);
        d = exact_div(d, ai) - b.derivative();
        ++mult;
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    UniPoly out = UniPoly::constant(GaussRat(1));
    for (const auto& [f, m] : squarefree_decomp(p).factors) out = out * f;
    return out;
}

int origin_multiplicity(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("origin_multiplicity of zero polynomial");
    int k = 0;
    while (p.coeff(k).is_zero()) ++k;
    return k;
}

UniPoly shift_down(const UniPoly& p, int k) {
    if (k == 0) return p;
    std::vector<GaussRat> r;
    for (int j = 0; j < k; ++j)
        if (!p.coeff(j).is_zero())
            throw std::invalid_argument("shift_down: polynomial not divisible by z^k");
    for (int j = k; j <= p.degree(); ++j) r.push_back(p.coeff(j));
    return UniPoly(std::move(r));
}

} // namespace svlab
