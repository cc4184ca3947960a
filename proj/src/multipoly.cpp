#include "svlab/multipoly.hpp"

#include <map>
#include <stdexcept>

namespace svlab {

MultiPoly MultiPoly::monomial(int nvars, const ExpVec& e, const GaussRat& c) {
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    // leading term has maximal total degree under the graded order
    return total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

int MultiPoly::homogeneous_degree() const {
    if (!is_homogeneous())
        throw std::invalid_argument("polynomial is not homogeneous");
    return degree();
}

void MultiPoly::add_term(const ExpVec& e, const GaussRat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent tuple has wrong arity");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(ea);
            for (int j = 0; j < a.nvars_; ++j) e[j] += eb[j];
            p.add_term(e, ca * cb);
        }
    return p;
}

MultiPoly operator*(const GaussRat& s, MultiPoly p) {
    if (s.is_zero()) return MultiPoly(p.nvars_);
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
}

GaussRat MultiPoly::eval(const std::vector<GaussRat>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong arity");
    GaussRat acc;
    for (const auto& [e, c] : terms_) {
        GaussRat t = c;
        for (int j = 0; j < nvars_; ++j)
            if (e[j] > 0) t *= x[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(e[j]));
        acc += t;
    }
    return acc;
}

namespace {

void mono_rec(int nvars, int pos, int remaining, ExpVec& cur, std::vector<ExpVec>& out) {
    if (pos == nvars - 1) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        mono_rec(nvars, pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<ExpVec> mono_basis(int nvars, int d) {
    if (nvars <= 0) throw std::invalid_argument("mono_basis: nvars must be positive");
    if (d < 0) return {};
    std::vector<ExpVec> out;
    ExpVec cur(static_cast<std::size_t>(nvars), 0);
    mono_rec(nvars, 0, d, cur, out);
    return out;
}

std::vector<GaussRat> coeff_vector(const MultiPoly& q, const std::vector<ExpVec>& basis) {
    std::map<ExpVec, std::size_t> index;
    for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
    std::vector<GaussRat> v(basis.size());
    for (const auto& [e, c] : q.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw std::invalid_argument("coeff_vector: monomial outside the given basis");
        v[it->second] = c;
    }
    return v;
}

UniPoly compose(const MultiPoly& q, const std::vector<UniPoly>& f) {
    if (static_cast<int>(f.size()) != q.nvars())
        throw std::invalid_argument("compose: component count mismatch");
    // memoize powers of each component
    std::vector<std::vector<UniPoly>> powers(f.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        powers[j].push_back(UniPoly::constant(GaussRat(1)));
    auto power = [&](std::size_t j, int e) -> const UniPoly& {
        while (static_cast<int>(powers[j].size()) <= e)
            powers[j].push_back(powers[j].back() * f[j]);
        return powers[j][static_cast<std::size_t>(e)];
    };
    UniPoly acc;
    for (const auto& [e, c] : q.terms()) {
        UniPoly t = UniPoly::constant(c);
        for (std::size_t j = 0; j < f.size(); ++j)
            if (e[j] > 0) t = t * power(j, e[j]);
        acc += t;
    }
    return acc;
}

} // namespace svlab
