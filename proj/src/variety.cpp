#include "svlab/variety.hpp"

#include <numeric>
#include <stdexcept>

#include "svlab/errors.hpp"
#include "svlab/subsets.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace svlab {

VarietyModel::VarietyModel(int n, int k, std::vector<MultiPoly> generators)
    : n_(n), k_(k), gens_(std::move(generators)) {
    if (n_ < 1) throw std::invalid_argument("VarietyModel: n must be >= 1");
    if (k_ < 1 || k_ > n_)
        throw std::invalid_argument("VarietyModel: need 1 <= k <= n");
    for (const auto& g : gens_) {
        if (g.nvars() != n_ + 1)
            throw std::invalid_argument("VarietyModel: generator arity must be n+1");
        if (g.is_zero()) throw std::invalid_argument("VarietyModel: zero generator");
        if (g.homogeneous_degree() < 1)
            throw std::invalid_argument("VarietyModel: generators must be nonconstant");
    }
}

const GradedPiece& VarietyModel::graded_piece(int d) const {
    if (d < 0) throw std::invalid_argument("graded_piece: negative degree");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(d);
        if (it != cache_.end()) return *it->second;
    }

    auto piece = std::make_unique<GradedPiece>(GradedPiece{
        d, mono_basis(n_ + 1, d), ExactMatrix(0, 0), {}, 0, {}, 0});

    std::vector<std::vector<GaussRat>> rows;
    for (const auto& g : gens_) {
        int e = g.homogeneous_degree();
        if (e > d) continue;
        for (const auto& m : mono_basis(n_ + 1, d - e)) {
            MultiPoly prod = MultiPoly::monomial(n_ + 1, m) * g;
            rows.push_back(coeff_vector(prod, piece->basis));
        }
    }
    ExactMatrix mat = rows.empty() ? ExactMatrix(0, piece->basis.size())
                                   : ExactMatrix::from_rows(rows);
    RrefResult r = rref(mat);
    piece->ideal_rref = r.reduced;
    piece->pivot_cols = r.pivot_cols;
    piece->ideal_rank = r.rank;

    std::vector<bool> is_pivot(piece->basis.size(), false);
    for (std::size_t c : piece->pivot_cols) is_pivot[c] = true;
    for (std::size_t j = 0; j < piece->basis.size(); ++j)
        if (!is_pivot[j]) piece->complement.push_back(piece->basis[j]);
    piece->hilbert = static_cast<int>(piece->basis.size() - piece->ideal_rank);

    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(d, std::move(piece));
    (void)inserted;
    return *it->second;
}

std::vector<GaussRat> VarietyModel::class_coords(const MultiPoly& q) const {
    if (q.is_zero())
        throw std::invalid_argument("class_coords: zero polynomial has no degree");
    int d = q.homogeneous_degree();
    const GradedPiece& piece = graded_piece(d);
    std::vector<GaussRat> v = coeff_vector(q, piece.basis);
    for (std::size_t p = 0; p < piece.pivot_cols.size(); ++p) {
        std::size_t col = piece.pivot_cols[p];
        if (v[col].is_zero()) continue;
        GaussRat f = v[col];
        for (std::size_t j = col; j < piece.basis.size(); ++j)
            v[j] -= f * piece.ideal_rref.at(p, j);
    }
    std::vector<GaussRat> coords;
    coords.reserve(piece.complement.size());
    std::vector<bool> is_pivot(piece.basis.size(), false);
    for (std::size_t c : piece.pivot_cols) is_pivot[c] = true;
    for (std::size_t j = 0; j < piece.basis.size(); ++j)
        if (!is_pivot[j]) coords.push_back(v[j]);
    return coords;
}

std::vector<std::string> VarietyModel::dimension_warnings() const {
    int window = std::max(k_ + 2, 4);
    int top = window + k_ + 1;
    std::vector<long long> h;
    for (int d = 1; d <= top; ++d) h.push_back(hilbert(d));
    // (k+1)-th finite differences of a degree-k polynomial vanish
    std::vector<long long> diff = h;
    for (int step = 0; step <= k_; ++step)
        for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    diff.resize(h.size() - static_cast<std::size_t>(k_ + 1));
    std::vector<std::string> warnings;
    for (std::size_t j = 0; j < diff.size(); ++j) {
        if (diff[j] != 0) {
            warnings.push_back(
                "declared dimension k=" + std::to_string(k_) +
                " is inconsistent with the Hilbert values over degrees 1.." +
                std::to_string(top) + " (nonzero finite difference at degree " +
                std::to_string(j + 1) + ")");
            break;
        }
    }
    return warnings;
}

HypersurfaceFamily HypersurfaceFamily::make(std::vector<MultiPoly> members, int N) {
    if (members.empty()) throw std::invalid_argument("empty hypersurface family");
    if (N < 1) throw std::invalid_argument("HypersurfaceFamily: N must be >= 1");
    HypersurfaceFamily fam;
    fam.N = N;
    fam.degrees.reserve(members.size());
    long lcm = 1;
    for (const auto& m : members) {
        if (m.is_zero()) throw std::invalid_argument("zero hypersurface member");
        int deg = m.homogeneous_degree();
        if (deg < 1)
            throw std::invalid_argument("hypersurface members must be nonconstant");
        fam.degrees.push_back(deg);
        lcm = std::lcm(lcm, static_cast<long>(deg));
    }
    fam.common_degree = static_cast<int>(lcm);
    fam.members = std::move(members);
    return fam;
}

MultiPoly HypersurfaceFamily::normalized(int i) const {
    const MultiPoly& m = members[static_cast<std::size_t>(i)];
    unsigned e = static_cast<unsigned>(common_degree / degrees[static_cast<std::size_t>(i)]);
    if (e == 1) return m;
    MultiPoly acc = m;
    for (unsigned j = 1; j < e; ++j) acc = acc * m;
    return acc;
}

FamilyClasses family_classes(const VarietyModel& v, const HypersurfaceFamily& fam) {
    FamilyClasses fc;
    fc.d = fam.common_degree;
    fc.hilbert = v.hilbert(fc.d);
    for (int i = 0; i < fam.q(); ++i)
        fc.coords.push_back(v.class_coords(fam.normalized(i)));
    return fc;
}

void validate_family_on(const VarietyModel& v, const HypersurfaceFamily& fam) {
    FamilyClasses fc = family_classes(v, fam);
    for (int i = 0; i < fam.q(); ++i) {
        bool zero = true;
        for (const auto& c : fc.coords[static_cast<std::size_t>(i)])
            if (!c.is_zero()) { zero = false; break; }
        if (zero)
            throw PreconditionError("hypersurface member " + std::to_string(i) +
                                    " vanishes identically on the variety");
    }
}

int family_rank(const VarietyModel& v, const HypersurfaceFamily& fam,
                const std::vector<int>& subset) {
    FamilyClasses fc = family_classes(v, fam);
    std::vector<std::vector<GaussRat>> rows;
    rows.reserve(subset.size());
    for (int i : subset) rows.push_back(fc.coords[static_cast<std::size_t>(i)]);
    return static_cast<int>(rank_of(ExactMatrix::from_rows(rows)));
}

std::string emptiness_str(Emptiness e) {
    switch (e) {
        case Emptiness::Empty: return "Empty";
        case Emptiness::NonEmpty: return "NonEmpty";
        default: return "Inconclusive";
    }
}

EmptinessReport is_empty_on_variety(const VarietyModel& v,
                                    const std::vector<MultiPoly>& qs,
                                    int d_cap) {
    std::vector<MultiPoly> gens = v.generators();
    for (const auto& q : qs) gens.push_back(q);
    if (gens.empty())
        throw std::invalid_argument("is_empty_on_variety: nothing to intersect");
    int cap = d_cap;
    if (cap <= 0) {
        cap = v.n() + 1;
        for (const auto& g : gens) cap += g.homogeneous_degree() - 1;
    }
    VarietyModel augmented(v.n(), v.k(), std::move(gens));
    EmptinessReport rep{Emptiness::Inconclusive, cap, {}, cap};
    for (int d = 0; d <= cap; ++d) {
        int h = augmented.hilbert(d);
        rep.hilbert_values.push_back(h);
        if (h == 0) {
            // the degree-d piece of the quotient vanished: every monomial of
            // degree d lies in the augmented ideal, so the projective zero
            // set is empty
            rep.verdict = Emptiness::Empty;
            rep.witness_degree = d;
            return rep;
        }
    }
    int window = v.k() + 2;
    if (static_cast<int>(rep.hilbert_values.size()) >= window) {
        bool stable = true;
        int last = rep.hilbert_values.back();
        for (int j = 0; j < window; ++j)
            if (rep.hilbert_values[rep.hilbert_values.size() - 1 - static_cast<std::size_t>(j)] !=
                last) {
                stable = false;
                break;
            }
        if (stable && last > 0) {
            rep.verdict = Emptiness::NonEmpty;
            rep.witness_degree = cap;
            return rep;
        }
    }
    rep.verdict = Emptiness::Inconclusive;
    rep.witness_degree = cap;
    return rep;
}

std::string overall_str(PositionReport::Overall o) {
    switch (o) {
        case PositionReport::Overall::InPosition: return "InPosition";
        case PositionReport::Overall::NotInPosition: return "NotInPosition";
        default: return "Inconclusive";
    }
}

PositionReport check_subgeneral(const VarietyModel& v, const HypersurfaceFamily& fam,
                                bool parallel, int d_cap) {
    int q = fam.q();
    if (q < fam.N + 1)
        throw PreconditionError("need at least N+1 hypersurfaces to test position");
    validate_family_on(v, fam);

    std::vector<MultiPoly> normalized;
    normalized.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) normalized.push_back(fam.normalized(i));

    auto subsets = subsets_of_size(q, fam.N + 1);
    PositionReport rep{PositionReport::Overall::InPosition, fam.N, fam.N + 1, {}};
    rep.rows.resize(subsets.size());

    auto run_one = [&](std::size_t s) {
        std::vector<MultiPoly> cut;
        for (int i : subsets[s]) cut.push_back(normalized[static_cast<std::size_t>(i)]);
        EmptinessReport er = is_empty_on_variety(v, cut, d_cap);
        rep.rows[s] = SubsetVerdict{subsets[s], er.verdict, er.witness_degree};
    };

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t s = 0; s < subsets.size(); ++s) run_one(s);
    } else {
        for (std::size_t s = 0; s < subsets.size(); ++s) run_one(s);
    }
#else
    (void)parallel;
    for (std::size_t s = 0; s < subsets.size(); ++s) run_one(s);
#endif

    bool any_nonempty = false, any_inconclusive = false;
    for (const auto& row : rep.rows) {
        if (row.verdict == Emptiness::NonEmpty) any_nonempty = true;
        if (row.verdict == Emptiness::Inconclusive) any_inconclusive = true;
    }
    if (any_nonempty)
        rep.overall = PositionReport::Overall::NotInPosition;
    else if (any_inconclusive)
        rep.overall = PositionReport::Overall::Inconclusive;
    else
        rep.overall = PositionReport::Overall::InPosition;
    return rep;
}

} // namespace svlab
