#include "svlab/nochka.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "svlab/errors.hpp"
#include "svlab/matrix.hpp"
#include "svlab/simplex.hpp"
#include "svlab/subsets.hpp"

namespace svlab {

namespace {

std::string subset_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(s[j]);
    }
    return out + "}";
}

} // namespace

bool all_pass(const std::vector<CheckRecord>& records) {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

WeightCertificate nochka_weights(int q, int N, int k, const RankFn& rank) {
    if (k < 1 || N < k)
        throw PreconditionError("nochka_weights: need N >= k >= 1");
    if (q <= 2 * N - k + 1)
        throw PreconditionError("nochka_weights: need q > 2N - k + 1");

    // position precondition: every (N+1)-subset has full rank k+1
    for (const auto& sub : subsets_of_size(q, N + 1)) {
        int r = rank(sub);
        if (r != k + 1)
            throw PreconditionError("nochka_weights: subset " + subset_str(sub) +
                                    " has rank " + std::to_string(r) +
                                    ", position fails");
    }

    // subset-sum constraints: only subsets with rank < size and rank <= k
    // can bind (larger ranks are implied by the bound omega_i <= k/N)
    struct SubCon {
        std::vector<int> subset;
        int rank;
    };
    std::vector<SubCon> subcons;
    for (const auto& sub : subsets_up_to_size(q, N + 1)) {
        int r = rank(sub);
        if (r < static_cast<int>(sub.size()) && r <= k)
            subcons.push_back({sub, r});
    }

    std::size_t nv = static_cast<std::size_t>(q) + 1; // omega_0..omega_{q-1}, t
    Rat t_lo = Rat(k + 1) / Rat(2 * N - k + 1);
    Rat t_hi = Rat(k) / Rat(N);
    Rat eps = Rat(1) / Rat(4L * q * (N + 1));

    for (int attempt = 0; attempt <= 8; ++attempt) {
        for (int pin = 0; pin < q; ++pin) {
            std::vector<LinearConstraint> cons;
            // omega_pin = t
            {
                LinearConstraint c;
                c.a.assign(nv, Rat(0));
                c.a[static_cast<std::size_t>(pin)] = 1;
                c.a[nv - 1] = -1;
                c.b = 0;
                c.equality = true;
                cons.push_back(std::move(c));
            }
            // omega_i <= t
            for (int i = 0; i < q; ++i) {
                if (i == pin) continue;
                LinearConstraint c;
                c.a.assign(nv, Rat(0));
                c.a[static_cast<std::size_t>(i)] = 1;
                c.a[nv - 1] = -1;
                c.b = 0;
                c.equality = false;
                cons.push_back(std::move(c));
            }
            // sum omega_i = t (q - 2N + k - 1) + k + 1
            {
                LinearConstraint c;
                c.a.assign(nv, Rat(1));
                c.a[nv - 1] = Rat(-(q - 2 * N + k - 1));
                c.b = Rat(k + 1);
                c.equality = true;
                cons.push_back(std::move(c));
            }
            for (const auto& sc : subcons) {
                LinearConstraint c;
                c.a.assign(nv, Rat(0));
                for (int i : sc.subset) c.a[static_cast<std::size_t>(i)] = 1;
                c.b = Rat(sc.rank);
                c.equality = false;
                cons.push_back(std::move(c));
            }
            std::vector<Rat> lo(nv, eps), hi(nv, Rat(1));
            lo[nv - 1] = t_lo;
            hi[nv - 1] = t_hi;
            LPResult lp = lp_feasible(nv, cons, lo, hi);
            if (!lp.feasible) continue;

            WeightCertificate cert;
            cert.q = q;
            cert.n_param = N;
            cert.k = k;
            cert.omega.assign(lp.x.begin(), lp.x.end() - 1);
            cert.omega_tilde = lp.x.back();
            cert.pinned_index = pin;
            cert.transcript = verify_weight_certificate(cert, rank);
            if (!all_pass(cert.transcript)) {
                std::string bad;
                for (const auto& r : cert.transcript)
                    if (!r.pass) { bad = r.name + ": " + r.detail; break; }
                throw LemmaViolation("nochka_weights: solver output failed "
                                     "independent verification (" + bad + ")");
            }
            return cert;
        }
        eps /= 2;
    }
    throw LemmaViolation("nochka_weights: no feasible weight system found");
}

WeightCertificate nochka_weights_hyperplanes(
    const std::vector<std::vector<GaussRat>>& vectors, int N) {
    if (vectors.empty())
        throw PreconditionError("nochka_weights_hyperplanes: empty family");
    std::size_t dim = vectors[0].size();
    if (dim < 2)
        throw PreconditionError("nochka_weights_hyperplanes: arity must be >= 2");
    for (const auto& v : vectors)
        if (v.size() != dim)
            throw PreconditionError("nochka_weights_hyperplanes: ragged vectors");
    int k = static_cast<int>(dim) - 1;
    RankFn rank = [&vectors](const std::vector<int>& sub) {
        std::vector<std::vector<GaussRat>> rows;
        rows.reserve(sub.size());
        for (int i : sub) rows.push_back(vectors[static_cast<std::size_t>(i)]);
        return static_cast<int>(rank_of(ExactMatrix::from_rows(rows)));
    };
    return nochka_weights(static_cast<int>(vectors.size()), N, k, rank);
}

std::vector<CheckRecord> verify_weight_certificate(const WeightCertificate& cert,
                                                   const RankFn& rank) {
    std::vector<CheckRecord> out;
    int q = cert.q, N = cert.n_param, k = cert.k;
    auto record = [&out](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };

    bool range_ok = true;
    std::string range_detail;
    for (int i = 0; i < q; ++i) {
        const Rat& w = cert.omega[static_cast<std::size_t>(i)];
        if (!(w > 0 && w <= 1)) {
            range_ok = false;
            range_detail = "omega_" + std::to_string(i) + " = " + rat_str(w);
            break;
        }
    }
    record("weights_in_range", range_ok,
           range_ok ? "0 < omega_i <= 1 for all i" : range_detail);

    Rat maxw = cert.omega.empty() ? Rat(0) : cert.omega[0];
    for (const Rat& w : cert.omega) maxw = std::max(maxw, w);
    record("omega_tilde_is_max", maxw == cert.omega_tilde,
           "max omega = " + rat_str(maxw) + ", omega_tilde = " + rat_str(cert.omega_tilde));

    bool dominated = true;
    for (const Rat& w : cert.omega)
        if (w > cert.omega_tilde) dominated = false;
    record("weights_below_omega_tilde", dominated, "omega_i <= omega_tilde");

    Rat lo = Rat(k + 1) / Rat(2 * N - k + 1), hi = Rat(k) / Rat(N);
    record("omega_tilde_bounds", cert.omega_tilde >= lo && cert.omega_tilde <= hi,
           rat_str(lo) + " <= " + rat_str(cert.omega_tilde) + " <= " + rat_str(hi));

    Rat sum(0);
    for (const Rat& w : cert.omega) sum += w;
    Rat expect = cert.omega_tilde * Rat(q - 2 * N + k - 1) + Rat(k + 1);
    record("weight_sum_identity", sum == expect,
           "sum omega = " + rat_str(sum) + ", omega_tilde (q - 2N + k - 1) + k + 1 = " +
               rat_str(expect));

    bool subsets_ok = true;
    int checked = 0;
    std::string sub_detail;
    for (const auto& sub : subsets_up_to_size(q, N + 1)) {
        Rat s(0);
        for (int i : sub) s += cert.omega[static_cast<std::size_t>(i)];
        int r = rank(sub);
        ++checked;
        if (s > Rat(r)) {
            subsets_ok = false;
            sub_detail = "subset " + subset_str(sub) + ": sum = " + rat_str(s) +
                         " > rank = " + std::to_string(r);
            break;
        }
    }
    record("subset_sums_bounded_by_rank", subsets_ok,
           subsets_ok ? "all " + std::to_string(checked) + " subsets of size <= N+1 pass"
                      : sub_detail);

    bool big_ok = true;
    std::string big_detail;
    for (const auto& sub : subsets_of_size(q, N + 1)) {
        Rat s(0);
        for (int i : sub) s += cert.omega[static_cast<std::size_t>(i)];
        if (s > Rat(k + 1)) {
            big_ok = false;
            big_detail = "subset " + subset_str(sub) + ": sum = " + rat_str(s);
            break;
        }
    }
    record("full_subset_sums_at_most_k_plus_1", big_ok,
           big_ok ? "sum over every (N+1)-subset <= k+1" : big_detail);

    return out;
}

SubsetSelection select_subset(const std::vector<Rat>& omega, const RankFn& rank,
                              const std::vector<int>& r_set,
                              const std::vector<double>& e_values) {
    if (r_set.empty()) throw PreconditionError("select_subset: empty subset");
    for (int i : r_set) {
        if (i < 0 || static_cast<std::size_t>(i) >= omega.size() ||
            static_cast<std::size_t>(i) >= e_values.size())
            throw PreconditionError("select_subset: index out of range");
        if (e_values[static_cast<std::size_t>(i)] < 1.0)
            throw PreconditionError("select_subset: E values must be >= 1");
    }
    int rho = rank(r_set);
    double lhs = 0;
    for (int i : r_set)
        lhs += rat_to_double(omega[static_cast<std::size_t>(i)]) *
               std::log(e_values[static_cast<std::size_t>(i)]);

    int m = static_cast<int>(r_set.size());
    for (const auto& pick : subsets_of_size(m, rho)) {
        std::vector<int> cand;
        cand.reserve(pick.size());
        for (int p : pick) cand.push_back(r_set[static_cast<std::size_t>(p)]);
        if (rank(cand) != rho) continue;
        double rhs = 0;
        for (int i : cand) rhs += std::log(e_values[static_cast<std::size_t>(i)]);
        double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
        if (lhs <= rhs + 1e-12 * scale) return {cand, lhs, rhs};
    }
    throw LemmaViolation("select_subset: no qualifying subset exists");
}

std::vector<GaussRat> SubspaceWitness::restrict_form(
    const std::vector<GaussRat>& v) const {
    if (static_cast<int>(v.size()) != m_dim)
        throw std::invalid_argument("restrict_form: arity mismatch");
    std::vector<GaussRat> out(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) {
        GaussRat acc;
        for (int r = 0; r < m_dim; ++r)
            acc += v[static_cast<std::size_t>(r)] *
                   basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        out[static_cast<std::size_t>(c)] = acc;
    }
    return out;
}

SubspaceWitness generic_subspace(const std::vector<std::vector<GaussRat>>& forms,
                                 int dim, Rng& rng, int max_retries) {
    if (forms.empty()) throw PreconditionError("generic_subspace: no forms");
    int m_dim = static_cast<int>(forms[0].size());
    for (const auto& f : forms) {
        if (static_cast<int>(f.size()) != m_dim)
            throw PreconditionError("generic_subspace: ragged forms");
        bool zero = true;
        for (const auto& c : f)
            if (!c.is_zero()) { zero = false; break; }
        if (zero) throw PreconditionError("generic_subspace: zero form");
    }
    if (dim < 1 || dim > m_dim)
        throw PreconditionError("generic_subspace: need 1 <= dim <= M");

    int qn = static_cast<int>(forms.size());
    auto orig_rank = [&forms](const std::vector<int>& sub) {
        std::vector<std::vector<GaussRat>> rows;
        for (int i : sub) rows.push_back(forms[static_cast<std::size_t>(i)]);
        return static_cast<int>(rank_of(ExactMatrix::from_rows(rows)));
    };

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        SubspaceWitness w;
        w.m_dim = m_dim;
        w.dim = dim;
        w.retries = attempt;
        if (dim == m_dim) {
            for (int c = 0; c < dim; ++c) {
                std::vector<GaussRat> col(static_cast<std::size_t>(m_dim));
                col[static_cast<std::size_t>(c)] = GaussRat(1);
                w.basis.push_back(std::move(col));
            }
        } else {
            for (int c = 0; c < dim; ++c) {
                std::vector<GaussRat> col(static_cast<std::size_t>(m_dim));
                for (int r = 0; r < m_dim; ++r)
                    col[static_cast<std::size_t>(r)] =
                        GaussRat(Rat(static_cast<long>(rng.int_in(-100, 100))));
                w.basis.push_back(std::move(col));
            }
            if (static_cast<int>(rank_of(ExactMatrix::from_rows(w.basis))) != dim)
                continue;
        }

        std::vector<std::vector<GaussRat>> restricted;
        restricted.reserve(forms.size());
        for (const auto& f : forms) restricted.push_back(w.restrict_form(f));
        auto restr_rank = [&restricted](const std::vector<int>& sub) {
            std::vector<std::vector<GaussRat>> rows;
            for (int i : sub) rows.push_back(restricted[static_cast<std::size_t>(i)]);
            return static_cast<int>(rank_of(ExactMatrix::from_rows(rows)));
        };

        bool ok = true;
        int checked = 0;
        std::string detail;
        for (const auto& sub : subsets_up_to_size(qn, dim)) {
            int want = std::min(orig_rank(sub), dim);
            int got = restr_rank(sub);
            ++checked;
            if (got != want) {
                ok = false;
                detail = "subset " + subset_str(sub) + ": restricted rank " +
                         std::to_string(got) + " != min(original, dim) = " +
                         std::to_string(want);
                break;
            }
        }
        if (!ok) continue;
        w.transcript.push_back(
            {"subset_ranks_preserved", true,
             "all " + std::to_string(checked) +
                 " subsets of size <= dim keep rank (extends to all sizes)"});
        return w;
    }
    throw PreconditionError("generic_subspace: no verified subspace after " +
                            std::to_string(max_retries + 1) + " draws");
}

WeightCertificate generalized_weights(const VarietyModel& v,
                                      const HypersurfaceFamily& fam, Rng& rng,
                                      const PositionReport* position) {
    PositionReport local;
    if (position == nullptr) {
        local = check_subgeneral(v, fam);
        position = &local;
    }
    if (position->overall != PositionReport::Overall::InPosition)
        throw PreconditionError("generalized_weights: family is not verified to be "
                                "in N-subgeneral position (" +
                                overall_str(position->overall) + ")");
    validate_family_on(v, fam);

    FamilyClasses fc = family_classes(v, fam);
    SubspaceWitness sub = generic_subspace(fc.coords, v.k() + 1, rng);
    std::vector<std::vector<GaussRat>> restricted;
    restricted.reserve(fc.coords.size());
    for (const auto& c : fc.coords) restricted.push_back(sub.restrict_form(c));

    WeightCertificate cert = nochka_weights_hyperplanes(restricted, fam.N);
    for (const auto& r : sub.transcript) cert.transcript.push_back(r);
    cert.transcript.push_back({"generic_subspace_retries", true,
                               std::to_string(sub.retries) + " retries"});
    return cert;
}

BasisCompletion basis_completion(const VarietyModel& v, const HypersurfaceFamily& fam,
                                 Rng& rng, int max_retries) {
    validate_family_on(v, fam);
    FamilyClasses fc = family_classes(v, fam);
    int h = fc.hilbert;
    int k = v.k();
    int extra = h - k - 1;
    if (extra < 0)
        throw PreconditionError("basis_completion: quotient dimension below k+1");

    const GradedPiece& piece = v.graded_piece(fc.d);
    int qn = fam.q();

    // subsets whose classes form a (k+1)-frame; these must extend to a basis
    std::vector<std::vector<int>> frames;
    for (const auto& sub : subsets_of_size(qn, k + 1)) {
        std::vector<std::vector<GaussRat>> rows;
        for (int i : sub) rows.push_back(fc.coords[static_cast<std::size_t>(i)]);
        if (static_cast<int>(rank_of(ExactMatrix::from_rows(rows))) == k + 1)
            frames.push_back(sub);
    }
    if (frames.empty())
        throw PreconditionError("basis_completion: no independent (k+1)-subfamily");

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        BasisCompletion bc;
        bc.retries = attempt;
        for (int j = 0; j < extra; ++j) {
            std::vector<GaussRat> coords(static_cast<std::size_t>(h));
            MultiPoly t(v.n() + 1);
            for (int c = 0; c < h; ++c) {
                GaussRat val(Rat(static_cast<long>(rng.int_in(-100, 100))),
                             Rat(static_cast<long>(rng.int_in(-100, 100))));
                coords[static_cast<std::size_t>(c)] = val;
                t.add_term(piece.complement[static_cast<std::size_t>(c)], val);
            }
            bc.extra_coords.push_back(std::move(coords));
            bc.extras.push_back(std::move(t));
        }

        bool ok = true;
        std::string detail;
        for (const auto& frame : frames) {
            std::vector<std::vector<GaussRat>> rows;
            for (int i : frame) rows.push_back(fc.coords[static_cast<std::size_t>(i)]);
            for (const auto& c : bc.extra_coords) rows.push_back(c);
            if (static_cast<int>(rank_of(ExactMatrix::from_rows(rows))) != h) {
                ok = false;
                detail = "frame " + subset_str(frame) + " does not extend to rank " +
                         std::to_string(h);
                break;
            }
        }
        if (!ok) continue;
        bc.transcript.push_back({"frames_extend_to_basis", true,
                                 std::to_string(frames.size()) +
                                     " independent (k+1)-subfamilies extend to a "
                                     "basis of the degree-d quotient"});
        return bc;
    }
    throw PreconditionError("basis_completion: no verified completion after " +
                            std::to_string(max_retries + 1) + " draws");
}

} // namespace svlab
