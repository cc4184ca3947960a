#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "svlab/errors.hpp"
#include "svlab/matrix.hpp"
#include "svlab/nochka.hpp"
#include "svlab/parse.hpp"
#include "svlab/rng.hpp"

using namespace svlab;

namespace {

RankFn vector_rank(const std::vector<std::vector<GaussRat>>& vectors) {
    return [vectors](const std::vector<int>& subset) {
        if (subset.empty()) return 0;
        std::vector<std::vector<GaussRat>> rows;
        for (int i : subset) rows.push_back(vectors[static_cast<std::size_t>(i)]);
        return static_cast<int>(rank_of(ExactMatrix::from_rows(rows)));
    };
}

// q pairwise independent vectors in C^2: (1, t_i) for distinct t_i
std::vector<std::vector<GaussRat>> fan(int q) {
    std::vector<std::vector<GaussRat>> v;
    for (int i = 0; i < q; ++i)
        v.push_back({GaussRat(1), GaussRat(Rat(i))});
    return v;
}

std::vector<std::vector<GaussRat>> random_vectors(Rng& rng, int q, int dim) {
    std::vector<std::vector<GaussRat>> v(static_cast<std::size_t>(q));
    for (auto& row : v) {
        row.resize(static_cast<std::size_t>(dim));
        for (auto& x : row) x = GaussRat(Rat(static_cast<long>(rng.int_in(-9, 9))));
    }
    return v;
}

} // namespace

TEST_CASE("cartan case gives unit weights") {
    // N = k: the weights collapse to omega_i = 1
    auto vecs = fan(5);
    // k = 1, N = 1 requires every pair independent; it is, so expect 1s
    WeightCertificate cert = nochka_weights_hyperplanes(vecs, 1);
    CHECK(cert.k == 1);
    CHECK(cert.n_param == 1);
    for (const auto& w : cert.omega) CHECK(w == Rat(1));
    CHECK(cert.omega_tilde == Rat(1));
    CHECK(all_pass(cert.transcript));
}

TEST_CASE("five plane lines with N=2 pin the weights at one half") {
    auto vecs = fan(5);
    WeightCertificate cert = nochka_weights_hyperplanes(vecs, 2);
    CHECK(cert.q == 5);
    CHECK(cert.k == 1);
    REQUIRE(cert.omega.size() == 5);
    for (const auto& w : cert.omega) CHECK(w == Rat(1, 2));
    CHECK(cert.omega_tilde == Rat(1, 2));
    CHECK(all_pass(cert.transcript));
    // sum rule: t(q - 2N + k - 1) + k + 1 = 1/2 * 0 + 2... with q=5, N=2, k=1:
    // 1/2 * (5 - 4 + 1 - 1) + 2 = 5/2
    Rat sum(0);
    for (const auto& w : cert.omega) sum += w;
    CHECK(sum == Rat(5, 2));
}

TEST_CASE("weights satisfy the structural bounds") {
    auto vecs = fan(7);
    WeightCertificate cert = nochka_weights_hyperplanes(vecs, 3);
    int q = cert.q, N = cert.n_param, k = cert.k;
    Rat lo(k + 1, 2 * N - k + 1), hi(k, N);
    CHECK(cert.omega_tilde >= lo);
    CHECK(cert.omega_tilde <= hi);
    Rat sum(0);
    for (const auto& w : cert.omega) {
        CHECK(w > Rat(0));
        CHECK(w <= cert.omega_tilde);
        sum += w;
    }
    CHECK(sum == cert.omega_tilde * Rat(q - 2 * N + k - 1) + Rat(k + 1));
}

TEST_CASE("position precondition is enforced") {
    // three coincident directions violate 1-subgeneral position
    std::vector<std::vector<GaussRat>> bad{
        {GaussRat(1), GaussRat(0)}, {GaussRat(2), GaussRat(0)}, {GaussRat(0), GaussRat(1)}};
    CHECK_THROWS_AS(nochka_weights_hyperplanes(bad, 1), PreconditionError);
    // q <= 2N - k + 1 leaves the weight system underdetermined
    CHECK_THROWS_AS(nochka_weights_hyperplanes(fan(4), 2), PreconditionError);
}

TEST_CASE("verification rejects a tampered certificate") {
    auto vecs = fan(5);
    WeightCertificate cert = nochka_weights_hyperplanes(vecs, 2);
    RankFn rank = vector_rank(vecs);
    CHECK(all_pass(verify_weight_certificate(cert, rank)));
    WeightCertificate bad = cert;
    bad.omega[2] = Rat(9, 10);
    CHECK(!all_pass(verify_weight_certificate(bad, rank)));
    WeightCertificate bad2 = cert;
    bad2.omega_tilde = Rat(1, 3);
    CHECK(!all_pass(verify_weight_certificate(bad2, rank)));
}

TEST_CASE("random hyperplane families always certify") {
    Rng rng(314159);
    int done = 0;
    while (done < 20) {
        int k = static_cast<int>(rng.int_in(1, 3));
        int N = k + static_cast<int>(rng.int_in(0, 2));
        int q = 2 * N - k + 2 + static_cast<int>(rng.int_in(0, 3));
        auto vecs = random_vectors(rng, q, k + 1);
        WeightCertificate cert;
        try {
            cert = nochka_weights_hyperplanes(vecs, N);
        } catch (const PreconditionError&) {
            continue; // degenerate draw, not in position
        }
        CHECK(all_pass(cert.transcript));
        CHECK(all_pass(verify_weight_certificate(cert, vector_rank(vecs))));
        ++done;
    }
}

TEST_CASE("subset selection keeps rank and dominates the weighted sum") {
    auto vecs = fan(5);
    WeightCertificate cert = nochka_weights_hyperplanes(vecs, 2);
    RankFn rank = vector_rank(vecs);
    std::vector<int> r_set{0, 1, 2};
    std::vector<double> e{std::exp(4.0), std::exp(1.0), std::exp(2.0), 1.0, 1.0};
    SubsetSelection sel = select_subset(cert.omega, rank, r_set, e);
    CHECK(static_cast<int>(sel.chosen.size()) == rank(r_set));
    CHECK(rank(sel.chosen) == rank(r_set));
    CHECK(sel.lhs_log <= sel.rhs_log + 1e-9);
    // lhs = 1/2 (4 + 1 + 2) = 3.5; best pair must cover it; {0, 2} gives 6
    CHECK(sel.chosen == std::vector<int>{0, 1});
    for (int i : sel.chosen)
        CHECK(std::find(r_set.begin(), r_set.end(), i) != r_set.end());
    CHECK_THROWS_AS(
        select_subset(cert.omega, rank, r_set, {0.5, 1.0, 1.0, 1.0, 1.0}),
        PreconditionError);
}

TEST_CASE("generic subspace is the identity at full dimension") {
    Rng rng(8);
    auto vecs = fan(4);
    SubspaceWitness w = generic_subspace(vecs, 2, rng);
    CHECK(w.dim == 2);
    CHECK(w.m_dim == 2);
    CHECK(w.retries == 0);
    CHECK(all_pass(w.transcript));
    // restriction through a 2x2 invertible matrix preserves all ranks
    RankFn orig = vector_rank(vecs);
    std::vector<std::vector<GaussRat>> restricted;
    for (const auto& v : vecs) restricted.push_back(w.restrict_form(v));
    RankFn res = vector_rank(restricted);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(orig({a, b}) == res({a, b}));
}

TEST_CASE("generic subspace preserves subset ranks after restriction") {
    Rng rng(21);
    // 5 vectors in C^4 with assorted dependencies
    std::vector<std::vector<GaussRat>> forms{
        {GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0)},
        {GaussRat(0), GaussRat(1), GaussRat(0), GaussRat(0)},
        {GaussRat(1), GaussRat(1), GaussRat(0), GaussRat(0)},
        {GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(0)},
        {GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1)},
    };
    SubspaceWitness w = generic_subspace(forms, 2, rng);
    CHECK(all_pass(w.transcript));
    std::vector<std::vector<GaussRat>> restricted;
    for (const auto& f : forms) restricted.push_back(w.restrict_form(f));
    RankFn orig = vector_rank(forms);
    RankFn res = vector_rank(restricted);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            CHECK(res({a, b}) == std::min(orig({a, b}), 2));
}

TEST_CASE("generalized weights for five lines on the conic") {
    VarietyModel v(2, 1, {parse_multi("x1^2 - x0*x2", 3)});
    std::vector<MultiPoly> lines;
    for (const char* s : {"x0 - x1", "x1 - x2", "x0 + x1", "x1 + x2", "x0 - 2*x2"})
        lines.push_back(parse_multi(s, 3));
    HypersurfaceFamily fam = HypersurfaceFamily::make(lines, 2);
    Rng rng(0xC0FFEE);
    WeightCertificate cert = generalized_weights(v, fam, rng);
    CHECK(cert.q == 5);
    CHECK(cert.k == 1);
    CHECK(cert.n_param == 2);
    for (const auto& w : cert.omega) CHECK(w == Rat(1, 2));
    CHECK(all_pass(cert.transcript));
}

TEST_CASE("basis completion extends every frame on the conic") {
    VarietyModel v(2, 1, {parse_multi("x1^2 - x0*x2", 3)});
    std::vector<MultiPoly> lines;
    for (const char* s : {"x2", "x0 - x2", "x0 + x2", "x0 + x1 + x2"})
        lines.push_back(parse_multi(s, 3));
    HypersurfaceFamily fam = HypersurfaceFamily::make(lines, 1);
    Rng rng(0xC0FFEE);
    BasisCompletion bc = basis_completion(v, fam, rng);
    // H_V(1) = 3, k + 1 = 2, so exactly one extra form
    CHECK(bc.extras.size() == 1);
    CHECK(bc.extra_coords.size() == 1);
    CHECK(all_pass(bc.transcript));
    CHECK(bc.retries == 0);
    CHECK(bc.extras[0].homogeneous_degree() == 1);
}
