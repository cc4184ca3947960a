// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Takes the shipped config directory as argv[1].

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "svlab/cli.hpp"
#include "svlab/config.hpp"
#include "svlab/errors.hpp"
#include "svlab/matrix.hpp"
#include "svlab/nevanlinna.hpp"
#include "svlab/nochka.hpp"
#include "svlab/parse.hpp"
#include "svlab/rng.hpp"
#include "svlab/smt.hpp"
#include "svlab/uniqueness.hpp"
#include "svlab/variety.hpp"

using namespace svlab;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, double elapsed) {
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
         << " (" << elapsed << "s)";
    std::cout << line.str() << std::endl;
    if (!pass) ++g_failures;
}

fs::path g_configs;

RunConfig load(const std::string& name) {
    return load_config((g_configs / (name + ".json")).string());
}

// silence run_cli console chatter while keeping our own lines readable
struct MuteStdout {
    std::streambuf* saved;
    std::ostringstream sink;
    MuteStdout() : saved(std::cout.rdbuf(sink.rdbuf())) {}
    ~MuteStdout() { std::cout.rdbuf(saved); }
};

RankFn vector_rank(const std::vector<std::vector<GaussRat>>& vectors) {
    return [vectors](const std::vector<int>& subset) {
        if (subset.empty()) return 0;
        std::vector<std::vector<GaussRat>> rows;
        for (int i : subset) rows.push_back(vectors[static_cast<std::size_t>(i)]);
        return static_cast<int>(rank_of(ExactMatrix::from_rows(rows)));
    };
}

UniPoly random_nonzero_poly(Rng& rng, int maxdeg) {
    for (;;) {
        int deg = static_cast<int>(rng.int_in(0, maxdeg));
        std::vector<GaussRat> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = GaussRat(Rat(static_cast<long>(rng.int_in(-4, 4))));
        UniPoly p(c);
        if (!p.is_zero()) return p;
    }
}

SMTOptions quick_smt_options() {
    SMTOptions opt;
    opt.r_grid.clear(); // exact ledger only; no quadrature in the sweeps
    return opt;
}

// -------------------------------------------------------------------------

void criterion_1_hilbert() {
    auto t0 = Clock::now();
    bool ok = true;
    VarietyModel conic(2, 1, {parse_multi("x1^2 - x0*x2", 3)});
    for (int d = 1; d <= 8; ++d) ok = ok && conic.hilbert(d) == 2 * d + 1;
    VarietyModel cubic(3, 1, {parse_multi("x1^2 - x0*x2", 4), parse_multi("x2^2 - x1*x3", 4),
                              parse_multi("x1*x2 - x0*x3", 4)});
    for (int d = 1; d <= 5; ++d) ok = ok && cubic.hilbert(d) == 3 * d + 1;
    VarietyModel p2(2, 2, {});
    for (int d = 1; d <= 6; ++d) ok = ok && p2.hilbert(d) == (d + 1) * (d + 2) / 2;
    VarietyModel quadric(3, 2, {parse_multi("x0*x3 - x1*x2", 4)});
    for (int d = 1; d <= 5; ++d) ok = ok && quadric.hilbert(d) == (d + 1) * (d + 1);
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    report(1, ok, "graded dimension tables match the closed forms on four models", dt);
}

void criterion_2_cartan_degeneration() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        RunConfig cfg = load("plane_cartan");
        VarietyModel v = cfg.make_variety();
        HypersurfaceFamily fam = cfg.make_family();
        ok = ok && v.hilbert(1) == cfg.k + 1;
        SMTOptions opt = quick_smt_options();
        SMTReport rep = smt_verify(v, fam, *cfg.curve_f, opt);
        // hyperplanes of a linearly embedded plane: the coefficient collapses
        // to the classical 2N - k + 1 and the margin stays nonnegative
        ok = ok && rep.hilbert == cfg.k + 1;
        ok = ok && rep.coefficient == Rat(2 * fam.N - cfg.k + 1);
        ok = ok && rep.slope_margin == Rat(3);
        ok = ok && rep.ok();
    } catch (const std::exception& e) {
        std::cerr << "criterion 2: " << e.what() << "\n";
        ok = false;
    }
    report(2, ok, "plane family reproduces the classical hyperplane constants", seconds_since(t0));
}

void criterion_3_weight_certificates() {
    auto t0 = Clock::now();
    bool ok = true;
    Rng rng(30303);
    int done = 0;
    int guard = 0;
    while (done < 100 && guard < 4000) {
        ++guard;
        int k = static_cast<int>(rng.int_in(1, 3));
        int N = k + static_cast<int>(rng.int_in(0, 2));
        int q = 2 * N - k + 2 + static_cast<int>(rng.int_in(0, 3));
        std::vector<std::vector<GaussRat>> vecs(static_cast<std::size_t>(q));
        for (auto& v : vecs) {
            v.resize(static_cast<std::size_t>(k) + 1);
            for (auto& x : v) x = GaussRat(Rat(static_cast<long>(rng.int_in(-9, 9))));
        }
        WeightCertificate cert;
        try {
            cert = nochka_weights_hyperplanes(vecs, N);
        } catch (const PreconditionError&) {
            continue;
        }
        RankFn rank = vector_rank(vecs);
        if (!all_pass(cert.transcript) || !all_pass(verify_weight_certificate(cert, rank))) {
            ok = false;
            break;
        }
        // the selection lemma on a random (N+1)-subset with random gauges
        std::vector<int> r_set;
        while (static_cast<int>(r_set.size()) < std::min(q, N + 1)) {
            int c = static_cast<int>(rng.int_in(0, q - 1));
            if (std::find(r_set.begin(), r_set.end(), c) == r_set.end()) r_set.push_back(c);
        }
        std::sort(r_set.begin(), r_set.end());
        std::vector<double> e(static_cast<std::size_t>(q));
        for (auto& x : e) x = std::exp(3.0 * rng.unit());
        try {
            SubsetSelection sel = select_subset(cert.omega, rank, r_set, e);
            if (sel.lhs_log > sel.rhs_log + 1e-9) ok = false;
            if (rank(sel.chosen) != static_cast<int>(sel.chosen.size())) ok = false;
        } catch (const std::exception& e2) {
            std::cerr << "criterion 3: " << e2.what() << "\n";
            ok = false;
            break;
        }
        ++done;
    }
    double dt = seconds_since(t0);
    ok = ok && done == 100 && dt < 60.0;
    report(3, ok, "100 random weight certificates verify with subset selection", dt);
}

void criterion_4_randomized_witnesses() {
    auto t0 = Clock::now();
    bool ok = true;
    Rng rng(40404);
    int total = 0, quick = 0;
    for (int it = 0; it < 150 && ok; ++it) {
        int m = static_cast<int>(rng.int_in(3, 6));
        int nf = m + static_cast<int>(rng.int_in(0, 2));
        int dim = static_cast<int>(rng.int_in(2, m));
        std::vector<std::vector<GaussRat>> forms(static_cast<std::size_t>(nf));
        for (auto& f : forms) {
            f.resize(static_cast<std::size_t>(m));
            bool zero = true;
            while (zero) {
                for (auto& x : f) {
                    x = GaussRat(Rat(static_cast<long>(rng.int_in(-5, 5))));
                    if (!x.is_zero()) zero = false;
                }
            }
        }
        try {
            SubspaceWitness w = generic_subspace(forms, dim, rng);
            if (!all_pass(w.transcript)) ok = false;
            ++total;
            if (w.retries <= 2) ++quick;
        } catch (const std::exception& e) {
            std::cerr << "criterion 4: " << e.what() << "\n";
            ok = false;
        }
    }
    const char* names[] = {"conic_4lines", "conic_7lines", "twisted_cubic_5planes",
                           "conic_mixed_degrees", "p2_multiplicity", "plane_cartan"};
    for (int it = 0; it < 50 && ok; ++it) {
        try {
            RunConfig cfg = load(names[it % 6]);
            VarietyModel v = cfg.make_variety();
            HypersurfaceFamily fam = cfg.make_family();
            Rng seeded(static_cast<std::uint64_t>(1000 + it));
            BasisCompletion bc = basis_completion(v, fam, seeded);
            if (!all_pass(bc.transcript)) ok = false;
            ++total;
            if (bc.retries <= 2) ++quick;
        } catch (const std::exception& e) {
            std::cerr << "criterion 4: " << e.what() << "\n";
            ok = false;
        }
    }
    double dt = seconds_since(t0);
    ok = ok && total == 200 && quick >= 190 && dt < 60.0;
    std::ostringstream what;
    what << "200 randomized subspace and completion witnesses (" << quick
         << " within 2 retries)";
    report(4, ok, what.str(), dt);
}

bool random_smt_instance(Rng& rng, int type) {
    SMTOptions opt = quick_smt_options();
    for (int attempt = 0; attempt < 60; ++attempt) {
        try {
            if (type == 0) {
                // plane with q random lines against a random low degree curve
                VarietyModel p2(2, 2, {});
                int q = 4 + static_cast<int>(rng.int_in(0, 2));
                std::vector<MultiPoly> ms;
                for (int i = 0; i < q; ++i) {
                    long a = rng.int_in(-4, 4), b = rng.int_in(-4, 4), c = rng.int_in(-4, 4);
                    if (a == 0 && b == 0 && c == 0) a = 1;
                    std::ostringstream s;
                    s << a << "*x0 + " << b << "*x1 + " << c << "*x2";
                    ms.push_back(parse_multi(s.str(), 3));
                }
                HypersurfaceFamily fam = HypersurfaceFamily::make(ms, 2);
                RationalCurve f{{random_nonzero_poly(rng, 3), random_nonzero_poly(rng, 3),
                                 random_nonzero_poly(rng, 3)}};
                SMTReport rep = smt_verify(p2, fam, f, opt);
                return rep.slope_margin >= Rat(0) && rep.ok();
            } else if (type == 1) {
                // conic with seven or eight random lines, standard parametrization
                VarietyModel conic(2, 1, {parse_multi("x1^2 - x0*x2", 3)});
                int q = 7 + static_cast<int>(rng.int_in(0, 1));
                std::vector<MultiPoly> ms;
                for (int i = 0; i < q; ++i) {
                    long a = rng.int_in(-5, 5), b = rng.int_in(-5, 5), c = rng.int_in(-5, 5);
                    if (a == 0 && b == 0 && c == 0) c = 1;
                    std::ostringstream s;
                    s << a << "*x0 + " << b << "*x1 + " << c << "*x2";
                    ms.push_back(parse_multi(s.str(), 3));
                }
                HypersurfaceFamily fam = HypersurfaceFamily::make(ms, 2);
                RationalCurve f{{parse_uni("1"), parse_uni("z"), parse_uni("z^2")}};
                SMTReport rep = smt_verify(conic, fam, f, opt);
                return rep.slope_margin >= Rat(0) && rep.ok();
            }
            // projective line with q random points
            VarietyModel p1(1, 1, {});
            int q = 3 + static_cast<int>(rng.int_in(0, 3));
            std::vector<MultiPoly> ms;
            for (int i = 0; i < q; ++i) {
                long a = rng.int_in(-6, 6), b = rng.int_in(-6, 6);
                if (a == 0 && b == 0) b = 1;
                std::ostringstream s;
                s << a << "*x0 + " << b << "*x1";
                ms.push_back(parse_multi(s.str(), 2));
            }
            HypersurfaceFamily fam = HypersurfaceFamily::make(ms, 1);
            RationalCurve f{{random_nonzero_poly(rng, 4), random_nonzero_poly(rng, 4)}};
            SMTReport rep = smt_verify(p1, fam, f, opt);
            return rep.slope_margin >= Rat(0) && rep.ok();
        } catch (const PreconditionError&) {
            continue; // degenerate draw; redraw the instance
        }
    }
    std::cerr << "random smt instance: no admissible draw after 60 attempts\n";
    return false;
}

void criterion_5_smt_margins() {
    auto t0 = Clock::now();
    bool ok = true;
    const char* names[] = {"conic_4lines", "conic_7lines", "twisted_cubic_5planes",
                           "conic_mixed_degrees", "p2_multiplicity", "plane_cartan"};
    for (const char* name : names) {
        try {
            RunConfig cfg = load(name);
            SMTOptions opt;
            opt.r_grid = cfg.r_grid;
            opt.quad_tol = cfg.quad_tol;
            opt.root_tol = cfg.root_tol;
            opt.seed = cfg.seed;
            opt.d_cap = cfg.d_cap;
            opt.max_retries = cfg.max_retries;
            SMTReport rep = smt_verify(cfg.make_variety(), cfg.make_family(),
                                       *cfg.curve_f, opt);
            if (rep.slope_margin < Rat(0) || !rep.ok()) {
                std::cerr << "criterion 5: nonpositive margin for " << name << "\n";
                ok = false;
            }
        } catch (const std::exception& e) {
            std::cerr << "criterion 5 (" << name << "): " << e.what() << "\n";
            ok = false;
        }
    }
    Rng rng(50505);
    int counts[3] = {25, 10, 15};
    for (int type = 0; type < 3 && ok; ++type)
        for (int it = 0; it < counts[type] && ok; ++it)
            if (!random_smt_instance(rng, type)) ok = false;
    double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    report(5, ok, "main inequality margins stay nonnegative on 6 shipped and 50 random runs",
           dt);
}

void criterion_6_truncation_ledger() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        RunConfig cfg = load("p2_multiplicity");
        SMTOptions opt = quick_smt_options();
        opt.deep = true;
        opt.seed = cfg.seed;
        SMTReport rep = smt_verify(cfg.make_variety(), cfg.make_family(),
                                   *cfg.curve_f, opt);
        ok = ok && rep.claim.has_value() && rep.claim->all_pass;
        bool found = false;
        if (rep.claim) {
            for (const auto& row : rep.claim->rows) {
                int mx = 0;
                for (int m : row.mults) mx = std::max(mx, m);
                if (mx >= rep.hilbert && row.rhs > Rat(0)) found = true;
            }
        }
        ok = ok && found;
    } catch (const std::exception& e) {
        std::cerr << "criterion 6: " << e.what() << "\n";
        ok = false;
    }
    report(6, ok, "claim ledger carries a zero beyond the truncation with positive demand",
           seconds_since(t0));
}

void criterion_7_numeric_coherence() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        RunConfig cfg = load("p2_multiplicity");
        SMTOptions opt;
        opt.r_grid = cfg.r_grid; // ends at r = 1000
        opt.quad_tol = cfg.quad_tol;
        SMTReport rep = smt_verify(cfg.make_variety(), cfg.make_family(),
                                   *cfg.curve_f, opt);
        ok = ok && !rep.numeric_rows.empty();
        if (ok) {
            const NumericRow& last = rep.numeric_rows.back();
            double per_log = last.margin / std::log(last.r);
            double slope = rat_to_double(rep.slope_margin);
            double dev = std::fabs(per_log - slope);
            ok = dev <= 0.05;
            if (!ok)
                std::cerr << "criterion 7: deviation " << dev << " at r=" << last.r << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "criterion 7: " << e.what() << "\n";
        ok = false;
    }
    report(7, ok, "numeric margin per log radius tracks the exact slope margin within 0.05",
           seconds_since(t0));
}

void criterion_8_jensen() {
    auto t0 = Clock::now();
    bool ok = true;
    Rng rng(80808);
    std::vector<double> radii;
    for (double r = 2; r <= 1024; r *= 2) radii.push_back(r);
    int done = 0, guard = 0;
    while (done < 20 && guard < 200 && ok) {
        ++guard;
        UniPoly num = random_nonzero_poly(rng, 5);
        UniPoly den = random_nonzero_poly(rng, 5);
        try {
            auto rows = jensen_residual(num, den, radii, 1e-8);
            double lo = rows.front().residual, hi = lo;
            for (const auto& row : rows) {
                lo = std::min(lo, row.residual);
                hi = std::max(hi, row.residual);
            }
            if (hi - lo > 1e-6) {
                std::cerr << "criterion 8: spread " << (hi - lo) << "\n";
                ok = false;
            }
            ++done;
        } catch (const PreconditionError&) {
            continue; // a zero sat on a grid radius; redraw
        } catch (const QuadratureError&) {
            continue;
        }
    }
    double dt = seconds_since(t0);
    ok = ok && done == 20;
    report(8, ok, "first main theorem residual constant to 1e-6 on 20 random functions", dt);
}

void criterion_9_uniqueness() {
    auto t0 = Clock::now();
    bool ok = true;
    for (const char* name : {"p1_unique_equal", "p1_shared_zeros", "p2_unique_hypfail"}) {
        try {
            RunConfig cfg = load(name);
            UniquenessOptions opt;
            opt.r_grid = cfg.r_grid;
            opt.quad_tol = cfg.quad_tol;
            UniquenessReport rep =
                uniqueness_check(cfg.make_variety(), cfg.make_family(), *cfg.curve_f,
                                 *cfg.curve_g, opt);
            if (!rep.consistent) {
                std::cerr << "criterion 9: inconsistent outcome for " << name << "\n";
                ok = false;
            }
        } catch (const std::exception& e) {
            std::cerr << "criterion 9 (" << name << "): " << e.what() << "\n";
            ok = false;
        }
    }
    Rng rng(90909);
    UniquenessOptions opt; // empty grid: hypothesis logic is exact
    int done = 0, guard = 0;
    while (done < 100 && guard < 4000 && ok) {
        ++guard;
        VarietyModel p1(1, 1, {});
        std::vector<MultiPoly> ms;
        bool bad = false;
        for (int i = 0; i < 5 && !bad; ++i) {
            long a = rng.int_in(-6, 6), b = rng.int_in(-6, 6);
            if (a == 0 && b == 0) b = 1;
            std::ostringstream s;
            s << a << "*x0 + " << b << "*x1";
            MultiPoly m = parse_multi(s.str(), 2);
            ms.push_back(m);
        }
        HypersurfaceFamily fam = HypersurfaceFamily::make(ms, 1);
        RationalCurve f{{random_nonzero_poly(rng, 4), random_nonzero_poly(rng, 4)}};
        RationalCurve g{{random_nonzero_poly(rng, 4), random_nonzero_poly(rng, 4)}};
        try {
            UniquenessReport rep = uniqueness_check(p1, fam, f, g, opt);
            if (!rep.consistent) {
                std::cerr << "criterion 9: inconsistent random pair\n";
                ok = false;
            }
            ++done;
        } catch (const PreconditionError&) {
            continue;
        }
    }
    double dt = seconds_since(t0);
    ok = ok && done == 100 && dt < 30.0;
    report(9, ok, "uniqueness outcome consistent on 3 shipped and 100 random curve pairs", dt);
}

struct CorpusRun {
    std::string name;
    std::vector<std::string> args;
};

std::vector<CorpusRun> corpus_commands() {
    std::vector<CorpusRun> runs;
    for (const char* name : {"conic_4lines", "conic_7lines", "twisted_cubic_5planes",
                             "conic_mixed_degrees", "p2_multiplicity", "plane_cartan"})
        runs.push_back({name, {"smt", "--deep"}});
    runs.push_back({"conic_5lines_weights", {"weights"}});
    for (const char* name : {"p1_unique_equal", "p1_shared_zeros", "p2_unique_hypfail"})
        runs.push_back({name, {"unique"}});
    runs.push_back({"jensen_demo", {"jensen"}});
    return runs;
}

bool run_corpus_into(const fs::path& dir) {
    fs::create_directories(dir);
    for (const auto& run : corpus_commands()) {
        std::vector<std::string> args = run.args;
        args.insert(args.end(), {"--config", (g_configs / (run.name + ".json")).string(),
                                 "--out", (dir / (run.name + ".json")).string(), "--csv-dir",
                                 (dir / (run.name + "_csv")).string()});
        MuteStdout mute;
        if (run_cli(args) != 0) {
            std::cout.rdbuf(mute.saved);
            std::cerr << "criterion 10: nonzero exit for " << run.name << "\n";
            return false;
        }
    }
    return true;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10_determinism() {
    auto t0 = Clock::now();
    bool ok = true;
    fs::path base = fs::temp_directory_path() / "svlab_acceptance";
    fs::remove_all(base);
    fs::path run1 = base / "run1", run2 = base / "run2";
    ok = run_corpus_into(run1) && run_corpus_into(run2);
    if (ok) {
        int compared = 0;
        for (const auto& entry : fs::recursive_directory_iterator(run1)) {
            if (!entry.is_regular_file()) continue;
            fs::path rel = fs::relative(entry.path(), run1);
            if (slurp(entry.path()) != slurp(run2 / rel)) {
                std::cerr << "criterion 10: byte mismatch in " << rel.string() << "\n";
                ok = false;
            }
            ++compared;
        }
        ok = ok && compared > 10;
    }
    fs::remove_all(base);
    report(10, ok, "full corpus reruns reproduce every report byte for byte",
           seconds_since(t0));
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <config-dir>\n";
        return 2;
    }
    g_configs = argv[1];
    if (!fs::is_directory(g_configs)) {
        std::cerr << "config directory not found: " << g_configs.string() << "\n";
        return 2;
    }
    criterion_1_hilbert();
    criterion_2_cartan_degeneration();
    criterion_3_weight_certificates();
    criterion_4_randomized_witnesses();
    criterion_5_smt_margins();
    criterion_6_truncation_ledger();
    criterion_7_numeric_coherence();
    criterion_8_jensen();
    criterion_9_uniqueness();
    criterion_10_determinism();
    if (g_failures > 0) {
        std::cout << g_failures << " criterion failure(s)" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
