// Timing comparison of the OpenMP kernels against their serial reference
// implementations.  Results must agree exactly; the table is informational.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "svlab/nevanlinna.hpp"
#include "svlab/parse.hpp"
#include "svlab/quadrature.hpp"
#include "svlab/rng.hpp"
#include "svlab/variety.hpp"

using namespace svlab;

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn, int reps) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
}

UniPoly random_poly(Rng& rng, int deg) {
    std::vector<GaussRat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c)
        x = GaussRat(Rat(static_cast<long>(rng.int_in(-9, 9))),
                     Rat(static_cast<long>(rng.int_in(-3, 3))));
    c.back() = GaussRat(Rat(static_cast<long>(rng.int_in(1, 9))));
    return UniPoly(c);
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial * 1e3,
                parallel * 1e3, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    int failures = 0;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        // log+ of a quotient oscillating around modulus 1: the max(0, .)
        // kinks slow the trapezoid refinement down to polynomial order, so
        // the average needs deep grids and the point loop dominates
        Rng rng(1234);
        UniPoly num = random_poly(rng, 120);
        UniPoly den = num.lead() * parse_uni("z").pow(120);
        const double r = 1.5, tol = 1e-8;
        double got_serial = 0, got_parallel = 0;
        double ts = time_of([&] { got_serial = proximity(num, den, r, tol, false); }, 3);
        double tp = time_of([&] { got_parallel = proximity(num, den, r, tol, true); }, 3);
        row("proximity deg 120 / deg 118", ts, tp);
        if (got_serial != got_parallel) {
            std::printf("MISMATCH: proximity %.17g vs %.17g\n", got_serial, got_parallel);
            ++failures;
        }
    }

    {
        Rng rng(77);
        RationalCurve f{{random_poly(rng, 60), random_poly(rng, 60), random_poly(rng, 60),
                         random_poly(rng, 60), random_poly(rng, 60), random_poly(rng, 60)}};
        const double r = 2.0, tol = 1e-9;
        double got_serial = 0, got_parallel = 0;
        double ts = time_of([&] { got_serial = characteristic(f, r, tol, true, false); }, 3);
        double tp = time_of([&] { got_parallel = characteristic(f, r, tol, true, true); }, 3);
        row("sup-norm characteristic deg 60", ts, tp);
        if (got_serial != got_parallel) {
            std::printf("MISMATCH: characteristic %.17g vs %.17g\n", got_serial, got_parallel);
            ++failures;
        }
    }

    {
        // 56 exact emptiness scans on the twisted cubic
        VarietyModel cubic(3, 1,
                           {parse_multi("x1^2 - x0*x2", 4), parse_multi("x2^2 - x1*x3", 4),
                            parse_multi("x1*x2 - x0*x3", 4)});
        std::vector<MultiPoly> planes;
        for (int t = 1; t <= 8; ++t) {
            std::string s = "x0 + " + std::to_string(t) + "*x1 + " + std::to_string(t * t) +
                            "*x2 + " + std::to_string(t * t * t) + "*x3";
            planes.push_back(parse_multi(s, 4));
        }
        HypersurfaceFamily fam = HypersurfaceFamily::make(planes, 2);
        PositionReport serial_rep, parallel_rep;
        double ts = time_of([&] { serial_rep = check_subgeneral(cubic, fam, false); }, 1);
        double tp = time_of([&] { parallel_rep = check_subgeneral(cubic, fam, true); }, 1);
        row("position scan, 56 subsets in P^3", ts, tp);
        bool same = serial_rep.overall == parallel_rep.overall &&
                    serial_rep.rows.size() == parallel_rep.rows.size();
        for (std::size_t i = 0; same && i < serial_rep.rows.size(); ++i)
            same = serial_rep.rows[i].subset == parallel_rep.rows[i].subset &&
                   serial_rep.rows[i].verdict == parallel_rep.rows[i].verdict &&
                   serial_rep.rows[i].witness_degree == parallel_rep.rows[i].witness_degree;
        if (!same) {
            std::printf("MISMATCH: position reports differ\n");
            ++failures;
        }
    }

    if (failures) {
        std::printf("%d kernel mismatch(es)\n", failures);
        return 1;
    }
    std::printf("all kernels agree\n");
    return 0;
}
