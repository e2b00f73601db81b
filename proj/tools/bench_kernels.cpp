// Benchmark comparing the serial reference path against the OpenMP path on
// the three data-parallel kernels: Monte-Carlo ball integration, criterion
// curve sweeps, and kernel coefficient builds.  Also asserts that both paths
// produce identical results.

#include <cmath>
#include <cstdio>

#include "bergman/criteria.hpp"
#include "bergman/kernel.hpp"
#include "bergman/montecarlo.hpp"
#include "bergman/parallel.hpp"

using namespace bergman;

namespace {

template <typename F>
double timed(F&& f) {
    double t0 = wall_time();
    f();
    return wall_time() - t0;
}

void print_row(const char* name, double serial_s, double omp_s, bool identical) {
    std::printf("%-24s %10.3fs %10.3fs %8.2fx   %s\n", name, serial_s, omp_s,
                serial_s / omp_s, identical ? "identical" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads available: %d\n", hardware_threads());
    std::printf("%-24s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        auto w = weights::RadialWeight::power(0.0);
        const int n = 2;
        auto ks = kernel::KernelSeries::build(w, n, 0.75, 1e-12, Exec::Serial);
        auto z = ballgeom::BallPoint::axis(n, 0, ballgeom::Complex(0.5, 0));
        auto f = [&](const ballgeom::BallPoint& xi) {
            return ballgeom::Complex(std::abs(ks.eval(z, xi)) * w.eval(xi.norm()), 0.0);
        };
        mc::Result rs, rp;
        double ts = timed([&] { rs = mc::ball_integral(n, 42, 4000000, f, Exec::Serial); });
        double tp = timed([&] { rp = mc::ball_integral(n, 42, 4000000, f, Exec::OpenMP); });
        print_row("mc-ball-integral", ts, tp, rs.value == rp.value);
    }

    {
        criteria::WeightPair pair{weights::RadialWeight::power(1.0),
                                  weights::RadialWeight::log_power(0.0, -2.0), 2.0, 2, "bench"};
        auto grid = RadialGrid::dyadic(20);
        criteria::CriterionReport rs, rp;
        double ts = timed([&] { rs = criteria::decide(pair, grid, Exec::Serial); });
        double tp = timed([&] { rp = criteria::decide(pair, grid, Exec::OpenMP); });
        bool same = rs.m_curve == rp.m_curve && rs.n_curve == rp.n_curve &&
                    rs.kstar_curve == rp.kstar_curve;
        print_row("criteria-curves", ts, tp, same);
    }

    {
        // fresh weight objects so each build starts with a cold moment cache
        auto w1 = weights::RadialWeight::log_power(0.0, -2.0);
        auto w2 = weights::RadialWeight::log_power(0.0, -2.0);
        kernel::KernelSeries ks_s = kernel::KernelSeries::build(w1, 2, 0.5, 1e-10, Exec::Serial);
        kernel::KernelSeries ks_p = ks_s;
        double ts = timed([&] {
            ks_s = kernel::KernelSeries::build(w1, 2, 0.995, 1e-10, Exec::Serial);
        });
        double tp = timed([&] {
            ks_p = kernel::KernelSeries::build(w2, 2, 0.995, 1e-10, Exec::OpenMP);
        });
        bool same = ks_s.truncation() == ks_p.truncation();
        for (int k = 0; same && k <= ks_s.truncation(); ++k)
            same = ks_s.log_coeff(k) == ks_p.log_coeff(k);
        print_row("kernel-series-build", ts, tp, same);
    }
    return 0;
}
