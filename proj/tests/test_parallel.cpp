#include <doctest.h>

#include <cmath>

#include "bergman/criteria.hpp"
#include "bergman/kernel.hpp"
#include "bergman/montecarlo.hpp"

using namespace bergman;
using ballgeom::BallPoint;
using ballgeom::Complex;

// The OpenMP paths must be bit-identical to the serial reference: every
// parallel kernel writes per-index slots and reduces in index order.

TEST_CASE("monte carlo: serial and openmp reductions agree bitwise") {
    auto f = [](const BallPoint& z) { return Complex(z.norm() * z.norm(), 0.0); };
    auto s = mc::ball_integral(2, 1234, 500000, f, Exec::Serial);
    auto p = mc::ball_integral(2, 1234, 500000, f, Exec::OpenMP);
    CHECK(s.value.real() == p.value.real());
    CHECK(s.value.imag() == p.value.imag());
    CHECK(s.std_error == p.std_error);
    // and the estimate is sane: int |z|^2 dV = 2n moment(2n+1) = 2/3 for n=2
    CHECK(s.value.real() == doctest::Approx(2.0 / 3).epsilon(2e-3));
}

TEST_CASE("criterion curves: serial and openmp agree bitwise") {
    criteria::WeightPair pair{weights::RadialWeight::power(1.0),
                              weights::RadialWeight::log_power(0.0, -2.0), 2.0, 2, "par"};
    auto grid = RadialGrid::dyadic(16);
    auto s = criteria::decide(pair, grid, Exec::Serial, 8);
    auto p = criteria::decide(pair, grid, Exec::OpenMP, 8);
    CHECK(s.m_curve == p.m_curve);
    CHECK(s.n_curve == p.n_curve);
    CHECK(s.kstar_curve == p.kstar_curve);
    CHECK(s.h_curve == p.h_curve);
    for (std::size_t j = 0; j < s.gj.size(); ++j) CHECK(s.gj[j].ratio == p.gj[j].ratio);
}

TEST_CASE("kernel coefficient builds: serial and openmp agree bitwise") {
    auto w1 = weights::RadialWeight::log_power(1.0, 1.5);
    auto w2 = weights::RadialWeight::log_power(1.0, 1.5);
    auto s = kernel::KernelSeries::build(w1, 3, 0.85, 1e-10, Exec::Serial);
    auto p = kernel::KernelSeries::build(w2, 3, 0.85, 1e-10, Exec::OpenMP);
    REQUIRE(s.truncation() == p.truncation());
    for (int k = 0; k <= s.truncation(); ++k) CHECK(s.log_coeff(k) == p.log_coeff(k));
}
