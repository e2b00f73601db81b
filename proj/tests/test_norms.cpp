#include <doctest.h>

#include <cmath>

#include "bergman/norms.hpp"
#include "bergman/special.hpp"
#include "oracles.hpp"

using namespace bergman;
using ballgeom::BallPoint;
using ballgeom::Complex;
using kernel::KernelSeries;
using weights::RadialWeight;

TEST_CASE("integral means: constant kernel at z = 0 and Parseval at p = 2") {
    auto w = RadialWeight::power(1.0);
    auto ks = KernelSeries::build(w, 2, 0.92, 1e-12);
    double c0 = ks.coeff(0);
    for (double p : {1.0, 2.0}) {
        auto est = norms::mp_mean(ks, 0.7, BallPoint::zero(2), p);
        CHECK(est.value == doctest::Approx(c0).epsilon(1e-10));
    }
    // Parseval: M_2^2 = sum c_k^2 rho^{2k} (n-1)! k!/(n-1+k)!
    for (double rho : {0.4, 0.9}) {
        double m2 = norms::mp_mean_rho(ks, rho, 2.0, false, 1e-9).value;
        double sum = 0.0;
        for (int k = 0; k <= ks.truncation(); ++k)
            sum += std::exp(2.0 * ks.log_coeff(k) + 2.0 * k * std::log(rho)) *
                   oracles::sphere_monomial(k, 2);
        CHECK(m2 * m2 == doctest::Approx(sum).epsilon(1e-8));
    }
}

TEST_CASE("M_1 of the kernel is dominated by 1/omega_hat(r|z|)") {
    auto w = RadialWeight::power(0.0);
    auto ks = KernelSeries::build(w, 2, 0.96, 1e-12);
    double lo = INFINITY, hi = 0.0;
    for (double rho : {0.1, 0.3, 0.5, 0.7, 0.9, 0.95}) {
        double m1 = norms::mp_mean_rho(ks, rho, 1.0).value;
        double ratio = m1 * w.tail(rho);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 10.0);
}

TEST_CASE("comparison integral closed forms") {
    auto w = RadialWeight::power(0.0);
    for (double rho : {0.3, 0.6, 0.9}) {
        auto kern = norms::mp_comparison_integral(w, rho, 1.0, 2, false);
        CHECK(kern.value == doctest::Approx(rho / (1.0 - rho)).epsilon(1e-8));
        auto deriv = norms::mp_comparison_integral(w, rho, 1.0, 2, true);
        CHECK(deriv.value ==
              doctest::Approx(0.5 * (std::pow(1.0 - rho, -2.0) - 1.0)).epsilon(1e-8));
    }
    CHECK_THROWS_AS(norms::mp_comparison_integral(w, 0.2, 1.0, 2, false), DomainError);
}

TEST_CASE("A^p_upsilon comparison: closed form and band against direct quadrature") {
    auto w = RadialWeight::power(0.0);
    for (double z : {0.87, 0.9, 0.95}) {
        auto c = norms::apnorm_comparison(w, w, z, 1.0, 2, true);
        CHECK(c.value == doctest::Approx(z / (1.0 - z)).epsilon(1e-8));
    }
    CHECK_THROWS_AS(norms::apnorm_comparison(w, w, 0.5, 1.0, 2, true), DomainError);

    // direct ||Re B_z||^p_{A^p_upsilon} = 2n int r^{2n-1} ups(r) M_p^p(r, Re B_z) dr;
    // the band only needs percent-level accuracy, so a coarse Romberg and a
    // loose slice tolerance suffice
    auto ks = KernelSeries::build(w, 2, 0.96, 1e-12);
    for (double p : {1.0, 2.0}) {
        double lo = INFINITY, hi = 0.0;
        for (double z : {0.87, 0.95}) {
            auto direct_integrand = [&](double r) {
                double mp = norms::mp_mean_rho(ks, r * z, p, true, 1e-5).value;
                return std::pow(r, 3.0) * w.eval(std::min(r, 1.0 - 1e-14)) * std::pow(mp, p);
            };
            double direct = 4.0 * oracles::romberg(direct_integrand, 0.0, 1.0 - 1e-10, 8);
            double cmp = norms::apnorm_comparison(w, w, z, p, 2, true).value;
            lo = std::min(lo, direct / cmp);
            hi = std::max(hi, direct / cmp);
        }
        CHECK(hi / lo <= 10.0);
    }
}

TEST_CASE("carleson ratio: identity pair, power slopes, log-power divergence") {
    auto grid = RadialGrid::dyadic(10);
    auto w = RadialWeight::power(1.0);
    CHECK(norms::carleson_ratio(w, w, 2.0, 2.0, 2, grid).value ==
          doctest::Approx(1.0).epsilon(1e-13));

    // mu = power(beta), omega = power(alpha): finite iff beta >= alpha
    auto slope_of = [&](double beta, double alpha) {
        auto curve = norms::carleson_curve(RadialWeight::power(beta), RadialWeight::power(alpha),
                                           2.0, 2.0, 2, grid);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int c = 0;
        for (std::size_t k = 5; k < curve.size(); ++k) {
            double x = std::log1p(-curve[k].first), y = std::log(curve[k].second);
            sx += x, sy += y, sxx += x * x, sxy += x * y;
            ++c;
        }
        return (c * sxy - sx * sy) / (c * sxx - sx * sx);
    };
    CHECK(slope_of(2.0, 0.0) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(slope_of(0.0, 2.0) == doctest::Approx(-2.0).epsilon(0.05));
    CHECK(std::fabs(slope_of(1.0, 1.0)) < 0.02);

    // mu = LogPower(-1,-2) against omega = power(0): sup = infinity by slope
    auto curve = norms::carleson_curve(RadialWeight::log_power(-1.0, -2.0),
                                       RadialWeight::power(0.0), 2.0, 2.0, 2, grid);
    double s = std::log(curve[10].second / curve[8].second) /
               (std::log1p(-curve[10].first) - std::log1p(-curve[8].first));
    CHECK(s < -0.5);
    CHECK(curve[10].second > curve[5].second);

    CHECK_THROWS_AS(norms::carleson_ratio(w, w, 2.0, 1.0, 2, grid), DomainError);
}

TEST_CASE("littlewood-paley identity") {
    const int n = 2;
    auto w = RadialWeight::power(0.0);
    SUBCASE("m = 0 reduces to the total mass on both sides") {
        auto [lhs, rhs] = norms::littlewood_paley_check(w, {0, 0}, n);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("m = (1,0) against a fully independent nested Romberg oracle") {
        auto [lhs, rhs] = norms::littlewood_paley_check(w, {1, 0}, n);
        // rhs = 4 j^2 2n S_m int r^{2j-1} omega^{2*}(r) dr with S_m = 1/2, j = 1
        auto star = [&](double r) {
            return oracles::romberg(
                [&](double s) { return std::pow(s, 3.0) * std::log(s / r) * w.eval(s); }, r,
                1.0 - 1e-13, 14);
        };
        double outer = oracles::romberg([&](double r) { return r * star(r); }, 1e-8, 1.0 - 1e-8, 11);
        double oracle_rhs = 8.0 * 0.5 * outer;
        CHECK(rhs == doctest::Approx(oracle_rhs).epsilon(1e-6));
        CHECK(lhs / rhs == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(lhs == doctest::Approx(1.0 / 3).epsilon(1e-9)); // 2 n! m!/(n-1+|m|)! omega_5
    }
    SUBCASE("m = (2,1) for the rapidly increasing weight") {
        auto lpi = RadialWeight::log_power(-1.0, -2.0);
        auto [lhs, rhs] = norms::littlewood_paley_check(lpi, {2, 1}, n);
        CHECK(lhs / rhs == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("bloch norm of projected radial test functions") {
    auto w = RadialWeight::power(0.0);
    auto ks = KernelSeries::build(w, 2, 0.92, 1e-12);
    auto grid = RadialGrid::dyadic(8);

    auto one = norms::bloch_norm_of_projection(projection::RadialProfile::constant(1.0), ks, grid);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-11));

    auto flip = projection::RadialProfile::step(0.5, 1.0, -1.0);
    auto f1 = norms::bloch_norm_of_projection(flip, ks, grid);
    auto f2 = norms::bloch_norm_of_projection(flip, ks, RadialGrid::dyadic(12));
    CHECK(std::isfinite(f1.value));
    CHECK(f1.value == doctest::Approx(f2.value).epsilon(1e-4)); // stable under refinement

    // random sign patterns stay below the comparison-integral bound
    special::SplitMixStream rng(0x5eedbe26u, 31);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> breaks, vals;
        double r0 = 0.0;
        int parts = 2 + static_cast<int>(rng.next_uniform() * 3);
        for (int i = 0; i < parts - 1; ++i) {
            r0 += (1.0 - r0) * (0.2 + 0.6 * rng.next_uniform());
            breaks.push_back(r0);
        }
        for (int i = 0; i < parts; ++i) vals.push_back(rng.next_uniform() < 0.5 ? -1.0 : 1.0);
        auto prof = projection::RadialProfile::steps(breaks, vals);
        auto res = norms::bloch_norm_of_projection(prof, ks, grid);
        CHECK(res.value <= res.bound_c);
        CHECK(res.value <= 1.0 + 1e-9); // |P f| <= ||f||_inf for radial f
    }
}
