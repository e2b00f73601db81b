#include <doctest.h>

#include <cmath>

#include "bergman/montecarlo.hpp"
#include "bergman/projection.hpp"
#include "bergman/special.hpp"
#include "oracles.hpp"

using namespace bergman;
using ballgeom::BallPoint;
using ballgeom::Complex;
using kernel::KernelSeries;
using projection::MonomialRadialFunction;
using projection::MonomialTerm;
using projection::RadialProfile;
using weights::RadialWeight;

TEST_CASE("projection acts diagonally with exact coefficients") {
    const int n = 2;
    auto w = RadialWeight::power(0.0);

    // phi == 1: reproducing
    for (auto m : {std::vector<int>{0, 0}, {3, 2}, {5, 0}}) {
        double lam = projection::project_coefficient(w, {m, RadialProfile::constant(1.0)}, n);
        CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
    }

    // f(z) = |z|^2 z_1 -> (3/4) z_1 for the constant weight
    double lam = projection::project_coefficient(w, {{1, 0}, RadialProfile::power(2.0)}, n);
    CHECK(lam == doctest::Approx(0.75).epsilon(1e-12));

    // indicator profile: lambda = int_{1/2}^1 r^7 w / w_7 = 1 - 2^{-8}
    double lam2 = projection::project_coefficient(w, {{1, 1}, RadialProfile::step(0.5, 0.0, 1.0)}, n);
    CHECK(lam2 == doctest::Approx(1.0 - std::ldexp(1.0, -8)).epsilon(1e-12));
}

TEST_CASE("projection is idempotent on its image") {
    const int n = 2;
    auto w = RadialWeight::log_power(0.0, -2.0);
    MonomialRadialFunction f;
    f.dim = n;
    f.terms.push_back({{2, 1}, RadialProfile::step(0.3, 0.5, -1.0)});
    f.terms.push_back({{0, 1}, RadialProfile::power(1.5)});
    auto once = projection::project(w, f, n);
    auto twice = projection::project(w, once, n);
    for (std::size_t i = 0; i < once.terms.size(); ++i)
        CHECK(once.terms[i].profile.eval(0.5) ==
              doctest::Approx(twice.terms[i].profile.eval(0.5)).epsilon(1e-12));
}

TEST_CASE("maximal projection of radial functions") {
    const int n = 2;
    auto w = RadialWeight::power(0.0);
    auto ks = KernelSeries::build(w, n, 0.93, 1e-12);

    // f == 1 at z = 0: kernel is constant, P+ = 1
    CHECK(projection::maximal_project_radial(w, RadialProfile::constant(1.0), BallPoint::zero(n),
                                             ks) == doctest::Approx(1.0).epsilon(1e-7));

    // self-convergence under quadrature refinement at |z| = 0.9
    auto z9 = BallPoint::axis(n, 0, Complex(0.9, 0));
    double a = projection::maximal_project_radial(w, RadialProfile::constant(1.0), z9, ks, 1e-6);
    double b = projection::maximal_project_radial(w, RadialProfile::constant(1.0), z9, ks, 1e-8);
    CHECK(a == doctest::Approx(b).epsilon(1e-5));

    // |P_w f| <= P+_w(|f|) pointwise for radial test functions
    auto flip = RadialProfile::step(0.5, 1.0, -1.0);
    MonomialRadialFunction f;
    f.dim = n;
    f.terms.push_back({{0, 0}, flip});
    auto pf = projection::project(w, f, n);
    auto absf = RadialProfile::step(0.5, 1.0, 1.0);
    for (double r : {0.0, 0.4, 0.8}) {
        auto z = BallPoint::axis(n, 0, Complex(r, 0));
        CHECK(std::abs(pf.eval(z)) <=
              projection::maximal_project_radial(w, absf, z, ks) + 1e-9);
    }
}

TEST_CASE("kernel slice mean is dominated by the reciprocal tail (eq. 0515-4 band)") {
    const int n = 2;
    auto w = RadialWeight::power(0.0);
    auto ks = KernelSeries::build(w, n, 0.93, 1e-12);
    double abs_z = 0.9;
    double lo = INFINITY, hi = 0.0;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        auto g = [&](Complex u) { return Complex(std::abs(ks.eval_inner(u)), 0.0); };
        double a = ballgeom::sphere_slice_integral(g, r * abs_z, n, 1e-8).value.real();
        double ratio = a * w.tail(r * abs_z);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(hi / lo <= 10.0);
}

TEST_CASE("adjoint on g_j: anchor, divergence, lower bound") {
    const int n = 2;
    SUBCASE("omega = upsilon forces ratio 1") {
        for (const char* spec : {"power(alpha=0)", "power(alpha=2)", "logpower(alpha=1,beta=1.5)"}) {
            auto w = weights::parse_weight(spec);
            for (int j : {0, 3, 10}) {
                auto adj = projection::adjoint_on_gj(w, w, j, n, 2.0);
                CHECK(adj.kappa == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(adj.ratio == doctest::Approx(1.0).epsilon(1e-9));
            }
        }
    }
    SUBCASE("paper-verbatim constant breaks the anchor for n >= 2") {
        auto w = RadialWeight::power(0.0);
        auto adj = projection::adjoint_on_gj(w, w, 4, n, 2.0, true);
        CHECK(adj.ratio == doctest::Approx(1.0 / 6).epsilon(1e-9));
    }
    SUBCASE("divergent pair reports +inf for every j") {
        auto w = RadialWeight::power(0.0);
        auto u = RadialWeight::power(2.0);
        for (int j : {0, 5, 32}) {
            auto adj = projection::adjoint_on_gj(w, u, j, n, 2.0);
            CHECK(adj.divergent);
            CHECK(std::isinf(adj.ratio));
        }
    }
    SUBCASE("r_j sequence") {
        auto w = RadialWeight::power(0.0);
        auto adj = projection::adjoint_on_gj(w, w, 3, n, 2.0);
        CHECK(adj.r_j == doctest::Approx(1.0 - 1.0 / 7));
    }
}

TEST_CASE("linfty-to-bloch bound") {
    const int n = 2;
    auto grid = RadialGrid::dyadic(14);
    SUBCASE("doubling weights give a finite stable sup") {
        auto rep = projection::linfty_to_bloch_bound(RadialWeight::power(0.0), n, grid);
        CHECK(rep.dhat_hypothesis);
        CHECK(!rep.divergence_flag);
        CHECK(std::isfinite(rep.sup_value));
        auto rep2 = projection::linfty_to_bloch_bound(RadialWeight::power(0.0), n,
                                                      RadialGrid::dyadic(18));
        CHECK(rep2.sup_value == doctest::Approx(rep.sup_value).epsilon(0.01));
    }
    SUBCASE("doubling suffices: the rapidly increasing weight is covered") {
        auto rep = projection::linfty_to_bloch_bound(RadialWeight::log_power(-1.0, -2.0), n, grid);
        CHECK(rep.dhat_hypothesis);
        CHECK(std::isfinite(rep.sup_value));
    }
    SUBCASE("non-doubling weight trips the direct-probe divergence flag") {
        auto rep = projection::linfty_to_bloch_bound(RadialWeight::exp_decay(1.0, 1.0), n, grid);
        CHECK(!rep.dhat_hypothesis);
        CHECK(rep.divergence_flag);
    }
}

TEST_CASE("projection matches seed-fixed Monte-Carlo ball integrals") {
    const int n = 2;
    auto w = RadialWeight::power(0.0);
    auto ks = KernelSeries::build(w, n, 0.75, 1e-12);
    auto z = BallPoint({Complex(0.4, 0.0), Complex(0.0, 0.3)});
    MonomialTerm term{{1, 1}, RadialProfile::step(0.5, 0.0, 1.0)};
    Complex exact = projection::project_coefficient(w, term, n) * z[0] * z[1];
    auto mc = mc::ball_integral(
        n, 0x5eedbe26u, 2000000,
        [&](const BallPoint& xi) {
            if (xi.norm() <= 0.5) return Complex(0, 0);
            return xi[0] * xi[1] * std::conj(ks.eval(z, xi)) * w.eval(xi.norm());
        });
    CHECK(std::abs(mc.value - exact) <= 4.0 * mc.std_error + 1e-12);
    CHECK(std::abs(mc.value - exact) / std::abs(exact) <= 2e-2);
}
