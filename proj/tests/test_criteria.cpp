#include <doctest.h>

#include <cmath>

#include "bergman/criteria.hpp"
#include "oracles.hpp"

using namespace bergman;
using criteria::Boundedness;
using criteria::WeightPair;
using weights::RadialWeight;

namespace {

WeightPair make_pair(const char* om, const char* up, double p) {
    return {weights::parse_weight(om), weights::parse_weight(up), p, 2, "test"};
}

} // namespace

TEST_CASE("divergence of the inner integral by exponent arithmetic") {
    CHECK(!criteria::inner_integral_divergent(make_pair("power(alpha=0)", "power(alpha=0)", 2.0)));
    // classical failing case: p(alpha+1) <= beta+1
    CHECK(criteria::inner_integral_divergent(make_pair("power(alpha=0)", "power(alpha=2)", 2.0)));
    // exact boundary alpha q - beta(q-1) = -1 counts as divergent
    CHECK(criteria::inner_integral_divergent(make_pair("power(alpha=-0.5)", "power(alpha=0)", 2.0)));
    // log corrections rescue the boundary when beta_log(q-1) > 1
    CHECK(!criteria::inner_integral_divergent(
        make_pair("logpower(alpha=-0.5,beta=-2)", "power(alpha=0)", 2.0)));
}

TEST_CASE("m value: flat for identical power pairs, infinite for the failing pair") {
    auto same = make_pair("power(alpha=1)", "power(alpha=1)", 2.0);
    double m9 = criteria::m_value(same, 1.0 - std::ldexp(1.0, -9));
    double m14 = criteria::m_value(same, 1.0 - std::ldexp(1.0, -14));
    CHECK(std::fabs(std::log(m14 / m9)) < 0.02); // log-slope -> 0
    CHECK(std::isfinite(criteria::m_value(same, 0.0)));

    auto bad = make_pair("power(alpha=0)", "power(alpha=2)", 2.0);
    CHECK(std::isinf(criteria::m_value(bad, 0.5)));
}

TEST_CASE("n, kstar values against a Romberg oracle") {
    auto pair = make_pair("power(alpha=0)", "power(alpha=0)", 2.0);
    double r = 0.75;
    // inner: int_r^1 s^3 ds ; up: int_0^r s^3/(1-s)^2 ds
    double inner = oracles::romberg([](double s) { return s * s * s; }, r, 1.0);
    double up = oracles::romberg([](double s) { return s * s * s / ((1.0 - s) * (1.0 - s)); },
                                 0.0, r);
    CHECK(criteria::n_value(pair, r) ==
          doctest::Approx(std::sqrt(up + 1.0) * std::sqrt(inner)).epsilon(1e-8));
    CHECK(criteria::kstar_value(pair, r) ==
          doctest::Approx(std::sqrt(up) * std::sqrt(inner)).epsilon(1e-8));
    // r = 0: first factor collapses to 1, so N(0) = full inner^{1/q}
    double inner0 = oracles::romberg([](double s) { return s * s * s; }, 0.0, 1.0);
    CHECK(criteria::n_value(pair, 0.0) == doctest::Approx(std::sqrt(inner0)).epsilon(1e-8));
    CHECK(criteria::kstar_value(pair, 0.0) == 0.0);
}

TEST_CASE("kstar <= n pointwise and bounded for r <= 1/2") {
    auto pair = make_pair("power(alpha=1)", "logpower(alpha=0,beta=-2)", 1.25);
    for (double r : {0.0, 0.2, 0.5, 0.9, 0.99}) {
        double k = criteria::kstar_value(pair, r);
        CHECK(k <= criteria::n_value(pair, r) + 1e-12);
        if (r <= 0.5) CHECK(k <= criteria::n_value(pair, 0.5) + 1.0);
    }
}

TEST_CASE("h = m^q as an exact identity") {
    for (double p : {1.25, 2.0, 4.0}) {
        auto pair = make_pair("power(alpha=1)", "logpower(alpha=0,beta=-2)", p);
        for (double t : {0.1, 0.5, 0.9, 0.995}) {
            double h = criteria::h_value(pair, t);
            double m = criteria::m_value(pair, t);
            CHECK(h == doctest::Approx(std::pow(m, pair.q())).epsilon(1e-10));
        }
    }
}

TEST_CASE("schur test: exact antiderivative identity and flat constant") {
    auto grid = RadialGrid::dyadic(6);
    auto pair = make_pair("power(alpha=0)", "power(alpha=0)", 2.0);
    auto rep = criteria::schur_test_check(pair, grid);
    REQUIRE(!rep.skipped);
    CHECK(rep.max_identity_err <= 1e-10);
    CHECK(std::isfinite(rep.empirical_c));
    CHECK(rep.empirical_c > 0.0);
    for (const auto& row : rep.rows) CHECK(row.lhs_direct <= row.bound * (1.0 + 1e-6) * 10.0);

    auto bad = make_pair("power(alpha=0)", "power(alpha=2)", 2.0);
    CHECK(criteria::schur_test_check(bad, grid).skipped);
}

TEST_CASE("decide: classical verdicts and caveats") {
    auto grid = RadialGrid::dyadic(20);
    auto ok = criteria::decide(make_pair("power(alpha=0)", "power(alpha=0)", 2.0), grid);
    CHECK(ok.verdict == Boundedness::Bounded);
    CHECK(!ok.caveat_not_d);
    CHECK(ok.equivalence_consistent);
    CHECK(ok.gj_consistent);

    auto bad = criteria::decide(make_pair("power(alpha=0)", "power(alpha=2)", 2.0), grid);
    CHECK(bad.verdict == Boundedness::Unbounded);
    CHECK(bad.inner_divergent);
    CHECK(std::isinf(bad.m_sup));
    CHECK(bad.gj_consistent); // saturated at +inf over the last samples

    // hypothesis caveat: LogPower(-1,-2) is not in D
    auto caveat =
        criteria::decide(make_pair("logpower(alpha=-1,beta=-2)", "power(alpha=0)", 2.0), grid);
    CHECK(caveat.caveat_not_d);
}

TEST_CASE("decide: gj chain on a bounded pair") {
    auto grid = RadialGrid::dyadic(20);
    auto rep = criteria::decide(make_pair("power(alpha=1)", "power(alpha=0)", 2.0), grid);
    REQUIRE(rep.verdict == Boundedness::Bounded);
    double max_ratio = 0.0;
    for (const auto& s : rep.gj) {
        CHECK(std::isfinite(s.ratio));
        max_ratio = std::max(max_ratio, s.ratio);
        CHECK(s.ratio >= rep.gj_empirical_c * s.h_pow * (1.0 - 1e-9));
    }
    CHECK(std::isfinite(max_ratio));
    CHECK(rep.gj_empirical_c > 0.0);
}

TEST_CASE("decide is deterministic and grid-monotone") {
    auto pair = make_pair("power(alpha=1)", "logpower(alpha=0,beta=-2)", 1.25);
    auto a = criteria::decide(pair, RadialGrid::dyadic(20), Exec::OpenMP, 4);
    auto b = criteria::decide(pair, RadialGrid::dyadic(20), Exec::OpenMP, 4);
    CHECK(a.m_curve == b.m_curve);
    CHECK(a.verdict == b.verdict);

    for (const char* up : {"power(alpha=0)", "logpower(alpha=0,beta=-2)"}) {
        for (double p : {1.25, 2.0}) {
            auto pr = make_pair("power(alpha=1)", up, p);
            auto coarse = criteria::decide(pr, RadialGrid::dyadic(14), Exec::OpenMP, 0);
            auto fine = criteria::decide(pr, RadialGrid::dyadic(24), Exec::OpenMP, 0);
            if (coarse.verdict == Boundedness::Bounded)
                CHECK(fine.verdict == Boundedness::Bounded);
        }
    }
}
