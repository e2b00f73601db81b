#include <doctest.h>

#include <cmath>

#include "bergman/special.hpp"
#include "bergman/weights.hpp"
#include "oracles.hpp"

using namespace bergman;
using weights::Family;
using weights::RadialWeight;
using weights::Verdict;

namespace {

std::vector<RadialWeight> shipped_dhat() {
    return {RadialWeight::power(0.0),
            RadialWeight::power(1.0),
            RadialWeight::power(2.0),
            RadialWeight::power(-0.5),
            RadialWeight::log_power(0.0, -2.0),
            RadialWeight::log_power(1.0, 1.5),
            RadialWeight::log_power(-1.0, -2.0)};
}

} // namespace

TEST_CASE("density evaluation: closed-form families") {
    CHECK(RadialWeight::power(0.0).eval(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(RadialWeight::power(1.0).eval(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    // 1/((1-r) log^2(e/(1-r))) at 1-r = e^{-1}
    CHECK(RadialWeight::log_power(-1.0, -2.0).eval(1.0 - std::exp(-1.0)) ==
          doctest::Approx(std::exp(1.0) / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(RadialWeight::power(0.0).eval(1.0), DomainError);
    CHECK_THROWS_AS(RadialWeight::power(0.0).eval(-0.1), DomainError);
}

TEST_CASE("tails: closed forms and quadrature agreement") {
    CHECK(RadialWeight::power(0.0).tail(0.25) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(RadialWeight::power(1.0).tail(0.5) == doctest::Approx(0.125).epsilon(1e-14));
    auto lpi = RadialWeight::log_power(-1.0, -2.0);
    CHECK(lpi.tail(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lpi.tail(0.9) == doctest::Approx(1.0 / (1.0 - std::log(0.1))).epsilon(1e-13));

    // tail(w, 0) equals direct quadrature of the density
    for (const auto& w : shipped_dhat()) {
        double direct = oracles::romberg([&](double t) { return w.eval(t < 1.0 ? t : 0.0); },
                                         0.0, 1.0 - 1e-11) +
                        w.tail(1.0 - 1e-11);
        CHECK(w.tail(0.0) == doctest::Approx(direct).epsilon(1e-9));
    }

    // strictly decreasing
    auto w = RadialWeight::log_power(1.0, 1.5);
    double prev = w.tail(0.0);
    for (double r : {0.1, 0.4, 0.7, 0.9, 0.99}) {
        double t = w.tail(r);
        CHECK(t < prev);
        prev = t;
    }
}

TEST_CASE("moments: closed forms and the moment/tail comparability (Lemma 2.1c)") {
    CHECK(RadialWeight::power(0.0).moment(1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(RadialWeight::power(1.0).moment(1.0) == doctest::Approx(1.0 / 6).epsilon(1e-14));
    CHECK(RadialWeight::power(0.0).moment(7.0) == doctest::Approx(0.125).epsilon(1e-14));

    for (const auto& w : shipped_dhat()) {
        double lo = INFINITY, hi = 0.0;
        for (int j = 0; j <= 10; ++j) {
            double x = std::ldexp(1.0, j); // 1, 2, ..., 1024
            double ratio = w.moment(x) / w.tail(1.0 - 1.0 / x);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            CHECK(ratio <= 1.0 + 1e-9);  // r^x <= 1 on the tail interval
            CHECK(ratio >= 0.25);        // 1/e (1+o(1)) with slack
        }
        CHECK(hi / lo <= 10.0);
    }
}

TEST_CASE("tail comparability at comparable distances (Lemma 2.2 iv)") {
    for (const auto& w : shipped_dhat()) {
        double lo = INFINITY, hi = 0.0;
        for (int k = 1; k <= 16; ++k) {
            double r = 1.0 - std::ldexp(1.0, -k);
            double rp = 1.0 - std::ldexp(1.0, -k - 1); // (1-r)/(1-r') = 2
            double ratio = w.tail(r) / w.tail(rp);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(hi / lo <= 16.0);
    }
}

TEST_CASE("moments via quadrature match Romberg oracle") {
    auto w = RadialWeight::log_power(1.0, 1.5);
    for (double s : {3.0, 7.0, 20.5}) {
        double oracle = oracles::romberg(
            [&](double t) { return std::pow(t, s) * w.eval(std::min(t, 1.0 - 1e-14)); }, 0.0,
            1.0 - 1e-12);
        CHECK(w.moment(s) == doctest::Approx(oracle).epsilon(1e-9));
    }
    auto pn = RadialWeight::power_normalized(2.5, 2);
    for (double s : {3.0, 9.0}) {
        double oracle = oracles::romberg(
            [&](double t) { return std::pow(t, s) * pn.eval(std::min(t, 1.0 - 1e-14)); }, 0.0,
            1.0 - 1e-12);
        CHECK(pn.moment(s) == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("partial moments: incomplete-beta path vs direct quadrature") {
    auto w = RadialWeight::power(1.5);
    for (double r : {0.3, 0.9, 0.999}) {
        double oracle =
            oracles::romberg([&](double t) { return std::pow(t, 5.0) * w.eval(t); }, r, 1.0 - 1e-13);
        CHECK(w.partial_moment(5.0, r) == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("associated weight: symbolic oracle and order-n limit") {
    auto w = RadialWeight::power(0.0);
    CHECK(w.associated_star(0.5, 1) ==
          doctest::Approx(oracles::star_constant_weight(0.5)).epsilon(1e-10));
    CHECK_THROWS_AS(w.associated_star(0.0, 1), DomainError);

    // Lemma 2.2(i): omega* ~ (1-r) tail(r) on (1/2, 1)
    for (const auto& wt : shipped_dhat()) {
        double lo = INFINITY, hi = 0.0;
        for (int k = 1; k <= 8; ++k) {
            double r = 1.0 - std::ldexp(1.0, -k);
            double ratio = wt.associated_star(r, 1) / ((1.0 - r) * wt.tail(r));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(hi / lo <= 10.0);
        CHECK(lo >= 1.0 / 16);
        CHECK(hi <= 16.0);
    }

    // omega^{n*}/omega* -> 1 as r -> 1
    for (const auto& wt : shipped_dhat()) {
        double d99 = wt.associated_star(0.99, 2) / wt.associated_star(0.99, 1);
        double d999 = wt.associated_star(0.999, 2) / wt.associated_star(0.999, 1);
        CHECK(std::fabs(d999 - 1.0) < std::fabs(d99 - 1.0) + 1e-12);
        CHECK(d999 == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("classification: truth table and doubling constant") {
    auto grid = RadialGrid::dyadic(20);

    auto p0 = weights::classify(RadialWeight::power(0.0), grid);
    CHECK(p0.dhat == Verdict::Yes);
    CHECK(p0.dcheck == Verdict::Yes);
    CHECK(p0.d == Verdict::Yes);
    CHECK(p0.regular == Verdict::Yes);
    CHECK(p0.rapidly_increasing == Verdict::No);
    CHECK(p0.doubling_constant == doctest::Approx(2.0).epsilon(1e-12));

    auto exd = weights::classify(RadialWeight::exp_decay(1.0, 1.0), grid);
    CHECK(exd.dhat == Verdict::No);

    auto lpi = weights::classify(RadialWeight::log_power(-1.0, -2.0), grid);
    CHECK(lpi.dhat == Verdict::Yes);
    CHECK(lpi.dcheck == Verdict::No);
    CHECK(lpi.rapidly_increasing == Verdict::Yes);
    CHECK(lpi.regular == Verdict::No);

    // R for every tested power; R => D; D = Dhat and Dcheck
    for (double alpha : {-0.5, 0.0, 1.0, 2.5, 3.5}) {
        auto rep = weights::classify(RadialWeight::power(alpha), grid);
        CHECK(rep.regular == Verdict::Yes);
        CHECK(rep.d == Verdict::Yes);
    }
    CHECK_THROWS_AS(weights::classify(RadialWeight::power(0.0), RadialGrid::dyadic(10)),
                    DomainError);
}

TEST_CASE("classification is deterministic") {
    auto grid = RadialGrid::dyadic(22);
    auto a = weights::classify(RadialWeight::log_power(0.0, -2.0), grid);
    auto b = weights::classify(RadialWeight::log_power(0.0, -2.0), grid);
    CHECK(a.doubling_constant == b.doubling_constant);
    CHECK(a.exponent_a == b.exponent_a);
    CHECK(a.regular_ratio_band == b.regular_ratio_band);
}

TEST_CASE("w1 transform") {
    auto r0 = weights::w1_transform(RadialWeight::power(0.0));
    REQUIRE(r0.w1.has_value());
    CHECK(!r0.not_in_d_warning);
    for (double t : {0.0, 0.3, 0.9}) CHECK(r0.w1->eval(t) == doctest::Approx(1.0).epsilon(1e-13));

    auto r1 = weights::w1_transform(RadialWeight::power(1.0));
    REQUIRE(r1.w1.has_value());
    for (double t : {0.1, 0.6}) CHECK(r1.w1->eval(t) == doctest::Approx((1.0 - t) / 2).epsilon(1e-13));

    // LogPower(-1,-2): W1 density would be 1/((1-t)L), which is not integrable
    auto ri = weights::w1_transform(RadialWeight::log_power(-1.0, -2.0));
    CHECK(!ri.integrable);
    CHECK(ri.not_in_d_warning);
    CHECK(!ri.w1.has_value());

    // classify(W1) reports R for shipped D weights; tail(W1) ~ tail(w)
    for (const char* spec : {"power(alpha=1)", "logpower(alpha=0,beta=-2)",
                             "logpower(alpha=1,beta=1.5)"}) {
        auto res = weights::w1_transform(weights::parse_weight(spec));
        REQUIRE(res.w1.has_value());
        CHECK(!res.not_in_d_warning);
        auto rep = weights::classify(*res.w1, RadialGrid::dyadic(20));
        CHECK(rep.regular == Verdict::Yes);
        CHECK(res.tail_band.second / res.tail_band.first <= 16.0);
    }
}

TEST_CASE("tabulated weights: interpolation, extension, reach rule") {
    // sample (1-r)^1 on a grid and check the power extension recovers it
    std::vector<double> r, v;
    for (int i = 0; i <= 20; ++i) {
        r.push_back(0.98 * i / 20.0);
        v.push_back(1.0 - r.back());
    }
    auto w = RadialWeight::tabulated(r, v);
    CHECK(w.eval(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.eval(0.995) == doctest::Approx(0.005).epsilon(1e-6)); // extension region
    CHECK(w.tail(0.0) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(w.moment(3.0) ==
          doctest::Approx(RadialWeight::power(1.0).moment(3.0)).epsilon(1e-3));

    auto rep = weights::classify(w, RadialGrid::dyadic(20));
    CHECK(rep.dhat == Verdict::Indeterminate); // data reaches only 0.98

    CHECK_THROWS_AS(RadialWeight::tabulated({0.0, 0.5}, {1.0, -1.0}), DomainError);
    CHECK_THROWS_AS(RadialWeight::tabulated({0.5, 0.2}, {1.0, 1.0}), DomainError);
}

TEST_CASE("weight spec parsing") {
    CHECK(weights::parse_weight("power(alpha=0.5)").family() == Family::Power);
    CHECK(weights::parse_weight("power(alpha=1,normalized=true,n=3)").family() ==
          Family::PowerNorm);
    CHECK(weights::parse_weight(" LogPower( alpha = -1 , beta = -2 ) ").family() ==
          Family::LogPower);
    CHECK(weights::parse_weight("tabulated(r=0;0.5;0.9,v=1;0.8;0.3)").family() ==
          Family::Tabulated);
    CHECK_THROWS_AS(weights::parse_weight("power(alpha=)"), DomainError);
    CHECK_THROWS_AS(weights::parse_weight("gauss(sigma=1)"), DomainError);
    CHECK_THROWS_AS(weights::parse_weight("power(alpha=-2)"), DomainError);
    CHECK_THROWS_AS(weights::parse_weight("logpower(alpha=-1,beta=-0.5)"), DomainError);
}
