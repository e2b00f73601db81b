#include "bergman/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman::criteria {

using special::log_add;

namespace {

constexpr double kSnap = 1e-9;      // exponent arithmetic boundary snap
constexpr double kFlatSlope = 0.02; // per-octave log2 slope treated as flat
constexpr double kGrowSlope = 0.05; // persistent growth threshold

bool integrable_at_one(double e, double a, double b) {
    if (e > kSnap) return true;
    if (e < -kSnap) return false;
    if (a > -1.0 + kSnap) return true;
    if (a < -1.0 - kSnap) return false;
    return b < -1.0 - kSnap;
}

} // namespace

bool inner_integral_divergent(const WeightPair& pair) {
    double q = pair.q();
    auto dw = pair.omega.density_descriptor();
    auto du = pair.upsilon.density_descriptor();
    double e = q * dw.exp_coeff - (q - 1.0) * du.exp_coeff;
    double a = q * dw.pow_exp - (q - 1.0) * du.pow_exp;
    double b = q * dw.log_exp - (q - 1.0) * du.log_exp;
    return !integrable_at_one(e, a, b);
}

namespace {

// log int over {s : 1-s < width} of omega^q/upsilon^{q-1} s^{2n-1} ds
double log_inner_integral_width(const WeightPair& pair, double width) {
    double q = pair.q();
    double s_exp = 2.0 * pair.n - 1.0;
    auto log_f = [&](double u) {
        return s_exp * std::log1p(-u) + q * pair.omega.log_eval_at_one_minus(u) -
               (q - 1.0) * pair.upsilon.log_eval_at_one_minus(u);
    };
    return quad::log_integral_shifted(log_f, width, 1e-11);
}

} // namespace

double log_inner_integral(const WeightPair& pair, double r) {
    return log_inner_integral_width(pair, 1.0 - r);
}

double log_up_integral(const WeightPair& pair, double r) {
    if (r <= 0.0) return -INFINITY;
    double s_exp = 2.0 * pair.n - 1.0;
    // peak sits at s = r; integrate in v = r - s so it lands at 0
    auto log_f = [&](double v) -> double {
        double s = r - v;
        if (s <= 0.0) return -INFINITY;
        return s_exp * std::log(s) + pair.upsilon.log_eval(s) - pair.p * pair.omega.log_tail(s);
    };
    return quad::log_integral_shifted(log_f, r, 1e-11);
}

double m_value(const WeightPair& pair, double r) {
    if (inner_integral_divergent(pair)) return INFINITY;
    double q = pair.q();
    double lv = pair.upsilon.log_tail(r) / pair.p - pair.omega.log_tail(r) +
                log_inner_integral(pair, r) / q;
    return std::exp(lv);
}

double n_value(const WeightPair& pair, double r) {
    if (inner_integral_divergent(pair)) return INFINITY;
    double q = pair.q();
    double lv = log_add(log_up_integral(pair, r), 0.0) / pair.p +
                log_inner_integral(pair, r) / q;
    return std::exp(lv);
}

double kstar_value(const WeightPair& pair, double r) {
    if (inner_integral_divergent(pair)) return INFINITY;
    if (r <= 0.0) return 0.0;
    double q = pair.q();
    return std::exp(log_up_integral(pair, r) / pair.p + log_inner_integral(pair, r) / q);
}

double h_value(const WeightPair& pair, double t) {
    if (inner_integral_divergent(pair)) return INFINITY;
    double q = pair.q();
    double lv = (q - 1.0) * pair.upsilon.log_tail(t) - q * pair.omega.log_tail(t) +
                log_inner_integral(pair, t);
    return std::exp(lv);
}

SchurReport schur_test_check(const WeightPair& pair, const RadialGrid& grid) {
    SchurReport rep;
    if (inner_integral_divergent(pair)) {
        rep.skipped = true;
        return rep;
    }
    double q = pair.q(), p = pair.p;
    double s_exp = 2.0 * pair.n - 1.0;

    double m_sup = 0.0;
    for (double r : grid.nodes) m_sup = std::max(m_sup, m_value(pair, r));

    for (double t : grid.nodes) {
        if (t > 0.95) continue; // nested quadrature depth budget
        SchurRow row;
        row.t = t;
        auto log_f = [&](double u) {
            // (omega/h)^q s^{2n-1} with h = upsilon^{1/p} inner^{1/(pq)}
            return s_exp * std::log1p(-u) + q * pair.omega.log_eval_at_one_minus(u) -
                   (q / p) * pair.upsilon.log_eval_at_one_minus(u) -
                   log_inner_integral_width(pair, u) / p;
        };
        row.lhs_direct = std::exp(quad::log_integral_shifted(log_f, 1.0 - t, 1e-10));
        row.rhs_exact = q * std::exp(log_inner_integral(pair, t) / q);
        row.bound = m_sup * std::exp(pair.omega.log_tail(t) - pair.upsilon.log_tail(t) / p);
        rep.max_identity_err =
            std::max(rep.max_identity_err, std::fabs(row.lhs_direct / row.rhs_exact - 1.0));
        rep.empirical_c = std::max(rep.empirical_c, row.lhs_direct / row.bound);
        rep.rows.push_back(row);
    }
    return rep;
}

std::string to_string(Boundedness b) {
    switch (b) {
        case Boundedness::Bounded: return "bounded";
        case Boundedness::Unbounded: return "unbounded";
        default: return "indeterminate";
    }
}

namespace {

enum class CurveFate { Finite, Infinite, Unclear };

// Per-octave slopes of log(curve) against log2(1/(1-r)) over the tail of the
// dyadic grid, with a Richardson-style read of their decay: slopes that fall
// off geometrically are the signature of a convergent curve with a power-law
// correction term, while persistent slopes mean genuine growth.
CurveFate curve_fate(const std::vector<double>& curve) {
    std::size_t k = curve.size();
    if (k < 9) return CurveFate::Unclear;
    std::vector<double> slopes;
    for (std::size_t i = k - 8; i + 1 < k; ++i) {
        if (!(curve[i] > 0.0) || !(curve[i + 1] > 0.0)) return CurveFate::Unclear;
        slopes.push_back((std::log(curve[i + 1]) - std::log(curve[i])) / M_LN2);
    }
    double max_s = -INFINITY, min_s = INFINITY;
    for (double s : slopes) {
        max_s = std::max(max_s, s);
        min_s = std::min(min_s, s);
    }
    if (max_s <= kFlatSlope) return CurveFate::Finite; // flat or decreasing
    if (min_s > 0.0) {
        double max_ratio = 0.0, min_ratio = INFINITY;
        for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
            double r = slopes[i + 1] / slopes[i];
            max_ratio = std::max(max_ratio, r);
            min_ratio = std::min(min_ratio, r);
        }
        if (max_ratio <= 0.95) return CurveFate::Finite; // corrections dying off
        if (min_s >= kGrowSlope && min_ratio >= 0.97) return CurveFate::Infinite;
    }
    return CurveFate::Unclear;
}

} // namespace

CriterionReport decide(const WeightPair& pair, const RadialGrid& grid, Exec exec, int gj_max) {
    if (grid.scheme != RadialGrid::Scheme::Dyadic)
        throw DomainError("decide() expects a dyadic grid");
    CriterionReport rep;
    rep.pair_id = pair.id;
    {
        auto co = weights::classify(pair.omega, RadialGrid::dyadic(20));
        auto cu = weights::classify(pair.upsilon, RadialGrid::dyadic(20));
        rep.caveat_not_d =
            co.d != weights::Verdict::Yes || cu.d != weights::Verdict::Yes;
    }
    rep.inner_divergent = inner_integral_divergent(pair);
    rep.grid_r = grid.nodes;

    std::size_t np = grid.size();
    rep.m_curve.assign(np, INFINITY);
    rep.n_curve.assign(np, INFINITY);
    rep.kstar_curve.assign(np, INFINITY);
    rep.h_curve.assign(np, INFINITY);

    if (!rep.inner_divergent) {
        parallel_for(np, exec, [&](std::size_t i) {
            double r = grid.nodes[i];
            double q = pair.q();
            double li = log_inner_integral(pair, r);
            double lu = log_up_integral(pair, r);
            rep.m_curve[i] = std::exp(pair.upsilon.log_tail(r) / pair.p -
                                      pair.omega.log_tail(r) + li / q);
            rep.n_curve[i] = std::exp(log_add(lu, 0.0) / pair.p + li / q);
            rep.kstar_curve[i] = (r <= 0.0) ? 0.0 : std::exp(lu / pair.p + li / q);
            rep.h_curve[i] = std::exp((q - 1.0) * pair.upsilon.log_tail(r) -
                                      q * pair.omega.log_tail(r) + li);
        });
    }

    auto sup_of = [](const std::vector<double>& c) {
        double s = 0.0;
        for (double v : c) s = std::max(s, v);
        return s;
    };
    rep.m_sup = sup_of(rep.m_curve);
    rep.n_sup = sup_of(rep.n_curve);
    rep.kstar_sup = sup_of(rep.kstar_curve);

    CurveFate fm = CurveFate::Infinite, fn = CurveFate::Infinite, fk = CurveFate::Infinite;
    if (!rep.inner_divergent) {
        fm = curve_fate(rep.m_curve);
        fn = curve_fate(rep.n_curve);
        fk = curve_fate(rep.kstar_curve);
    }
    rep.m_finite = fm == CurveFate::Finite;
    rep.n_finite = fn == CurveFate::Finite;
    rep.kstar_finite = fk == CurveFate::Finite;
    if (rep.inner_divergent || fm == CurveFate::Infinite || fn == CurveFate::Infinite ||
        fk == CurveFate::Infinite) {
        rep.verdict = Boundedness::Unbounded;
        rep.m_sup = rep.m_finite ? rep.m_sup : INFINITY;
        rep.n_sup = rep.n_finite ? rep.n_sup : INFINITY;
        rep.kstar_sup = rep.kstar_finite ? rep.kstar_sup : INFINITY;
    } else if (rep.m_finite && rep.n_finite && rep.kstar_finite) {
        rep.verdict = Boundedness::Bounded;
    } else {
        rep.verdict = Boundedness::Indeterminate;
    }
    rep.equivalence_consistent =
        rep.m_finite == rep.n_finite && rep.n_finite == rep.kstar_finite;

    // g_j lower-bound chain
    rep.gj.assign(static_cast<std::size_t>(gj_max) + 1, GjSample{});
    parallel_for(rep.gj.size(), exec, [&](std::size_t j) {
        auto adj = projection::adjoint_on_gj(pair.omega, pair.upsilon, static_cast<int>(j),
                                             pair.n, pair.p);
        GjSample s;
        s.j = static_cast<int>(j);
        s.r_j = adj.r_j;
        s.ratio = adj.ratio;
        double h = h_value(pair, adj.r_j);
        s.h_pow = std::isfinite(h) ? std::pow(h, 1.0 / pair.q()) : INFINITY;
        rep.gj[j] = s;
    });
    double c = INFINITY;
    for (const auto& s : rep.gj)
        if (std::isfinite(s.ratio) && std::isfinite(s.h_pow) && s.h_pow > 0.0)
            c = std::min(c, s.ratio / s.h_pow);
    rep.gj_empirical_c = std::isfinite(c) ? c : 0.0;

    if (rep.verdict == Boundedness::Bounded) {
        bool all_finite = true;
        for (const auto& s : rep.gj) all_finite = all_finite && std::isfinite(s.ratio);
        rep.gj_consistent = all_finite;
    } else if (rep.verdict == Boundedness::Unbounded) {
        // growth to +inf: a strictly increasing finite tail, or saturation
        // at +inf for the last samples (the integral diverges at every j)
        std::size_t k = rep.gj.size();
        bool all_inf = true, strict_up = true;
        for (std::size_t i = k - 8; i < k; ++i) {
            all_inf = all_inf && std::isinf(rep.gj[i].ratio);
            if (i > k - 8) {
                bool up = rep.gj[i].ratio > rep.gj[i - 1].ratio ||
                          (std::isinf(rep.gj[i].ratio) && std::isinf(rep.gj[i - 1].ratio));
                strict_up = strict_up && up;
            }
        }
        rep.gj_consistent = all_inf || strict_up;
    } else {
        rep.gj_consistent = true;
    }
    return rep;
}

} // namespace bergman::criteria
