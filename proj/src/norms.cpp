#include "bergman/norms.hpp"

#include <cmath>

#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman::norms {

NormEstimate mp_mean_rho(const KernelSeries& ks, double rho, double p, bool derivative,
                         double tol) {
    if (!(p > 0.0)) throw DomainError("integral mean requires p > 0");
    auto g = [&](Complex u) {
        Complex v = derivative ? ks.radial_derivative_inner(u) : ks.eval_inner(u);
        return Complex(std::pow(std::abs(v), p), 0.0);
    };
    auto est = ballgeom::sphere_slice_integral(g, rho, ks.dim(), tol);
    NormEstimate out;
    out.method = NormEstimate::Method::SliceQuadrature;
    double vp = est.value.real();
    out.value = std::pow(vp, 1.0 / p);
    out.abs_error = (vp > 0.0) ? est.abs_error / p * std::pow(vp, 1.0 / p - 1.0) : est.abs_error;
    return out;
}

NormEstimate mp_mean(const KernelSeries& ks, double r, const BallPoint& z, double p,
                     bool derivative, double tol) {
    return mp_mean_rho(ks, r * z.norm(), p, derivative, tol);
}

NormEstimate mp_comparison_integral(const RadialWeight& w, double rho, double p, int n,
                                    bool derivative) {
    if (!(rho > 0.25 && rho < 1.0))
        throw DomainError("comparison integral asserted for rho in (1/4, 1)");
    double e = derivative ? ((n + 1.0) * p - n + 1.0) : (n * p - n + 1.0);
    auto integrand = [&](double t) {
        return std::exp(-p * w.log_tail(t) - e * std::log1p(-t));
    };
    auto res = quad::integrate(integrand, 0.0, rho, 1e-9);
    return {res.value, res.abs_error, NormEstimate::Method::RadialQuadrature};
}

NormEstimate apnorm_comparison(const RadialWeight& w, const RadialWeight& ups, double abs_z,
                               double p, int n, bool derivative) {
    if (!(abs_z > 6.0 / 7.0 && abs_z < 1.0))
        throw DomainError("A^p_upsilon comparison asserted for |z| > 6/7");
    double e = derivative ? ((n + 1.0) * p - n + 1.0) : (n * p - n + 1.0);
    auto integrand = [&](double t) {
        return std::exp(ups.log_tail(t) - p * w.log_tail(t) - e * std::log1p(-t));
    };
    auto res = quad::integrate(integrand, 0.0, abs_z, 1e-9);
    return {res.value, res.abs_error, NormEstimate::Method::RadialQuadrature};
}

std::vector<std::pair<double, double>> carleson_curve(const RadialWeight& mu_weight,
                                                      const RadialWeight& w, double p, double q,
                                                      int n, const RadialGrid& grid) {
    if (!(q >= p && p > 0.0)) throw DomainError("carleson ratio requires 0 < p <= q");
    std::vector<std::pair<double, double>> curve;
    for (double a : grid.nodes) {
        double log_sigma_2n;
        {
            ballgeom::CarlesonBlock blk{ballgeom::BallPoint::axis(n, 0, Complex(a, 0))};
            log_sigma_2n = std::log(2.0 * n * ballgeom::cap_measure(blk, n));
        }
        double lmu = (a == 0.0) ? mu_weight.log_moment(2.0 * n - 1.0)
                                : mu_weight.log_partial_moment(2.0 * n - 1.0, a);
        double lw = (a == 0.0) ? w.log_moment(2.0 * n - 1.0)
                               : w.log_partial_moment(2.0 * n - 1.0, a);
        double log_ratio = (log_sigma_2n + lmu) - (q / p) * (log_sigma_2n + lw);
        curve.emplace_back(a, std::exp(log_ratio));
    }
    return curve;
}

NormEstimate carleson_ratio(const RadialWeight& mu_weight, const RadialWeight& w, double p,
                            double q, int n, const RadialGrid& grid) {
    auto curve = carleson_curve(mu_weight, w, p, q, n, grid);
    NormEstimate out;
    out.method = NormEstimate::Method::RadialQuadrature;
    for (const auto& [a, v] : curve) out.value = std::max(out.value, v);
    return out;
}

std::pair<double, double> littlewood_paley_check(const RadialWeight& w,
                                                 const std::vector<int>& m, int n) {
    if (static_cast<int>(m.size()) != n) throw DomainError("multi-index length must equal n");
    int deg = 0;
    double log_mfact = 0.0;
    for (int mi : m) {
        if (mi < 0) throw DomainError("multi-index entries must be >= 0");
        deg += mi;
        log_mfact += std::lgamma(mi + 1.0);
    }
    // S_m = (n-1)! m! / (n-1+|m|)!
    double log_sm = std::lgamma(static_cast<double>(n)) + log_mfact -
                    std::lgamma(static_cast<double>(n + deg));
    double lhs = 2.0 * n * std::exp(log_sm + w.log_moment(2.0 * n + 2.0 * deg - 1.0));

    double rhs;
    if (deg == 0) {
        rhs = 2.0 * n * w.moment(2.0 * n - 1.0); // omega(B) |f(0)|^2
    } else {
        // removable |z|^{-2n} singularity: exclude [0,eps); the associated
        // weight vanishes like (1-r) omega_hat at the other end, so a delta
        // cap there costs nothing at the checked tolerance
        const double eps = 1e-6;
        const double delta = 1e-9;
        auto integrand = [&](double v) {
            double r = (1.0 - delta) - v;
            return std::pow(r, 2.0 * deg - 1.0) * w.associated_star(r, n);
        };
        auto res = quad::tanh_sinh(integrand, 0.0, 1.0 - delta - eps, 1e-9, 9);
        rhs = 4.0 * deg * deg * 2.0 * n * std::exp(log_sm) * res.value;
    }
    return {lhs, rhs};
}

BlochProjection bloch_norm_of_projection(const projection::RadialProfile& f,
                                         const KernelSeries& ks, const RadialGrid& grid) {
    const RadialWeight& w = ks.weight();
    int n = ks.dim();
    projection::MonomialRadialFunction mf;
    mf.dim = n;
    mf.terms.push_back({std::vector<int>(static_cast<std::size_t>(n), 0), f});
    auto projected = projection::project(w, mf, n);

    BlochProjection out;
    out.value = std::abs(projected.eval(BallPoint::zero(n)));
    for (double t : grid.nodes) {
        auto zt = BallPoint::axis(n, 0, Complex(t, 0));
        out.value = std::max(out.value, std::abs(projected.eval(BallPoint::zero(n))) +
                                            (1.0 - t * t) *
                                                std::abs(projected.radial_derivative(zt)));
    }
    auto bound = projection::linfty_to_bloch_bound(w, n, RadialGrid::dyadic(10));
    out.bound_c = 1.0 + 2.0 * bound.sup_value;
    return out;
}

} // namespace bergman::norms
