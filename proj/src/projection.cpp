#include "bergman/projection.hpp"

#include <cmath>

#include "bergman/norms.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman::projection {

RadialProfile RadialProfile::power(double s) {
    RadialProfile p;
    p.kind = Kind::Power;
    p.s_exp = s;
    return p;
}

RadialProfile RadialProfile::constant(double v) {
    RadialProfile p;
    p.kind = Kind::Steps;
    p.values = {v};
    return p;
}

RadialProfile RadialProfile::step(double r0, double v1, double v2) {
    RadialProfile p;
    p.kind = Kind::Steps;
    p.breaks = {r0};
    p.values = {v1, v2};
    return p;
}

RadialProfile RadialProfile::steps(std::vector<double> breaks, std::vector<double> values) {
    if (values.size() != breaks.size() + 1) throw DomainError("step profile needs breaks+1 values");
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (!(breaks[i] > 0.0 && breaks[i] < 1.0)) throw DomainError("profile break outside (0,1)");
        if (i > 0 && !(breaks[i] > breaks[i - 1])) throw DomainError("profile breaks must increase");
    }
    RadialProfile p;
    p.kind = Kind::Steps;
    p.breaks = std::move(breaks);
    p.values = std::move(values);
    return p;
}

double RadialProfile::eval(double r) const {
    if (kind == Kind::Power) return std::pow(r, s_exp);
    std::size_t i = 0;
    while (i < breaks.size() && r >= breaks[i]) ++i;
    return values[i];
}

bool RadialProfile::is_constant() const {
    if (kind == Kind::Power) return s_exp == 0.0;
    for (double v : values)
        if (v != values.front()) return false;
    return true;
}

Complex MonomialRadialFunction::eval(const BallPoint& z) const {
    Complex acc(0, 0);
    for (const auto& t : terms) {
        Complex mono(1, 0);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < t.m[static_cast<std::size_t>(i)]; ++k) mono *= z[i];
        acc += t.profile.eval(z.norm()) * mono;
    }
    return acc;
}

Complex MonomialRadialFunction::radial_derivative(const BallPoint& z) const {
    Complex acc(0, 0);
    for (const auto& t : terms) {
        if (!t.profile.is_constant())
            throw DomainError("radial derivative only defined for holomorphic (constant-profile) output");
        Complex mono(1, 0);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < t.m[static_cast<std::size_t>(i)]; ++k) mono *= z[i];
        acc += static_cast<double>(t.degree()) * t.profile.eval(z.norm()) * mono;
    }
    return acc;
}

double project_coefficient(const RadialWeight& w, const MonomialTerm& term, int n) {
    double s = 2.0 * n + 2.0 * term.degree() - 1.0;
    double denom_log = w.log_moment(s);
    if (term.profile.kind == RadialProfile::Kind::Power)
        return std::exp(w.log_moment(s + term.profile.s_exp) - denom_log);
    // piecewise-constant: exact per-interval moments
    double num = 0.0;
    const auto& br = term.profile.breaks;
    const auto& vals = term.profile.values;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double lo = (i == 0) ? 0.0 : br[i - 1];
        double hi = (i == br.size() + 0) ? 1.0 : br[i];
        double lo_part = (lo == 0.0) ? w.moment(s) : w.partial_moment(s, lo);
        double hi_part = (hi >= 1.0) ? 0.0 : w.partial_moment(s, hi);
        num += vals[i] * (lo_part - hi_part);
    }
    return num * std::exp(-denom_log);
}

MonomialRadialFunction project(const RadialWeight& w, const MonomialRadialFunction& f, int n) {
    MonomialRadialFunction out;
    out.dim = f.dim;
    for (const auto& t : f.terms) {
        MonomialTerm pt;
        pt.m = t.m;
        pt.profile = RadialProfile::constant(project_coefficient(w, t, n));
        out.terms.push_back(std::move(pt));
    }
    return out;
}

double maximal_project_radial(const RadialWeight& w, const RadialProfile& f, const BallPoint& z,
                              const KernelSeries& ks, double tol) {
    int n = ks.dim();
    double abs_z = z.norm();
    if (abs_z > ks.rho_max())
        throw ValidityError("point outside kernel series validity region");
    auto a_mean = [&](double rho) {
        auto g = [&](Complex u) { return Complex(std::abs(ks.eval_inner(u)), 0.0); };
        return ballgeom::sphere_slice_integral(g, rho, n, 1e-9).value.real();
    };
    auto integrand = [&](double u) {
        double r = 1.0 - u;
        if (r <= 0.0) return 0.0;
        return f.eval(r) * std::exp((2.0 * n - 1.0) * std::log1p(-u) +
                                    w.log_eval_at_one_minus(u)) *
               a_mean(std::min(r * abs_z, abs_z));
    };
    auto res = quad::tanh_sinh(integrand, 0.0, 1.0, tol, 9);
    return 2.0 * n * res.value;
}

namespace {

bool integrable_at_one(const weights::TailDescriptor& d) {
    const double snap = 1e-9;
    if (d.exp_coeff > snap) return true;
    if (d.exp_coeff < -snap) return false;
    if (d.pow_exp > -1.0 + snap) return true;
    if (d.pow_exp < -1.0 - snap) return false;
    return d.log_exp < -1.0 - snap;
}

} // namespace

AdjointGj adjoint_on_gj(const RadialWeight& w, const RadialWeight& ups, int j, int n, double p,
                        bool paper_constant) {
    if (!(p > 1.0)) throw DomainError("adjoint test requires p > 1");
    if (j < 0) throw DomainError("g_j index must be >= 0");
    double q = p / (p - 1.0);
    AdjointGj out;
    out.j = j;
    out.r_j = 1.0 - 1.0 / (2.0 * j + 1.0);

    double s_moment = 2.0 * n + 2.0 * j - 1.0;
    double log_kappa = ups.log_moment(s_moment) - w.log_moment(s_moment);
    if (paper_constant) log_kappa += std::lgamma(static_cast<double>(n)) - std::lgamma(2.0 * n);
    out.kappa = std::exp(log_kappa);
    out.description = "P*(g_j)(xi) = kappa_j xi_1^j omega(xi)/upsilon(xi), kappa_j = " +
                      std::to_string(out.kappa);

    // radial integral  int_0^1 r^{2n+qj-1} omega^q / upsilon^{q-1} dr
    weights::TailDescriptor dw = w.density_descriptor(), du = ups.density_descriptor();
    weights::TailDescriptor comb{q * dw.exp_coeff - (q - 1.0) * du.exp_coeff,
                                 q * dw.pow_exp - (q - 1.0) * du.pow_exp,
                                 q * dw.log_exp - (q - 1.0) * du.log_exp};
    if (!integrable_at_one(comb)) {
        out.divergent = true;
        out.ratio = INFINITY;
        return out;
    }
    double s_exp = 2.0 * n + q * j - 1.0;
    auto log_f = [&](double u) {
        return s_exp * std::log1p(-u) + q * w.log_eval_at_one_minus(u) -
               (q - 1.0) * ups.log_eval_at_one_minus(u);
    };
    double log_t = quad::log_integral_shifted(log_f, 1.0, 1e-11);
    out.ratio = std::exp(log_kappa + (log_t - ups.log_moment(s_exp)) / q);
    return out;
}

LinftyBlochReport linfty_to_bloch_bound(const RadialWeight& w, int n, const RadialGrid& grid) {
    LinftyBlochReport rep;
    auto cls = weights::classify(w, RadialGrid::dyadic(20));
    rep.dhat_hypothesis = cls.dhat == weights::Verdict::Yes;

    for (double r : grid.nodes) {
        if (!(r > 6.0 / 7.0)) continue; // comparison integral asserted only there
        double v = (1.0 - r) * norms::apnorm_comparison(w, w, r, 1.0, n, true).value;
        rep.curve.emplace_back(r, v);
        rep.sup_value = std::max(rep.sup_value, v);
    }

    if (!rep.dhat_hypothesis) {
        // direct series probe: (1-r) ||Re B_r||_{A^1_omega}
        auto ks = KernelSeries::build(w, n, 0.92, 1e-9);
        for (double r : {0.5, 0.6, 0.7, 0.8, 0.875}) {
            auto m1 = [&](double t) {
                auto g = [&](Complex u) {
                    return Complex(std::abs(ks.radial_derivative_inner(u)), 0.0);
                };
                return ballgeom::sphere_slice_integral(g, t * r, n, 1e-8).value.real();
            };
            auto integrand = [&](double u) {
                double t = 1.0 - u;
                if (t <= 0.0) return 0.0;
                return std::exp((2.0 * n - 1.0) * std::log1p(-u) + w.log_eval_at_one_minus(u)) *
                       m1(std::min(t, 1.0 - 1e-12));
            };
            auto res = quad::tanh_sinh(integrand, 0.0, 1.0, 1e-6, 8);
            rep.direct_curve.emplace_back(r, (1.0 - r) * 2.0 * n * res.value);
        }
        bool increasing = true;
        for (std::size_t i = 1; i < rep.direct_curve.size(); ++i)
            if (rep.direct_curve[i].second <= rep.direct_curve[i - 1].second) increasing = false;
        rep.divergence_flag = increasing && !rep.direct_curve.empty() &&
                              rep.direct_curve.back().second >=
                                  4.0 * rep.direct_curve.front().second;
    }
    return rep;
}

} // namespace bergman::projection
