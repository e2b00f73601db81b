#include "bergman/ballgeom.hpp"

#include <cmath>

#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman::ballgeom {

BallPoint::BallPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {
    if (coords_.empty() || coords_.size() > 4)
        throw DomainError("ball point dimension must be in [1,4]");
    double s = 0.0;
    for (const auto& c : coords_) s += std::norm(c);
    norm_ = std::sqrt(s);
    if (norm_ > 1.0 + 1e-12) throw DomainError("point outside the closed unit ball");
    if (norm_ > 1.0) norm_ = 1.0;
}

BallPoint BallPoint::zero(int n) { return BallPoint(std::vector<Complex>(n, Complex(0, 0))); }

BallPoint BallPoint::axis(int n, int axis, Complex value) {
    std::vector<Complex> c(n, Complex(0, 0));
    c.at(static_cast<std::size_t>(axis)) = value;
    return BallPoint(std::move(c));
}

Complex hermitian_inner(const BallPoint& z, const BallPoint& w) {
    if (z.dim() != w.dim()) throw DomainError("dimension mismatch in inner product");
    Complex s(0, 0);
    for (int i = 0; i < z.dim(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

double nonisotropic_distance(const BallPoint& xi, const BallPoint& tau) {
    return std::sqrt(std::abs(1.0 - hermitian_inner(xi, tau)));
}

DiskQuadratureRule DiskQuadratureRule::make(int n_radial, int n_theta, int dim) {
    DiskQuadratureRule rule;
    rule.dim = dim;
    rule.n_theta = n_theta;
    std::vector<double> x, w;
    quad::gauss_legendre(n_radial, x, w);
    rule.u_nodes.resize(x.size());
    rule.u_weights.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        rule.u_nodes[i] = 0.5 * (x[i] + 1.0);
        rule.u_weights[i] = 0.5 * w[i];
    }
    return rule;
}

Complex DiskQuadratureRule::apply(const std::function<Complex(Complex)>& g, double rho) const {
    // (n-1) int_0^1 (1-u)^{n-2} [angular mean of g(rho sqrt(u) e^{i theta})] du
    Complex total(0, 0);
    for (std::size_t i = 0; i < u_nodes.size(); ++i) {
        double t = std::sqrt(u_nodes[i]);
        Complex mean(0, 0);
        for (int j = 0; j < n_theta; ++j) {
            double th = 2.0 * M_PI * j / n_theta;
            mean += g(rho * t * Complex(std::cos(th), std::sin(th)));
        }
        mean /= static_cast<double>(n_theta);
        total += u_weights[i] * std::pow(1.0 - u_nodes[i], dim - 2) * mean;
    }
    return static_cast<double>(dim - 1) * total;
}

ComplexEstimate sphere_slice_integral(const std::function<Complex(Complex)>& g, double rho,
                                      int n, double tol) {
    if (n < 1 || n > 4) throw DomainError("dimension must be in [1,4]");
    if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("slice radius must be in [0,1]");
    ComplexEstimate est;
    if (n == 1) {
        // circle mean, trapezoid doubling
        int m = 64;
        Complex prev(0, 0);
        for (int level = 0; level < 9; ++level, m *= 2) {
            Complex s(0, 0);
            for (int j = 0; j < m; ++j) {
                double th = 2.0 * M_PI * j / m;
                s += g(rho * Complex(std::cos(th), std::sin(th)));
            }
            s /= static_cast<double>(m);
            est.abs_error = std::abs(s - prev);
            if (level > 0 && est.abs_error <= tol * std::max(1.0, std::abs(s))) {
                est.value = s;
                return est;
            }
            prev = s;
        }
        est.value = prev;
        return est;
    }
    int nr = 24, nt = 48;
    Complex prev(0, 0);
    for (int level = 0; level < 7; ++level) {
        auto rule = DiskQuadratureRule::make(nr, nt, n);
        Complex v = rule.apply(g, rho);
        est.abs_error = std::abs(v - prev);
        if (level > 0 && est.abs_error <= tol * std::max(1.0, std::abs(v))) {
            est.value = v;
            return est;
        }
        prev = v;
        nr *= 2;
        nt *= 2;
    }
    est.value = prev;
    if (est.abs_error > 1e3 * tol * std::max(1.0, std::abs(prev)))
        throw EstimationError("sphere slice integral did not converge");
    return est;
}

double monomial_sphere_integral(double c, int n) {
    if (!(c > -1.0)) throw DomainError("monomial exponent must exceed -1");
    return std::exp(std::lgamma(static_cast<double>(n)) + std::lgamma(c + 1.0) -
                    std::lgamma(n + c));
}

// sigma(Q) for the cap |1 - <e1, eta>| <= s, via polar coordinates around 1:
// the radial integral is a polynomial evaluated in closed form, the angular
// integral is split at the kink acos(s/2).
double cap_measure(const CarlesonBlock& block, int n) {
    double a = block.apex.norm();
    if (a == 0.0) return 1.0; // convention: Q_0 = S
    double s = 1.0 - a;
    if (n == 1) return (2.0 / M_PI) * std::asin(std::min(1.0, 0.5 * s));

    // int_0^R rho^{n-1} (2 cos(phi) - rho)^{n-2} drho, R = min(s, 2 cos phi)
    auto radial = [n](double cphi, double R) {
        double sum = 0.0;
        for (int j = 0; j <= n - 2; ++j) {
            double binom = (n == 2) ? 1.0 : ((n == 3) ? 1.0 : (j == 1 ? 2.0 : 1.0));
            // C(n-2, j) for n <= 4: n=2 -> {1}; n=3 -> {1,1}; n=4 -> {1,2,1}
            double sign = (j % 2 == 0) ? 1.0 : -1.0;
            sum += binom * sign * std::pow(2.0 * cphi, n - 2 - j) * std::pow(R, n + j) / (n + j);
        }
        return sum;
    };
    auto integrand = [&](double phi) {
        double c = std::cos(phi);
        double R = std::min(s, 2.0 * c);
        if (R <= 0.0) return 0.0;
        return radial(c, R);
    };
    double phi_star = std::acos(std::min(1.0, 0.5 * s));
    auto left = quad::integrate(integrand, 0.0, phi_star, 1e-12);
    auto right = quad::integrate(integrand, phi_star, 0.5 * M_PI, 1e-12);
    return (n - 1) / M_PI * 2.0 * (left.value + right.value);
}

double block_weight_measure(const weights::RadialWeight& w, const CarlesonBlock& block, int n) {
    double a = block.apex.norm();
    double sigma = cap_measure(block, n);
    double radial = (a == 0.0) ? w.moment(2.0 * n - 1.0) : w.partial_moment(2.0 * n - 1.0, a);
    return 2.0 * n * sigma * radial;
}

} // namespace bergman::ballgeom
