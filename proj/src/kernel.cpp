#include "bergman/kernel.hpp"

#include <cmath>

#include "bergman/special.hpp"

namespace bergman::kernel {

namespace {

double log_coeff_for(const weights::RadialWeight& w, int n, long k) {
    // log[(n-1+k)!] - log 2 - log[n!] - log[k!] - log omega_{2n+2k-1}
    return std::lgamma(static_cast<double>(n + k)) - M_LN2 - std::lgamma(n + 1.0) -
           std::lgamma(k + 1.0) - w.log_moment(2.0 * n + 2.0 * k - 1.0);
}

} // namespace

KernelSeries KernelSeries::build(const weights::RadialWeight& w, int n, double rho_max,
                                 double tol, Exec exec, int k_cap) {
    if (!(rho_max > 0.0 && rho_max < 1.0)) throw DomainError("rho_max must lie in (0,1)");
    if (n < 1 || n > 4) throw DomainError("dimension must be in [1,4]");
    KernelSeries ks(w, n);
    ks.rho_max_ = rho_max;

    std::vector<double>& lc = ks.log_coeffs_;
    const int chunk = 256;
    const double log_rho = std::log(rho_max);
    long onset = -1;
    int consecutive = 0;
    long K = -1;
    double achieved = INFINITY;

    while (static_cast<long>(lc.size()) <= k_cap) {
        std::size_t base = lc.size();
        std::size_t count = static_cast<std::size_t>(
            std::min<long>(chunk, k_cap + 1 - static_cast<long>(base)));
        lc.resize(base + count);
        parallel_for(count, exec, [&](std::size_t i) {
            lc[base + i] = log_coeff_for(w, n, static_cast<long>(base + i));
        });
        // scan stopping rule sequentially over the fresh block
        for (std::size_t k = (base == 0 ? 1 : base); k < lc.size(); ++k) {
            double q = lc[k] - lc[k - 1] + log_rho; // log of c_k rho / c_{k-1}
            consecutive = (q < 0.0) ? consecutive + 1 : 0;
            if (onset < 0 && consecutive >= 10) onset = static_cast<long>(k);
            if (onset >= 0 && static_cast<long>(k) >= 2 * onset && k >= 12) {
                double qbar = -INFINITY;
                for (std::size_t j = k - 9; j <= k; ++j)
                    qbar = std::max(qbar, lc[j] - lc[j - 1] + log_rho);
                if (qbar < 0.0) {
                    double geom = std::exp(qbar) / (1.0 - std::exp(qbar));
                    double tail = std::exp(lc[k] + static_cast<double>(k) * log_rho) * geom;
                    achieved = tail;
                    if (tail <= tol) {
                        K = static_cast<long>(k);
                        ks.ratio_bound_ = std::exp(qbar - log_rho); // c_{k+1}/c_k bound
                        break;
                    }
                }
            }
        }
        if (K >= 0) break;
    }
    if (K < 0)
        throw TruncationError("kernel series truncation cap exceeded at rho_max=" +
                                  std::to_string(rho_max),
                              achieved);
    lc.resize(static_cast<std::size_t>(K) + 1);
    ks.coeffs_.resize(lc.size());
    for (std::size_t k = 0; k < lc.size(); ++k) ks.coeffs_[k] = std::exp(lc[k]);
    return ks;
}

void KernelSeries::require_valid(double rho) const {
    if (!(rho <= rho_max_ * (1.0 + 1e-12)))
        throw ValidityError("argument radius " + std::to_string(rho) +
                            " outside series validity region rho_max=" + std::to_string(rho_max_));
}

double KernelSeries::tail_bound(double rho) const {
    require_valid(rho);
    int K = truncation();
    double q = ratio_bound_ * rho;
    if (!(q < 1.0)) q = ratio_bound_ * rho_max_;
    return std::exp(log_coeffs_[static_cast<std::size_t>(K)] + K * std::log(std::max(rho, 1e-300))) *
           q / (1.0 - q);
}

Complex KernelSeries::eval_inner(Complex x) const {
    require_valid(std::abs(x));
    Complex acc(0, 0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Complex KernelSeries::radial_derivative_inner(Complex x) const {
    require_valid(std::abs(x));
    Complex acc(0, 0);
    for (std::size_t k = coeffs_.size(); k-- > 1;)
        acc = acc * x + static_cast<double>(k) * coeffs_[k];
    return acc * x;
}

Complex KernelSeries::eval(const BallPoint& z, const BallPoint& w) const {
    return eval_inner(ballgeom::hermitian_inner(w, z));
}

Complex KernelSeries::radial_derivative_eval(const BallPoint& z, const BallPoint& w) const {
    return radial_derivative_inner(ballgeom::hermitian_inner(w, z));
}

double KernelSeries::sup_norm(double abs_z) const {
    require_valid(abs_z);
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * abs_z + coeffs_[k];
    return acc + tail_bound(abs_z);
}

double KernelSeries::bloch_seminorm(double abs_z, const RadialGrid& grid) const {
    require_valid(abs_z);
    double best = 0.0;
    for (double t : grid.nodes) {
        double x = t * abs_z;
        double acc = 0.0;
        for (std::size_t k = coeffs_.size(); k-- > 1;)
            acc = acc * x + static_cast<double>(k) * coeffs_[k];
        acc *= x;
        best = std::max(best, (1.0 - t * t) * acc);
    }
    return coeffs_[0] + best;
}

} // namespace bergman::kernel
