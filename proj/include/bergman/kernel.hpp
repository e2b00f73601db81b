#pragma once

#include <vector>

#include "bergman/ballgeom.hpp"
#include "bergman/parallel.hpp"
#include "bergman/weights.hpp"

namespace bergman::kernel {

using ballgeom::BallPoint;
using ballgeom::Complex;

// Truncated homogeneous expansion of the reproducing kernel of A^2_omega:
//   B_z(w) = sum_k c_k <w,z>^k,   c_k = (n-1+k)! / (2 n! k! omega_{2n+2k-1}).
// Coefficients are kept in log space; immutable after build.
class KernelSeries {
  public:
    static KernelSeries build(const weights::RadialWeight& w, int n, double rho_max,
                              double tol, Exec exec = Exec::OpenMP, int k_cap = 20000);

    const weights::RadialWeight& weight() const { return weight_; }
    int dim() const { return n_; }
    int truncation() const { return static_cast<int>(log_coeffs_.size()) - 1; }
    double rho_max() const { return rho_max_; }
    double log_coeff(int k) const { return log_coeffs_[static_cast<std::size_t>(k)]; }
    double coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    // bound on sum_{k>K} c_k rho^k, valid for rho <= rho_max
    double tail_bound(double rho) const;

    // series in the scalar variable x = <w,z>
    Complex eval_inner(Complex x) const;
    Complex radial_derivative_inner(Complex x) const; // sum k c_k x^k

    Complex eval(const BallPoint& z, const BallPoint& w) const;
    Complex radial_derivative_eval(const BallPoint& z, const BallPoint& w) const;

    // H^infty norm: coefficients are positive, so the sup over the closed
    // ball is the radial limit along <w,z> = |z| t, t -> 1.
    double sup_norm(double abs_z) const;
    double sup_norm(const BallPoint& z) const { return sup_norm(z.norm()); }

    // |B_z(0)| + max over grid radii t of (1-t^2) sum_k k c_k (t |z|)^k
    double bloch_seminorm(double abs_z, const RadialGrid& grid) const;
    double bloch_seminorm(const BallPoint& z, const RadialGrid& grid) const {
        return bloch_seminorm(z.norm(), grid);
    }

  private:
    KernelSeries(weights::RadialWeight w, int n) : weight_(std::move(w)), n_(n) {}
    void require_valid(double rho) const;

    weights::RadialWeight weight_;
    int n_;
    double rho_max_ = 0.0;
    double ratio_bound_ = 0.0; // sup of c_{k+1}/c_k near truncation
    std::vector<double> log_coeffs_;
    std::vector<double> coeffs_;
};

} // namespace bergman::kernel
