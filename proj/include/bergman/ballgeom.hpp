#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "bergman/grid.hpp"
#include "bergman/weights.hpp"

namespace bergman::ballgeom {

using Complex = std::complex<double>;

// A point of the closed unit ball of C^n (|z| <= 1; interior points have |z| < 1).
class BallPoint {
  public:
    explicit BallPoint(std::vector<Complex> coords);
    static BallPoint zero(int n);
    static BallPoint axis(int n, int axis, Complex value); // value * e_axis

    int dim() const { return static_cast<int>(coords_.size()); }
    double norm() const { return norm_; }
    const std::vector<Complex>& coords() const { return coords_; }
    const Complex& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  private:
    std::vector<Complex> coords_;
    double norm_;
};

// <z,w> = sum z_i conj(w_i)
Complex hermitian_inner(const BallPoint& z, const BallPoint& w);

// d(xi,tau) = |1 - <xi,tau>|^{1/2}
double nonisotropic_distance(const BallPoint& xi, const BallPoint& tau);

struct CarlesonBlock {
    BallPoint apex;                             // apex a; a = 0 means the whole ball
    double cap_radius() const { return std::sqrt(1.0 - apex.norm()); }
};

// Tensor rule for the weighted disk integral behind the slice reduction:
// radial Gauss-Legendre in u = t^2 against (1-u)^{n-2}, trapezoid in angle.
struct DiskQuadratureRule {
    std::vector<double> u_nodes, u_weights; // on [0,1]
    int n_theta = 0;
    int dim = 2;

    static DiskQuadratureRule make(int n_radial, int n_theta, int dim);
    // exact for polynomials g(x,y) up to this total degree
    int exact_degree() const { return static_cast<int>(u_nodes.size()) - 1; }

    Complex apply(const std::function<Complex(Complex)>& g, double rho) const;
};

struct ComplexEstimate {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
};

// int_S g(rho <e1,eta>) dsigma(eta); for n >= 2 reduced to the weighted disk
// integral (n-1) int_D g(rho xi) (1-|xi|^2)^{n-2} dA(xi), for n = 1 a circle mean.
ComplexEstimate sphere_slice_integral(const std::function<Complex(Complex)>& g, double rho,
                                      int n, double tol = 1e-10);

// int_S |eta_1|^{2c} dsigma = Gamma(n) Gamma(c+1) / Gamma(n+c)
double monomial_sphere_integral(double c, int n);

// sigma(Q_a) with Q_a = { eta : |1 - <a/|a|, eta>| <= 1 - |a| }; Q_0 = S.
double cap_measure(const CarlesonBlock& block, int n);

// omega(S_a) = 2n sigma(Q_a) int_{|a|}^1 r^{2n-1} omega(r) dr
double block_weight_measure(const weights::RadialWeight& w, const CarlesonBlock& block, int n);

} // namespace bergman::ballgeom
