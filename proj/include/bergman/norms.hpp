#pragma once

#include <utility>
#include <vector>

#include "bergman/kernel.hpp"
#include "bergman/projection.hpp"
#include "bergman/weights.hpp"

namespace bergman::norms {

using ballgeom::BallPoint;
using ballgeom::Complex;
using kernel::KernelSeries;
using weights::RadialWeight;

struct NormEstimate {
    enum class Method { SliceQuadrature, RadialQuadrature, ClosedForm };
    double value = 0.0;
    double abs_error = 0.0;
    Method method = Method::RadialQuadrature;
};

// M_p(r, B_z) (or of Re B_z) via the slice reduction at rho = r|z|.
NormEstimate mp_mean(const KernelSeries& ks, double r, const BallPoint& z, double p,
                     bool derivative = false, double tol = 1e-7);
NormEstimate mp_mean_rho(const KernelSeries& ks, double rho, double p, bool derivative = false,
                         double tol = 1e-7);

// int_0^rho dt / (omega_hat(t)^p (1-t)^e),  e = np-n+1 (kernel) or
// (n+1)p-n+1 (radial derivative); valid for rho > 1/4.
NormEstimate mp_comparison_integral(const RadialWeight& w, double rho, double p, int n,
                                    bool derivative);

// int_0^{|z|} upsilon_hat(t) / (omega_hat(t)^p (1-t)^e) dt; valid for |z| > 6/7.
NormEstimate apnorm_comparison(const RadialWeight& w, const RadialWeight& ups, double abs_z,
                               double p, int n, bool derivative);

// sup over the apex grid of mu(S_a) / omega(S_a)^{q/p}
NormEstimate carleson_ratio(const RadialWeight& mu_weight, const RadialWeight& w, double p,
                            double q, int n, const RadialGrid& grid);
std::vector<std::pair<double, double>> carleson_curve(const RadialWeight& mu_weight,
                                                      const RadialWeight& w, double p, double q,
                                                      int n, const RadialGrid& grid);

// Littlewood-Paley identity for f(z) = z^m: returns (lhs, rhs) of
//   ||f||^2_{A^2_omega} = omega(B)|f(0)|^2
//                       + 4 int_B |Re f|^2 |z|^{-2n} omega^{n*}(z) dV.
std::pair<double, double> littlewood_paley_check(const RadialWeight& w,
                                                 const std::vector<int>& m, int n);

struct BlochProjection {
    double value = 0.0;   // |P f(0)| + sup over grid of (1-t^2)|Re(P f)(t)|
    double bound_c = 0.0; // f-independent bound from the comparison integral
};

// Bloch norm of P_omega f for a sign-radial test function (|f| <= 1).
BlochProjection bloch_norm_of_projection(const projection::RadialProfile& f,
                                         const KernelSeries& ks, const RadialGrid& grid);

} // namespace bergman::norms
