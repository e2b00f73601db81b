#pragma once

#include <string>
#include <vector>

#include "bergman/kernel.hpp"
#include "bergman/weights.hpp"

namespace bergman::projection {

using ballgeom::BallPoint;
using ballgeom::Complex;
using kernel::KernelSeries;
using weights::RadialWeight;

// Bounded radial profile: r^s or a piecewise-constant step function.
struct RadialProfile {
    enum class Kind { Power, Steps };
    Kind kind = Kind::Steps;
    double s_exp = 0.0;
    std::vector<double> breaks; // ascending interior breakpoints in (0,1)
    std::vector<double> values; // breaks.size()+1 entries

    static RadialProfile power(double s);
    static RadialProfile constant(double v);
    static RadialProfile step(double r0, double v1, double v2);
    static RadialProfile steps(std::vector<double> breaks, std::vector<double> values);

    double eval(double r) const;
    bool is_constant() const;
};

struct MonomialTerm {
    std::vector<int> m; // multi-index, one entry per coordinate
    RadialProfile profile;
    int degree() const {
        int d = 0;
        for (int mi : m) d += mi;
        return d;
    }
};

// f(z) = sum_terms phi(|z|) z^m
struct MonomialRadialFunction {
    int dim = 2;
    std::vector<MonomialTerm> terms;

    Complex eval(const BallPoint& z) const;
    Complex radial_derivative(const BallPoint& z) const; // valid once profiles are constant
};

// P_omega acts diagonally on the monomial-radial algebra:
//   P(phi(|.|) z^m) = lambda_m z^m,
//   lambda_m = int_0^1 phi r^{2n+2|m|-1} omega dr / omega_{2n+2|m|-1}.
MonomialRadialFunction project(const RadialWeight& w, const MonomialRadialFunction& f, int n);

// single-term coefficient
double project_coefficient(const RadialWeight& w, const MonomialTerm& term, int n);

// P^+_omega against a radial test function:
//   2n int_0^1 f(r) r^{2n-1} omega(r) A(r,|z|) dr,
//   A(r,|z|) = int_S |B_z(r eta)| dsigma(eta).
double maximal_project_radial(const RadialWeight& w, const RadialProfile& f, const BallPoint& z,
                              const KernelSeries& ks, double tol = 1e-7);

struct AdjointGj {
    int j = 0;
    double r_j = 0.0;    // 1 - 1/(2j+1)
    double kappa = 0.0;  // upsilon_{2n+2j-1} / omega_{2n+2j-1} (constant-free form)
    double ratio = 0.0;  // ||P* g_j||_{L^q_ups} / ||g_j||_{L^q_ups}; +inf when divergent
    bool divergent = false;
    std::string description;
};

// Adjoint of P_omega in <.,.>_{L^2_upsilon} applied to g_j(z) = z_1^j.
// paper_constant reproduces the paper's displayed prefactor (n-1)!/(2n-1)!
// for comparison; the default is the constant-free form anchored by
// P* g_j = g_j at omega = upsilon.
AdjointGj adjoint_on_gj(const RadialWeight& w, const RadialWeight& ups, int j, int n, double p,
                        bool paper_constant = false);

struct LinftyBlochReport {
    double sup_value = 0.0;
    std::vector<std::pair<double, double>> curve; // (r, (1-r) ||Re B_r||_{A^1} comparison)
    bool dhat_hypothesis = false;   // weight classified in the doubling class
    bool divergence_flag = false;   // direct series probe grows without bound
    std::vector<std::pair<double, double>> direct_curve;
};

// sup over grid radii of (1-|z|) ||Re B_z||_{A^1_omega} via the comparison
// integral; the quantitative engine of the L^infty -> Bloch bound.
LinftyBlochReport linfty_to_bloch_bound(const RadialWeight& w, int n, const RadialGrid& grid);

} // namespace bergman::projection
