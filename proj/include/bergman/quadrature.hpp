#pragma once

#include <functional>
#include <vector>

namespace bergman::quad {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    long evals = 0;
};

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// Adaptive Gauss-Kronrod 7-15 on [a,b].
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor = 1e-300,
                 int max_intervals = 20000);

// Tanh-sinh (double exponential) rule on [a,b].  Handles integrable
// algebraic/logarithmic endpoint singularities.  Call sites must place a
// singular endpoint at 0 so abscissas near it do not lose precision.
Result tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_level = 11);

// log of int_0^width exp(log_f(u)) du.  A coarse geometric scan supplies a
// scale shift so huge or underflowing integrands stay in double range; any
// singularity must sit at u = 0.
double log_integral_shifted(const std::function<double(double)>& log_f, double width,
                            double rel_tol);

} // namespace bergman::quad
