#pragma once

#include <string>
#include <vector>

#include "bergman/parallel.hpp"
#include "bergman/projection.hpp"
#include "bergman/weights.hpp"

namespace bergman::criteria {

using weights::RadialWeight;

struct WeightPair {
    RadialWeight omega;
    RadialWeight upsilon;
    double p = 2.0;
    int n = 2;
    std::string id;

    double q() const { return p / (p - 1.0); }
};

// Symbolic divergence of  int^1 omega^q / upsilon^{q-1} s^{2n-1} ds  at 1,
// decided by tail-descriptor exponent arithmetic for closed-form families.
bool inner_integral_divergent(const WeightPair& pair);

// log int_r^1 omega^q / upsilon^{q-1} s^{2n-1} ds   (pair must be convergent)
double log_inner_integral(const WeightPair& pair, double r);
// log int_0^r upsilon / omega_hat^p s^{2n-1} ds
double log_up_integral(const WeightPair& pair, double r);

// The Theorem quantities; +inf when the inner integral diverges.
double m_value(const WeightPair& pair, double r);
double n_value(const WeightPair& pair, double r);
double kstar_value(const WeightPair& pair, double r);
double h_value(const WeightPair& pair, double t);

struct SchurRow {
    double t = 0.0;
    double lhs_direct = 0.0; // int_t^1 (omega/h)^q s^{2n-1} ds by quadrature
    double rhs_exact = 0.0;  // q * inner(t)^{1/q}
    double bound = 0.0;      // M * omega_hat(t) / upsilon_hat(t)^{1/p}
};

struct SchurReport {
    bool skipped = false; // M = +inf: nothing to test
    std::vector<SchurRow> rows;
    double empirical_c = 0.0; // max lhs / bound
    double max_identity_err = 0.0;
};

SchurReport schur_test_check(const WeightPair& pair, const RadialGrid& grid);

enum class Boundedness { Bounded, Unbounded, Indeterminate };
std::string to_string(Boundedness b);

struct GjSample {
    int j = 0;
    double r_j = 0.0;
    double ratio = 0.0; // +inf when the adjoint norm diverges
    double h_pow = 0.0; // H(r_j)^{1/q}
};

struct CriterionReport {
    std::string pair_id;
    bool caveat_not_d = false;
    bool inner_divergent = false;
    std::vector<double> grid_r;
    std::vector<double> m_curve, n_curve, kstar_curve, h_curve;
    double m_sup = 0.0, n_sup = 0.0, kstar_sup = 0.0;
    bool m_finite = false, n_finite = false, kstar_finite = false;
    Boundedness verdict = Boundedness::Indeterminate;
    std::vector<GjSample> gj;
    double gj_empirical_c = 0.0; // min ratio_j / H(r_j)^{1/q} over finite samples
    bool equivalence_consistent = false;
    bool gj_consistent = false;
};

// Evaluate all curves on the grid and decide boundedness of P_omega / P^+_omega
// on L^p_upsilon.  Deterministic for a fixed grid; grid points evaluated
// data-parallel under Exec::OpenMP.
CriterionReport decide(const WeightPair& pair, const RadialGrid& grid,
                       Exec exec = Exec::OpenMP, int gj_max = 32);

} // namespace bergman::criteria
