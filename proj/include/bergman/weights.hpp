#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bergman/grid.hpp"

namespace bergman::weights {

// Leading behavior of a positive function near r -> 1:
//   C * exp(-E/(1-r)) * (1-r)^A * L(r)^B,   L(r) = 1 - log(1-r).
// Drives the symbolic divergence decisions in the criteria module.
struct TailDescriptor {
    double exp_coeff = 0.0; // E
    double pow_exp = 0.0;   // A
    double log_exp = 0.0;   // B
};

enum class Family { Power, PowerNorm, LogPower, ExpDecay, Tabulated, W1Derived };

class RadialWeight;
struct W1Result;
// W_1(t) = omega_hat(t) / (1-t), the derived weight behind the
// L^infty -> Bloch argument
W1Result w1_transform(const RadialWeight& w);

// A radial weight on [0,1): positive and integrable.  Immutable after
// construction; safe for concurrent read-only use.
class RadialWeight {
  public:
    static RadialWeight power(double alpha, double scale = 1.0);
    static RadialWeight power_normalized(double alpha, int dim, double scale = 1.0);
    static RadialWeight log_power(double alpha, double beta, double scale = 1.0);
    static RadialWeight exp_decay(double c, double beta);
    static RadialWeight tabulated(std::vector<double> r, std::vector<double> v);

    Family family() const { return family_; }
    const std::string& name() const { return name_; }

    // density omega(r); exact for closed-form families
    double eval(double r) const;
    double log_eval(double r) const;

    // tail  omega_hat(r) = int_r^1 omega
    double tail(double r) const;
    double log_tail(double r) const;

    // same quantities parameterized by the distance u = 1-r, so quadrature
    // nodes clustered at the r -> 1 endpoint keep full precision
    double log_eval_at_one_minus(double u) const;
    double log_tail_at_one_minus(double u) const;

    // moment  omega_s = int_0^1 r^s omega(r) dr
    double moment(double s) const;
    double log_moment(double s) const;

    // partial moment  int_r^1 t^s omega(t) dt
    double partial_moment(double s, double r) const;
    double log_partial_moment(double s, double r) const;

    // associated weight  omega^{n*}(r) = int_r^1 s^{2n-1} log(s/r) omega(s) ds
    double associated_star(double r, int order) const;

    TailDescriptor density_descriptor() const;
    TailDescriptor tail_asymptotics() const;

    // parameters (family-dependent; NaN when not applicable)
    double param_alpha() const { return alpha_; }
    double param_beta() const { return beta_; }
    double scale() const { return scale_; }
    int dim() const { return dim_; }

    // last radius backed by data (1.0 for closed-form families)
    double data_reach() const { return family_ == Family::Tabulated ? tab_r_.back() : 1.0; }

    bool operator==(const RadialWeight& o) const { return name_ == o.name_; }

  private:
    RadialWeight() = default;
    void finish_construction();
    double log_moment_by_quadrature(double s, double r_lo) const;

    Family family_ = Family::Power;
    double alpha_ = 0.0;
    double beta_ = 0.0;
    double scale_ = 1.0;
    double cnorm_log_ = 0.0; // log c_alpha for PowerNorm
    int dim_ = 2;
    std::string name_;

    // tabulated data
    std::vector<double> tab_r_, tab_v_;
    std::vector<double> tab_cum_; // tail contribution of segments right of node i
    double ext_gamma_ = 0.0, ext_coef_ = 0.0;

    // W1Derived base
    std::shared_ptr<const RadialWeight> base_;

    struct MomentCache;
    std::shared_ptr<MomentCache> cache_;

    friend struct W1Result;
    friend W1Result w1_transform(const RadialWeight& w);
};

// parse "family(param=value,...)" as used in weight corpus files
RadialWeight parse_weight(const std::string& spec);

enum class Verdict { Yes, No, Indeterminate };
std::string to_string(Verdict v);

struct WeightClassReport {
    double doubling_constant = 0.0; // +inf when divergent
    std::optional<std::pair<double, double>> reverse_doubling; // (C, K)
    std::pair<double, double> regular_ratio_band{0.0, 0.0};
    bool rapid_increase = false;
    double exponent_a = 0.0; // reverse-doubling decay exponent (LSQ fit)
    double exponent_b = 0.0; // doubling growth exponent (same fit)
    bool power_envelope_ok = true;
    Verdict dhat = Verdict::Indeterminate;
    Verdict dcheck = Verdict::Indeterminate;
    Verdict d = Verdict::Indeterminate;
    Verdict regular = Verdict::Indeterminate;
    Verdict rapidly_increasing = Verdict::Indeterminate;
};

// Classify w into the weight classes over a dyadic grid (k_max >= 20).
WeightClassReport classify(const RadialWeight& w, const RadialGrid& grid);

struct W1Result {
    std::optional<RadialWeight> w1;     // absent when W1 is not integrable
    bool not_in_d_warning = false;      // transform requested outside class D
    bool integrable = true;
    std::pair<double, double> tail_band{0.0, 0.0}; // tail(W1)/tail(w) range on dyadic grid
    std::string note;
};

} // namespace bergman::weights
