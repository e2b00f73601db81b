#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bergman {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct EstimationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationError : std::runtime_error {
    double achieved_bound;
    TruncationError(const std::string& msg, double bound)
        : std::runtime_error(msg), achieved_bound(bound) {}
};

namespace special {

// log Gamma(x), x > 0 only in this codebase
inline double lgamma_pos(double x) { return std::lgamma(x); }

// log B(a,b)
inline double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// log(exp(a) + exp(b)) without overflow
inline double log_add(double a, double b) {
    if (a == -INFINITY) return b;
    if (b == -INFINITY) return a;
    double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

// log(exp(a) - exp(b)), requires a > b
double log_sub(double a, double b);

// Regularized incomplete beta I_x(a,b) and its log; log variant keeps
// relative accuracy when the result underflows toward 0.
double inc_beta_reg(double a, double b, double x);
double log_inc_beta_reg(double a, double b, double x);

// log of int_0^s exp(-beta/u) du  (exponential-decay weight tail)
double log_expdecay_tail(double beta, double s);

// Counter-based RNG: splitmix64.  Used for all Monte-Carlo streams so
// results are identical for any thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SplitMixStream {
  public:
    SplitMixStream(std::uint64_t seed, std::uint64_t stream)
        : state_(splitmix64(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // uniform in (0,1)
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller (deterministic across platforms)
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform(), u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double c = std::cos(2.0 * M_PI * u2), s = std::sin(2.0 * M_PI * u2);
        spare_ = r * s;
        have_spare_ = true;
        return r * c;
    }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace special
} // namespace bergman
