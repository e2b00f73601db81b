#include "bergman/special.hpp"

#include <boost/math/special_functions/beta.hpp>

namespace bergman::special {

double log_sub(double a, double b) {
    if (b == -INFINITY) return a;
    if (!(a > b)) throw DomainError("log_sub: requires a > b");
    return a + std::log1p(-std::exp(b - a));
}

double inc_beta_reg(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return boost::math::ibeta(a, b, x);
}

// Continued fraction for I_x(a,b), valid when x < (a+1)/(a+b+2).
// Modified Lentz; returns the CF factor of  x^a (1-x)^b / (a B(a,b)) * CF.
static double ibeta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 400; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) return h;
    }
    throw EstimationError("incomplete beta continued fraction did not converge");
}

double log_inc_beta_reg(double a, double b, double x) {
    if (x <= 0.0) return -INFINITY;
    if (x >= 1.0) return 0.0;
    if (x < (a + 1.0) / (a + b + 2.0)) {
        double log_pref = a * std::log(x) + b * std::log1p(-x) - std::log(a) - log_beta(a, b);
        return log_pref + std::log(ibeta_cf(a, b, x));
    }
    // away from the underflow regime, the direct value is safe
    double v = boost::math::ibeta(a, b, x);
    if (v > 0.0) return std::log(v);
    return log_sub(0.0, log_inc_beta_reg(b, a, 1.0 - x));
}

// int_0^s exp(-beta/u) du = s e^{-beta/s} - beta E1(beta/s).
// For large x = beta/s the direct form cancels; switch to the asymptotic
// series  (s^2/beta) e^{-x} sum_k (-1)^k (k+1)!/x^k.
double log_expdecay_tail(double beta, double s) {
    if (s <= 0.0) return -INFINITY;
    double x = beta / s;
    if (x <= 35.0) {
        double e1 = -std::expint(-x); // E1(x)
        double v = s * std::exp(-x) - beta * e1;
        if (v <= 0.0) throw EstimationError("expdecay tail: cancellation");
        return std::log(v);
    }
    double term = 1.0, sum = 1.0, prev = INFINITY;
    for (int k = 1; k <= 60; ++k) {
        term *= -static_cast<double>(k + 1) / x;
        if (std::fabs(term) >= prev) break; // asymptotic series: stop at min term
        prev = std::fabs(term);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return 2.0 * std::log(s) - std::log(beta) - x + std::log(sum);
}

} // namespace bergman::special
