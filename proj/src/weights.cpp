#include "bergman/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>

#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman::weights {

using special::log_add;
using special::log_beta;
using special::log_inc_beta_reg;

struct RadialWeight::MomentCache {
    std::mutex mu;
    std::map<double, double> log_moments;                  // s -> log omega_s
    std::map<std::pair<double, int>, double> star_values;  // (r, order) -> omega^{n*}(r)
};

namespace {

std::string fmt_param(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void check_r(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius outside [0,1)");
}

using quad::log_integral_shifted;

} // namespace

RadialWeight RadialWeight::power(double alpha, double scale) {
    if (!(alpha > -1.0)) throw DomainError("power weight requires alpha > -1");
    if (!(scale > 0.0)) throw DomainError("weight scale must be positive");
    RadialWeight w;
    w.family_ = Family::Power;
    w.alpha_ = alpha;
    w.scale_ = scale;
    w.name_ = "power(alpha=" + fmt_param(alpha) + (scale != 1.0 ? ",scale=" + fmt_param(scale) : "") + ")";
    w.finish_construction();
    return w;
}

RadialWeight RadialWeight::power_normalized(double alpha, int dim, double scale) {
    if (!(alpha > -1.0)) throw DomainError("power weight requires alpha > -1");
    if (dim < 1 || dim > 4) throw DomainError("dimension must be in [1,4]");
    RadialWeight w;
    w.family_ = Family::PowerNorm;
    w.alpha_ = alpha;
    w.dim_ = dim;
    w.scale_ = scale;
    w.cnorm_log_ = std::lgamma(dim + alpha + 1.0) - std::lgamma(dim + 1.0) - std::lgamma(alpha + 1.0);
    w.name_ = "power(alpha=" + fmt_param(alpha) + ",normalized=true,n=" + std::to_string(dim) + ")";
    w.finish_construction();
    return w;
}

RadialWeight RadialWeight::log_power(double alpha, double beta, double scale) {
    bool ok = alpha > -1.0 || (alpha == -1.0 && beta < -1.0);
    if (!ok) throw DomainError("logpower weight not integrable (alpha=" + fmt_param(alpha) +
                               ", beta=" + fmt_param(beta) + ")");
    RadialWeight w;
    w.family_ = Family::LogPower;
    w.alpha_ = alpha;
    w.beta_ = beta;
    w.scale_ = scale;
    w.name_ = "logpower(alpha=" + fmt_param(alpha) + ",beta=" + fmt_param(beta) +
              (scale != 1.0 ? ",scale=" + fmt_param(scale) : "") + ")";
    w.finish_construction();
    return w;
}

RadialWeight RadialWeight::exp_decay(double c, double beta) {
    if (!(c > 0.0) || !(beta > 0.0)) throw DomainError("expdecay requires c > 0, beta > 0");
    RadialWeight w;
    w.family_ = Family::ExpDecay;
    w.alpha_ = c;
    w.beta_ = beta;
    w.name_ = "expdecay(c=" + fmt_param(c) + ",beta=" + fmt_param(beta) + ")";
    w.finish_construction();
    return w;
}

RadialWeight RadialWeight::tabulated(std::vector<double> r, std::vector<double> v) {
    if (r.size() != v.size() || r.size() < 2) throw DomainError("tabulated weight needs >= 2 nodes");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] >= 0.0 && r[i] < 1.0)) throw DomainError("tabulated node outside [0,1)");
        if (i > 0 && !(r[i] > r[i - 1])) throw DomainError("tabulated nodes must increase");
        if (!(v[i] > 0.0)) throw DomainError("tabulated values must be positive");
    }
    RadialWeight w;
    w.family_ = Family::Tabulated;
    w.tab_r_ = std::move(r);
    w.tab_v_ = std::move(v);
    std::size_t k = w.tab_r_.size() - 1;
    w.ext_gamma_ = std::log(w.tab_v_[k] / w.tab_v_[k - 1]) /
                   std::log((1.0 - w.tab_r_[k]) / (1.0 - w.tab_r_[k - 1]));
    if (!(w.ext_gamma_ > -1.0))
        throw DomainError("tabulated extension exponent <= -1, weight not integrable");
    w.ext_coef_ = w.tab_v_[k] / std::pow(1.0 - w.tab_r_[k], w.ext_gamma_);
    w.tab_cum_.assign(w.tab_r_.size(), 0.0);
    double acc = w.ext_coef_ * std::pow(1.0 - w.tab_r_[k], w.ext_gamma_ + 1.0) / (w.ext_gamma_ + 1.0);
    w.tab_cum_[k] = acc;
    for (std::size_t i = k; i-- > 0;) {
        acc += 0.5 * (w.tab_v_[i] + w.tab_v_[i + 1]) * (w.tab_r_[i + 1] - w.tab_r_[i]);
        w.tab_cum_[i] = acc;
    }
    std::ostringstream os;
    os << "tabulated(r=";
    for (std::size_t i = 0; i < w.tab_r_.size(); ++i) os << (i ? ";" : "") << fmt_param(w.tab_r_[i]);
    os << ",v=";
    for (std::size_t i = 0; i < w.tab_v_.size(); ++i) os << (i ? ";" : "") << fmt_param(w.tab_v_[i]);
    os << ")";
    w.name_ = os.str();
    w.finish_construction();
    return w;
}

void RadialWeight::finish_construction() {
    cache_ = std::make_shared<MomentCache>();
    // integrability witness: total mass must be finite and positive
    double lt = log_tail(0.0);
    if (!std::isfinite(lt)) throw DomainError("weight has no finite total mass: " + name_);
}

double RadialWeight::log_eval_at_one_minus(double u) const {
    if (!(u > 0.0 && u <= 1.0)) throw DomainError("distance to 1 outside (0,1]");
    switch (family_) {
        case Family::Power:
            return std::log(scale_) + alpha_ * std::log(u);
        case Family::PowerNorm:
            return std::log(scale_) + cnorm_log_ + alpha_ * (std::log(u) + std::log(2.0 - u));
        case Family::LogPower: {
            double ll = std::log(1.0 - std::log(u));
            return std::log(scale_) + alpha_ * std::log(u) + beta_ * ll;
        }
        case Family::ExpDecay:
            return std::log(scale_ * alpha_) - beta_ / u;
        case Family::Tabulated: {
            if (u <= 1.0 - tab_r_.back())
                return std::log(ext_coef_) + ext_gamma_ * std::log(u);
            return std::log(eval(1.0 - u));
        }
        case Family::W1Derived:
            return std::log(scale_) + base_->log_tail_at_one_minus(u) - std::log(u);
    }
    return 0.0;
}

double RadialWeight::log_eval(double r) const {
    check_r(r);
    return log_eval_at_one_minus(1.0 - r);
}

double RadialWeight::eval(double r) const {
    check_r(r);
    if (family_ == Family::Tabulated) {
        if (r <= tab_r_.front()) return tab_v_.front();
        if (r >= tab_r_.back()) return ext_coef_ * std::pow(1.0 - r, ext_gamma_);
        auto it = std::upper_bound(tab_r_.begin(), tab_r_.end(), r);
        std::size_t i = static_cast<std::size_t>(it - tab_r_.begin()) - 1;
        double t = (r - tab_r_[i]) / (tab_r_[i + 1] - tab_r_[i]);
        return tab_v_[i] + t * (tab_v_[i + 1] - tab_v_[i]);
    }
    return std::exp(log_eval(r));
}

double RadialWeight::log_tail_at_one_minus(double u) const {
    if (!(u > 0.0 && u <= 1.0)) throw DomainError("distance to 1 outside (0,1]");
    switch (family_) {
        case Family::Power:
            return std::log(scale_) + (alpha_ + 1.0) * std::log(u) - std::log(alpha_ + 1.0);
        case Family::PowerNorm: {
            double x = u * (2.0 - u);
            return std::log(scale_) + cnorm_log_ - M_LN2 + log_beta(0.5, alpha_ + 1.0) +
                   log_inc_beta_reg(alpha_ + 1.0, 0.5, x);
        }
        case Family::LogPower: {
            double big_l = 1.0 - std::log(u);
            if (alpha_ == -1.0)
                return std::log(scale_) + (beta_ + 1.0) * std::log(big_l) - std::log(-(beta_ + 1.0));
            double a1 = alpha_ + 1.0;
            auto integrand = [&](double v) { return std::pow(1.0 + v / big_l, beta_) * std::exp(-a1 * v); };
            auto j = quad::integrate(integrand, 0.0, 60.0 / a1, 1e-12);
            return std::log(scale_) + a1 * std::log(u) + beta_ * std::log(big_l) + std::log(j.value);
        }
        case Family::ExpDecay:
            return std::log(scale_ * alpha_) + special::log_expdecay_tail(beta_, u);
        case Family::Tabulated: {
            if (u <= 1.0 - tab_r_.back())
                return std::log(ext_coef_) + (ext_gamma_ + 1.0) * std::log(u) -
                       std::log(ext_gamma_ + 1.0);
            return std::log(tail(1.0 - u));
        }
        case Family::W1Derived: {
            auto lf = [&](double v) { return base_->log_tail_at_one_minus(v) - std::log(v); };
            return std::log(scale_) + log_integral_shifted(lf, u, 1e-11);
        }
    }
    return 0.0;
}

double RadialWeight::log_tail(double r) const {
    check_r(r);
    return log_tail_at_one_minus(1.0 - r);
}

double RadialWeight::tail(double r) const {
    if (family_ == Family::Tabulated) {
        check_r(r);
        if (r >= tab_r_.back())
            return ext_coef_ * std::pow(1.0 - r, ext_gamma_ + 1.0) / (ext_gamma_ + 1.0);
        if (r <= tab_r_.front()) return tab_v_.front() * (tab_r_.front() - r) + tab_cum_.front();
        auto it = std::upper_bound(tab_r_.begin(), tab_r_.end(), r);
        std::size_t i = static_cast<std::size_t>(it - tab_r_.begin()) - 1;
        double vr = eval(r);
        return 0.5 * (vr + tab_v_[i + 1]) * (tab_r_[i + 1] - r) + tab_cum_[i + 1];
    }
    return std::exp(log_tail(r));
}

double RadialWeight::log_moment_by_quadrature(double s, double r_lo) const {
    if (family_ == Family::LogPower && alpha_ == -1.0) {
        // the density ~ u^{-1} L^beta spreads mass log-uniformly toward 1;
        // direct quadrature cannot reach it all, so integrate by parts
        // against the closed-form tail:
        //   int_r^1 t^s w = c^s w_hat(c) + s int_c^1 t^{s-1} w_hat dt
        //                 + int_r^c t^s w dt,   c = max(r, 1/2)
        if (s == 0.0) return log_tail(r_lo);
        double c = std::max(r_lo, 0.5);
        double boundary = s * std::log(c) + log_tail(c);
        auto lf = [&](double u) {
            return std::log(s) + (s - 1.0) * std::log1p(-u) + log_tail_at_one_minus(u);
        };
        double by_parts = log_integral_shifted(lf, 1.0 - c, 1e-12);
        double acc = log_add(boundary, by_parts);
        if (r_lo < c) {
            auto g = [&](double t) { return std::pow(t, s) * eval(t); };
            auto res = quad::integrate(g, r_lo, c, 1e-12);
            if (res.value > 0.0) acc = log_add(acc, std::log(res.value));
        }
        return acc;
    }
    double width = 1.0 - r_lo;
    if (family_ == Family::ExpDecay) {
        double ustar = std::sqrt(beta_ / std::max(s, 1.0));
        auto lf = [&](double u) {
            return std::log(scale_ * alpha_) + s * std::log1p(-u) - beta_ / u;
        };
        if (s >= 100.0 / beta_ && ustar < 0.25 * width) {
            double lo = ustar / 20.0, hi = std::min(20.0 * ustar, width);
            double m = lf(ustar);
            auto g = [&](double u) { return std::exp(lf(u) - m); };
            auto res = quad::integrate(g, lo, hi, 1e-12);
            return m + std::log(res.value);
        }
        return log_integral_shifted(lf, width, 1e-12);
    }
    // window: r^s = exp(s log(1-u)) is negligible past u ~ 60/s
    if (s > 60.0) width = std::min(width, 60.0 / s);
    auto lf = [&](double u) { return s * std::log1p(-u) + log_eval_at_one_minus(u); };
    return log_integral_shifted(lf, width, 1e-12);
}

double RadialWeight::log_moment(double s) const {
    if (!(s >= 0.0)) throw DomainError("moment order must be >= 0");
    switch (family_) {
        case Family::Power:
            return std::log(scale_) + log_beta(s + 1.0, alpha_ + 1.0);
        case Family::PowerNorm:
            return std::log(scale_) + cnorm_log_ - M_LN2 + log_beta(0.5 * (s + 1.0), alpha_ + 1.0);
        default: {
            {
                std::lock_guard<std::mutex> lk(cache_->mu);
                auto it = cache_->log_moments.find(s);
                if (it != cache_->log_moments.end()) return it->second;
            }
            // compute outside the lock so parallel series builds do not serialize
            double v = log_moment_by_quadrature(s, 0.0);
            std::lock_guard<std::mutex> lk(cache_->mu);
            cache_->log_moments.emplace(s, v);
            return v;
        }
    }
}

double RadialWeight::moment(double s) const { return std::exp(log_moment(s)); }

double RadialWeight::log_partial_moment(double s, double r) const {
    check_r(r);
    if (r == 0.0) return log_moment(s);
    switch (family_) {
        case Family::Power:
            return std::log(scale_) + log_beta(s + 1.0, alpha_ + 1.0) +
                   log_inc_beta_reg(alpha_ + 1.0, s + 1.0, 1.0 - r);
        case Family::PowerNorm: {
            double x = (1.0 - r) * (1.0 + r);
            return std::log(scale_) + cnorm_log_ - M_LN2 + log_beta(0.5 * (s + 1.0), alpha_ + 1.0) +
                   log_inc_beta_reg(alpha_ + 1.0, 0.5 * (s + 1.0), x);
        }
        default:
            return log_moment_by_quadrature(s, r);
    }
}

double RadialWeight::partial_moment(double s, double r) const {
    return std::exp(log_partial_moment(s, r));
}

double RadialWeight::associated_star(double r, int order) const {
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("associated weight defined for r in (0,1)");
    if (order < 1) throw DomainError("associated weight order must be >= 1");
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->star_values.find({r, order});
        if (it != cache_->star_values.end()) return it->second;
    }
    double p = 2.0 * order - 1.0;
    double log_r = std::log(r);
    double lv;
    if (family_ == Family::LogPower && alpha_ == -1.0) {
        // by parts against the closed-form tail (see log_moment_by_quadrature):
        // omega^{n*}(r) = int_r^1 omega_hat(s) s^{2n-2} [(2n-1) log(s/r) + 1] ds
        auto lf = [&](double u) {
            double log_s = std::log1p(-u);
            double bracket = p * (log_s - log_r) + 1.0;
            return log_tail_at_one_minus(u) + (p - 1.0) * log_s + std::log(bracket);
        };
        lv = log_integral_shifted(lf, 1.0 - r, 1e-11);
    } else {
        auto lf = [&](double u) {
            double log_s = std::log1p(-u);
            double lg = std::log(log_s - log_r); // log log(s/r), s = 1-u
            return p * log_s + lg + log_eval_at_one_minus(u);
        };
        lv = log_integral_shifted(lf, 1.0 - r, 1e-11);
    }
    double v = std::exp(lv);
    std::lock_guard<std::mutex> lk(cache_->mu);
    cache_->star_values.emplace(std::make_pair(r, order), v);
    return v;
}

TailDescriptor RadialWeight::density_descriptor() const {
    switch (family_) {
        case Family::Power:
        case Family::PowerNorm:
            return {0.0, alpha_, 0.0};
        case Family::LogPower:
            return {0.0, alpha_, beta_};
        case Family::ExpDecay:
            return {beta_, 0.0, 0.0};
        case Family::Tabulated:
            return {0.0, ext_gamma_, 0.0};
        case Family::W1Derived: {
            TailDescriptor t = base_->tail_asymptotics();
            return {t.exp_coeff, t.pow_exp - 1.0, t.log_exp};
        }
    }
    return {};
}

TailDescriptor RadialWeight::tail_asymptotics() const {
    TailDescriptor d = density_descriptor();
    if (d.exp_coeff > 0.0) return {d.exp_coeff, d.pow_exp + 2.0, d.log_exp};
    if (d.pow_exp > -1.0) return {0.0, d.pow_exp + 1.0, d.log_exp};
    // pow_exp == -1 with log_exp < -1
    return {0.0, 0.0, d.log_exp + 1.0};
}

RadialWeight parse_weight(const std::string& spec) {
    auto fail = [&](const std::string& why) -> RadialWeight {
        throw DomainError("cannot parse weight '" + spec + "': " + why);
    };
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
    auto lp = s.find('(');
    if (lp == std::string::npos || s.back() != ')') return fail("expected family(args)");
    std::string fam = s.substr(0, lp);
    std::string args = s.substr(lp + 1, s.size() - lp - 2);
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos < args.size()) {
        auto comma = args.find(',', pos);
        std::string item = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? args.size() : comma + 1;
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq + 1 >= item.size()) return fail("bad key=value '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    auto num = [&](const std::string& key) -> double {
        auto it = kv.find(key);
        if (it == kv.end()) fail("missing parameter '" + key + "'");
        try {
            std::size_t used = 0;
            double v = std::stod(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            fail("bad numeric value for '" + key + "'");
        }
        return 0.0;
    };
    auto list = [&](const std::string& key) -> std::vector<double> {
        auto it = kv.find(key);
        if (it == kv.end()) fail("missing parameter '" + key + "'");
        std::vector<double> out;
        std::stringstream ss(it->second);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            try {
                out.push_back(std::stod(tok));
            } catch (const std::exception&) {
                fail("bad list entry '" + tok + "'");
            }
        }
        return out;
    };
    if (fam == "power") {
        bool normalized = kv.count("normalized") && (kv["normalized"] == "true" || kv["normalized"] == "1");
        double scale = kv.count("scale") ? num("scale") : 1.0;
        if (normalized) {
            int n = kv.count("n") ? static_cast<int>(num("n")) : 2;
            return RadialWeight::power_normalized(num("alpha"), n, scale);
        }
        return RadialWeight::power(num("alpha"), scale);
    }
    if (fam == "logpower") {
        double scale = kv.count("scale") ? num("scale") : 1.0;
        return RadialWeight::log_power(num("alpha"), num("beta"), scale);
    }
    if (fam == "expdecay") return RadialWeight::exp_decay(num("c"), num("beta"));
    if (fam == "tabulated") return RadialWeight::tabulated(list("r"), list("v"));
    return fail("unknown family '" + fam + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "indeterminate";
    }
}

namespace {

Verdict and_verdict(Verdict a, Verdict b) {
    if (a == Verdict::No || b == Verdict::No) return Verdict::No;
    if (a == Verdict::Yes && b == Verdict::Yes) return Verdict::Yes;
    return Verdict::Indeterminate;
}

} // namespace

WeightClassReport classify(const RadialWeight& w, const RadialGrid& grid) {
    if (grid.scheme != RadialGrid::Scheme::Dyadic || grid.size() < 21)
        throw DomainError("classify requires a dyadic grid with k_max >= 20");
    const int K = static_cast<int>(grid.size()) - 1;
    WeightClassReport rep;

    // a tabulated weight must be backed by data out to the deepest grid point;
    // beyond its last node only the extrapolation speaks
    bool indeterminate_reach = w.data_reach() < grid.nodes[K];

    std::vector<double> lt(K + 1);
    for (int k = 0; k <= K; ++k) lt[k] = w.log_tail(grid.nodes[k]);

    // doubling ratios in log space: ld_k = log( tail(r_k)/tail(r_{k+1}) )
    std::vector<double> ld(K);
    for (int k = 0; k < K; ++k) ld[k] = lt[k] - lt[k + 1];
    rep.doubling_constant = std::exp(*std::max_element(ld.begin(), ld.end()));

    {
        double lo = INFINITY, hi = -INFINITY;
        bool monotone_up = true;
        for (int k = K - 5; k < K; ++k) {
            lo = std::min(lo, ld[k]);
            hi = std::max(hi, ld[k]);
            if (k > K - 5 && ld[k] < ld[k - 1]) monotone_up = false;
        }
        if (hi - lo < std::log(1.10))
            rep.dhat = Verdict::Yes;
        else if (monotone_up && ld[K - 1] - ld[K - 5] >= std::log(2.0))
            rep.dhat = Verdict::No;
        else
            rep.dhat = Verdict::Indeterminate;
    }

    // least-squares exponent of log tail vs log(1-r) on the last 10 octaves
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (int k = std::max(1, K - 10); k <= K; ++k) {
            if (!std::isfinite(lt[k])) continue;
            double x = -k * M_LN2; // log(1-r_k)
            sx += x;
            sy += lt[k];
            sxx += x * x;
            sxy += x * lt[k];
            ++n;
        }
        double slope = 0.0, icept = 0.0;
        if (n >= 2) {
            slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            icept = (sy - slope * sx) / n;
        }
        rep.exponent_a = rep.exponent_b = slope;
        double worst = 0.0;
        for (int k = std::max(1, K - 10); k <= K; ++k) {
            if (!std::isfinite(lt[k])) {
                worst = INFINITY;
                break;
            }
            worst = std::max(worst, std::fabs(lt[k] - (icept + slope * (-k * M_LN2))));
        }
        rep.power_envelope_ok = worst <= std::log(4.0);
    }

    // reverse doubling: search K_f in {2,4,8,16}
    {
        Verdict best = Verdict::No;
        double best_c = 0.0;
        int best_k = 0;
        bool any_indet = false;
        for (int m = 1; m <= 4; ++m) { // K_f = 2^m
            double c_est = INFINITY;
            for (int k = K - m - 5; k <= K - m; ++k)
                c_est = std::min(c_est, std::exp(lt[k] - lt[k + m]));
            double first = std::exp(lt[K - m - 5] - lt[K - 5]);
            double last = std::exp(lt[K - m] - lt[K]);
            double trend = (first > 1.0) ? (last - 1.0) / (first - 1.0) : 0.0;
            bool yes = c_est >= 1.10 && (c_est >= 1.5 || trend >= 0.85);
            bool no = c_est < 1.05 || (c_est < 1.5 && trend < 0.85);
            if (yes && c_est > best_c) {
                best = Verdict::Yes;
                best_c = c_est;
                best_k = 1 << m;
            } else if (!yes && !no) {
                any_indet = true;
            }
        }
        if (best == Verdict::Yes) {
            rep.dcheck = Verdict::Yes;
            rep.reverse_doubling = std::make_pair(best_c, static_cast<double>(best_k));
        } else {
            rep.dcheck = any_indet ? Verdict::Indeterminate : Verdict::No;
        }
    }

    // regularity ratio  tail / ((1-t) omega(t))  on t in (0.5, 1)
    {
        double lo = INFINITY, hi = -INFINITY;
        std::vector<double> ratio(K + 1, 0.0);
        bool monotone_up_tail = true;
        for (int k = 1; k <= K; ++k) {
            double lr = lt[k] - std::log1p(-grid.nodes[k]) - w.log_eval(grid.nodes[k]);
            ratio[k] = lr;
            lo = std::min(lo, lr);
            hi = std::max(hi, lr);
        }
        for (int k = K - 4; k <= K; ++k)
            if (ratio[k] < ratio[k - 1]) monotone_up_tail = false;
        rep.regular_ratio_band = {std::exp(lo), std::exp(hi)};
        bool banded = hi - lo <= std::log(4.0);
        rep.regular = banded ? Verdict::Yes : Verdict::No;
        rep.rapid_increase = !banded && monotone_up_tail && ratio[K] - ratio[1] >= std::log(2.0);
        rep.rapidly_increasing = rep.rapid_increase ? Verdict::Yes : Verdict::No;
    }

    if (indeterminate_reach) {
        rep.dhat = rep.dcheck = rep.regular = rep.rapidly_increasing = Verdict::Indeterminate;
    }
    rep.d = and_verdict(rep.dhat, rep.dcheck);
    return rep;
}

W1Result w1_transform(const RadialWeight& w) {
    W1Result out;
    WeightClassReport rep = classify(w, RadialGrid::dyadic(20));
    out.not_in_d_warning = rep.d != Verdict::Yes;

    try {
        if (w.family() == Family::Power) {
            out.w1 = RadialWeight::power(w.param_alpha(), w.scale() / (w.param_alpha() + 1.0));
        } else if (w.family() == Family::LogPower && w.param_alpha() == -1.0) {
            double b1 = w.param_beta() + 1.0;
            out.w1 = RadialWeight::log_power(-1.0, b1, w.scale() / (-w.param_beta() - 1.0));
        } else {
            RadialWeight d;
            d.family_ = Family::W1Derived;
            d.base_ = std::make_shared<RadialWeight>(w);
            d.name_ = "w1(" + w.name() + ")";
            TailDescriptor dd = d.density_descriptor();
            bool ok = dd.exp_coeff > 0.0 || dd.pow_exp > -1.0 ||
                      (dd.pow_exp == -1.0 && dd.log_exp < -1.0);
            if (!ok) throw DomainError("W1 transform not integrable for " + w.name());
            d.finish_construction();
            out.w1 = d;
        }
    } catch (const DomainError& e) {
        out.integrable = false;
        out.note = e.what();
        return out;
    }

    double lo = INFINITY, hi = -INFINITY;
    for (int k = 1; k <= 14; ++k) {
        double r = 1.0 - std::ldexp(1.0, -k);
        double lr = out.w1->log_tail(r) - w.log_tail(r);
        lo = std::min(lo, lr);
        hi = std::max(hi, lr);
    }
    out.tail_band = {std::exp(lo), std::exp(hi)};
    return out;
}

} // namespace bergman::weights
