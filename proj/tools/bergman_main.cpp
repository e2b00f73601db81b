#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bergman/kernel.hpp"
#include "bergman/norms.hpp"
#include "bergman/report.hpp"
#include "bergman/special.hpp"
#include "bergman/verify.hpp"

using namespace bergman;
using report::fmt12;

namespace {

int cmd_classify(const config::RunConfig& cfg) {
    auto grid = RadialGrid::dyadic(cfg.kmax_closed);
    bool all_match = true;
    for (auto& [id, w] : config::corpus_weights(cfg)) {
        auto rep = weights::classify(w, grid);
        report::write_file(cfg.out_dir + "/classify_" + id + ".json",
                           report::to_json(rep).dump(2) + "\n");
        auto it = cfg.expectations.find(id);
        bool match = true;
        if (it != cfg.expectations.end()) {
            auto want = [&](std::optional<bool> e, weights::Verdict got) {
                if (!e) return true;
                return got == (*e ? weights::Verdict::Yes : weights::Verdict::No);
            };
            match = want(it->second.dhat, rep.dhat) && want(it->second.dcheck, rep.dcheck) &&
                    want(it->second.d, rep.d) && want(it->second.regular, rep.regular) &&
                    want(it->second.rapid, rep.rapidly_increasing);
            all_match = all_match && match;
        }
        std::cout << id << ": dhat=" << weights::to_string(rep.dhat)
                  << " dcheck=" << weights::to_string(rep.dcheck)
                  << " d=" << weights::to_string(rep.d)
                  << " regular=" << weights::to_string(rep.regular)
                  << " rapidly_increasing=" << weights::to_string(rep.rapidly_increasing)
                  << (it != cfg.expectations.end() ? (match ? "  [expected]" : "  [MISMATCH]") : "")
                  << "\n";
    }
    return all_match ? 0 : 1;
}

int cmd_verify(const config::RunConfig& cfg, const std::string& suite) {
    auto rows = verify::run_suite(suite, cfg);
    std::ostringstream csv;
    report::CsvWriter w(csv);
    w.row({"check_id", "lemma_tag", "value", "band", "pass"});
    bool all_pass = true;
    for (const auto& row : rows) {
        w.row({row.id, row.lemma_tag, fmt12(row.value), fmt12(row.band),
               row.pass ? "true" : "false"});
        all_pass = all_pass && row.pass;
        std::cout << (row.pass ? "PASS " : "FAIL ") << row.id << "  value=" << fmt12(row.value)
                  << " band=" << fmt12(row.band) << "  (" << fmt12(row.seconds) << "s)\n";
    }
    report::write_file(cfg.out_dir + "/verify_" + suite + ".csv", csv.str());
    return all_pass ? 0 : 1;
}

int cmd_sweep(const config::RunConfig& cfg, const std::string& target) {
    std::ostringstream csv;
    report::CsvWriter w(csv);
    auto d_weights = [&]() {
        std::vector<std::pair<std::string, weights::RadialWeight>> out;
        for (auto& [id, wt] : config::corpus_weights(cfg)) {
            auto rep = weights::classify(wt, RadialGrid::dyadic(20));
            if (rep.d == weights::Verdict::Yes) out.emplace_back(id, wt);
        }
        return out;
    };
    if (target == "kernel-norm") {
        w.row({"weight", "abs_z", "supnorm", "inv_block_measure", "product"});
        for (auto& [id, wt] : d_weights()) {
            auto ks = kernel::KernelSeries::build(wt, cfg.n, 1.0 - 0.75 * std::ldexp(1.0, -10),
                                                  1e-4, cfg.exec(), 400000);
            for (int k = 0; k <= 10; ++k) {
                double r = 1.0 - std::ldexp(1.0, -k);
                double sn = ks.sup_norm(r);
                ballgeom::CarlesonBlock blk{
                    ballgeom::BallPoint::axis(cfg.n, 0, ballgeom::Complex(r, 0))};
                double ws = ballgeom::block_weight_measure(wt, blk, cfg.n);
                w.row({id, fmt12(r), fmt12(sn), fmt12(1.0 / ws), fmt12(sn * ws)});
            }
        }
    } else if (target == "mp") {
        w.row({"weight", "n", "p", "r_or_z", "lhs", "rhs", "ratio", "parseval"});
        for (auto& [id, wt] : d_weights()) {
            auto ks = kernel::KernelSeries::build(wt, cfg.n, 0.96, 1e-12, cfg.exec());
            for (double p : {1.0, 2.0}) {
                for (int i = 0; i < 10; ++i) {
                    double rho = 0.3 + (0.95 - 0.3) * i / 9.0;
                    double lhs = std::pow(norms::mp_mean_rho(ks, rho, p).value, p);
                    double rhs = norms::mp_comparison_integral(wt, rho, p, cfg.n, false).value;
                    std::string parseval;
                    if (p == 2.0) {
                        double sum = 0.0;
                        for (int k = 0; k <= ks.truncation(); ++k)
                            sum += std::exp(2.0 * ks.log_coeff(k) +
                                            2.0 * k * std::log(std::max(rho, 1e-300)) +
                                            std::lgamma(static_cast<double>(cfg.n)) +
                                            std::lgamma(k + 1.0) -
                                            std::lgamma(static_cast<double>(cfg.n + k)));
                        parseval = fmt12(sum);
                    }
                    w.row({id, std::to_string(cfg.n), fmt12(p), fmt12(rho), fmt12(lhs), fmt12(rhs),
                           fmt12(lhs / rhs), parseval});
                }
            }
        }
    } else if (target == "carleson") {
        w.row({"mu", "omega", "p", "q", "abs_a", "ratio"});
        auto grid = RadialGrid::dyadic(cfg.kmax_quad);
        for (double beta : {0.0, 1.0, 2.0})
            for (double alpha : {0.0, 1.0, 2.0}) {
                auto mu = weights::RadialWeight::power(beta);
                auto om = weights::RadialWeight::power(alpha);
                for (auto& [a, ratio] : norms::carleson_curve(mu, om, 2.0, 2.0, cfg.n, grid))
                    w.row({mu.name(), om.name(), "2", "2", fmt12(a), fmt12(ratio)});
            }
    } else if (target == "gj") {
        w.row({"pair", "j", "r_j", "ratio", "h_pow"});
        for (const auto& pair : config::corpus_pairs(cfg)) {
            auto rep = criteria::decide(pair, RadialGrid::dyadic(cfg.kmax_closed), cfg.exec());
            for (const auto& s : rep.gj)
                w.row({pair.id, std::to_string(s.j), fmt12(s.r_j), fmt12(s.ratio),
                       fmt12(s.h_pow)});
        }
    } else {
        std::cerr << "unknown sweep target: " << target << "\n";
        return 2;
    }
    report::write_file(cfg.out_dir + "/sweep_" + target + ".csv", csv.str());
    std::cout << "wrote " << cfg.out_dir << "/sweep_" << target << ".csv\n";
    return 0;
}

int cmd_criteria(const config::RunConfig& cfg) {
    std::ostringstream csv;
    report::CsvWriter w(csv);
    w.row({"pair_id", "M", "N", "Kstar", "verdict", "oracle_verdict", "agree"});
    auto grid = RadialGrid::dyadic(cfg.kmax_closed);
    for (const auto& pair : config::corpus_pairs(cfg)) {
        auto rep = criteria::decide(pair, grid, cfg.exec());
        report::write_file(cfg.out_dir + "/criteria_" + pair.id + ".json",
                           report::to_json(rep).dump(2) + "\n");
        std::string oracle, agree = "true";
        bool both_power = pair.omega.family() == weights::Family::Power &&
                          pair.upsilon.family() == weights::Family::Power;
        if (both_power) {
            bool b = pair.p * (pair.omega.param_alpha() + 1.0) > pair.upsilon.param_alpha() + 1.0;
            oracle = b ? "bounded" : "unbounded";
            agree = (oracle == criteria::to_string(rep.verdict)) ? "true" : "false";
        }
        w.row({pair.id, fmt12(rep.m_sup), fmt12(rep.n_sup), fmt12(rep.kstar_sup),
               criteria::to_string(rep.verdict), oracle, agree});
        std::cout << pair.id << ": " << criteria::to_string(rep.verdict)
                  << (oracle.empty() ? "" : (agree == "true" ? " (oracle agrees)" : " (ORACLE MISMATCH)"))
                  << "\n";
    }
    report::write_file(cfg.out_dir + "/criteria_summary.csv", csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Bergman kernel estimates and projection boundedness criteria"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir, suite = "all", target = "kernel-norm";
    int n_override = 0;
    bool serial = false;

    app.add_option("--config", config_path, "configuration file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--n", n_override, "ambient dimension override (1..4)");
    app.add_flag("--serial", serial, "use the serial reference path");

    auto* classify = app.add_subcommand("classify", "classify the weight corpus");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "kernel|norms|projection|criteria|all");
    auto* sweep = app.add_subcommand("sweep", "emit curve data for offline plotting");
    sweep->add_option("--target", target, "kernel-norm|mp|carleson|gj");
    auto* criteria_cmd = app.add_subcommand("criteria", "run the weight-pair corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config::RunConfig cfg =
            config_path.empty() ? config::default_config() : config::parse_config_file(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (n_override != 0) cfg.n = n_override;
        if (serial) cfg.threads = 1;
        if (cfg.n < 1 || cfg.n > 4) throw DomainError("n must lie in [1,4]");

        if (classify->parsed()) return cmd_classify(cfg);
        if (verify->parsed()) return cmd_verify(cfg, suite);
        if (sweep->parsed()) return cmd_sweep(cfg, target);
        if (criteria_cmd->parsed()) return cmd_criteria(cfg);
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
