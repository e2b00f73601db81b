#include "bergman/config.hpp"

#include <fstream>
#include <sstream>

#include "bergman/special.hpp"

namespace bergman::config {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// split on commas at paren depth zero (weight specs carry inner commas)
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

std::optional<bool> parse_yesno(const std::string& v) {
    if (v == "yes" || v == "true" || v == "1") return true;
    if (v == "no" || v == "false" || v == "0") return false;
    return std::nullopt;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            if (section != "weights" && section != "pairs" && section != "expect")
                throw DomainError("config line " + std::to_string(lineno) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        if (section.empty()) {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
            std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            try {
                if (key == "n") cfg.n = std::stoi(val);
                else if (key == "seed") cfg.seed = std::stoull(val);
                else if (key == "mc_samples") cfg.mc_samples = std::stoll(val);
                else if (key == "kmax_closed") cfg.kmax_closed = std::stoi(val);
                else if (key == "kmax_quad") cfg.kmax_quad = std::stoi(val);
                else if (key == "quadrature_tol") cfg.quadrature_tol = std::stod(val);
                else if (key == "series_tol") cfg.series_tol = std::stod(val);
                else if (key == "band_lemma31") cfg.band_lemma31 = std::stod(val);
                else if (key == "band_lemma32") cfg.band_lemma32 = std::stod(val);
                else if (key == "band_comparability") cfg.band_comparability = std::stod(val);
                else if (key == "threads") cfg.threads = std::stoi(val);
                else if (key == "out_dir") cfg.out_dir = val;
                else throw DomainError("unknown key '" + key + "'");
            } catch (const DomainError&) {
                throw;
            } catch (const std::exception&) {
                throw DomainError("config line " + std::to_string(lineno) + ": bad value for '" +
                                  key + "'");
            }
            if (cfg.n < 1 || cfg.n > 4)
                throw DomainError("config: n must lie in [1,4]");
            if (cfg.quadrature_tol <= 0 || cfg.series_tol <= 0 || cfg.band_lemma31 <= 0 ||
                cfg.band_lemma32 <= 0 || cfg.band_comparability <= 0)
                throw DomainError("config: tolerances and bands must be positive");
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected id: entry");
        std::string id = trim(line.substr(0, colon));
        std::string body = trim(line.substr(colon + 1));
        if (section == "weights") {
            weights::parse_weight(body); // validate now
            cfg.weight_specs.emplace_back(id, body);
        } else if (section == "pairs") {
            PairSpec ps;
            ps.id = id;
            for (const auto& item : split_top_level(body)) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw DomainError("config line " + std::to_string(lineno) +
                                      ": pair entries need key=value");
                std::string key = trim(item.substr(0, eq));
                std::string val = trim(item.substr(eq + 1));
                if (key == "omega") ps.omega_spec = val;
                else if (key == "upsilon") ps.upsilon_spec = val;
                else if (key == "p") ps.p = std::stod(val);
                else throw DomainError("config line " + std::to_string(lineno) +
                                       ": unknown pair key '" + key + "'");
            }
            if (ps.omega_spec.empty() || ps.upsilon_spec.empty() || !(ps.p > 1.0))
                throw DomainError("config line " + std::to_string(lineno) +
                                  ": pair needs omega, upsilon and p > 1");
            weights::parse_weight(ps.omega_spec);
            weights::parse_weight(ps.upsilon_spec);
            cfg.pair_specs.push_back(ps);
        } else { // expect
            ClassExpectation ex;
            std::istringstream es(body);
            std::string tok;
            while (es >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw DomainError("config line " + std::to_string(lineno) +
                                      ": expectation entries need key=value");
                std::string key = tok.substr(0, eq);
                auto v = parse_yesno(tok.substr(eq + 1));
                if (!v)
                    throw DomainError("config line " + std::to_string(lineno) +
                                      ": expectation value must be yes/no");
                if (key == "dhat") ex.dhat = v;
                else if (key == "dcheck") ex.dcheck = v;
                else if (key == "d") ex.d = v;
                else if (key == "regular" || key == "r") ex.regular = v;
                else if (key == "rapid" || key == "i") ex.rapid = v;
                else throw DomainError("config line " + std::to_string(lineno) +
                                       ": unknown expectation '" + key + "'");
            }
            cfg.expectations[id] = ex;
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

RunConfig default_config() {
    RunConfig cfg;
    cfg.weight_specs = {
        {"pw0", "power(alpha=0)"},
        {"pw1", "power(alpha=1)"},
        {"pw2", "power(alpha=2)"},
        {"pwm", "power(alpha=-0.5)"},
        {"lpr", "logpower(alpha=0,beta=-2)"},
        {"lps", "logpower(alpha=1,beta=1.5)"},
        {"lpi", "logpower(alpha=-1,beta=-2)"},
        {"exd", "expdecay(c=1,beta=1)"},
    };
    cfg.expectations["pw0"] = {true, true, true, true, false};
    cfg.expectations["pw1"] = {true, true, true, true, false};
    cfg.expectations["pw2"] = {true, true, true, true, false};
    cfg.expectations["pwm"] = {true, true, true, true, false};
    cfg.expectations["lpr"] = {true, true, true, true, false};
    cfg.expectations["lps"] = {true, true, true, true, false};
    cfg.expectations["lpi"] = {true, false, false, false, true};
    cfg.expectations["exd"] = {false, std::nullopt, false, false, false};

    // 40-pair mixed corpus: power x {power, log-power} crossings, all in D
    const char* omegas[] = {"power(alpha=-0.5)", "power(alpha=0)", "power(alpha=1)",
                            "power(alpha=2)"};
    const char* upsilons[] = {"power(alpha=0)", "power(alpha=2)", "logpower(alpha=0,beta=-2)"};
    const double ps[] = {1.25, 2.0, 4.0};
    int idx = 0;
    for (const char* om : omegas)
        for (double p : ps)
            for (const char* up : upsilons) {
                PairSpec s;
                s.id = "pair" + std::to_string(idx++);
                s.omega_spec = om;
                s.upsilon_spec = up;
                s.p = p;
                cfg.pair_specs.push_back(s);
            }
    for (auto [om, p] : std::initializer_list<std::pair<const char*, double>>{
             {"power(alpha=1)", 2.0},
             {"power(alpha=2)", 2.0},
             {"power(alpha=1)", 1.25},
             {"power(alpha=2)", 4.0}}) {
        PairSpec s;
        s.id = "pair" + std::to_string(idx++);
        s.omega_spec = om;
        s.upsilon_spec = "logpower(alpha=1,beta=1.5)";
        s.p = p;
        cfg.pair_specs.push_back(s);
    }
    return cfg;
}

weights::RadialWeight weight_by_id(const RunConfig& cfg, const std::string& id) {
    for (const auto& [wid, spec] : cfg.weight_specs)
        if (wid == id) return weights::parse_weight(spec);
    throw DomainError("no weight with id '" + id + "' in config");
}

std::vector<std::pair<std::string, weights::RadialWeight>> corpus_weights(const RunConfig& cfg) {
    std::vector<std::pair<std::string, weights::RadialWeight>> out;
    for (const auto& [id, spec] : cfg.weight_specs) out.emplace_back(id, weights::parse_weight(spec));
    return out;
}

std::vector<criteria::WeightPair> corpus_pairs(const RunConfig& cfg) {
    std::vector<criteria::WeightPair> out;
    for (const auto& ps : cfg.pair_specs) {
        criteria::WeightPair pair{weights::parse_weight(ps.omega_spec),
                                  weights::parse_weight(ps.upsilon_spec), ps.p, cfg.n, ps.id};
        out.push_back(std::move(pair));
    }
    return out;
}

} // namespace bergman::config
