#include "bergman/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bergman/special.hpp"

namespace bergman::report {

std::string fmt12(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    bool need_quotes = false;
    for (char c : s) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            need_quotes = true;
            break;
        }
    }
    if (!need_quotes) return s;
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ',';
        os_ << csv_escape(cells[i]);
    }
    os_ << "\r\n";
}

namespace {

nlohmann::json num_or_string(double v) {
    if (std::isinf(v) || std::isnan(v)) return fmt12(v);
    // round to 12 significant digits for diffable reports
    return std::stod(fmt12(v));
}

nlohmann::json curve_json(const std::vector<double>& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : c) arr.push_back(num_or_string(v));
    return arr;
}

} // namespace

nlohmann::json to_json(const weights::WeightClassReport& rep) {
    nlohmann::json j;
    j["doubling_constant"] = num_or_string(rep.doubling_constant);
    if (rep.reverse_doubling) {
        j["reverse_doubling"] = {{"C", num_or_string(rep.reverse_doubling->first)},
                                 {"K", num_or_string(rep.reverse_doubling->second)}};
    } else {
        j["reverse_doubling"] = nullptr;
    }
    j["regular_ratio_band"] = {{"lo", num_or_string(rep.regular_ratio_band.first)},
                               {"hi", num_or_string(rep.regular_ratio_band.second)}};
    j["rapid_increase"] = rep.rapid_increase;
    j["exponent_a"] = num_or_string(rep.exponent_a);
    j["exponent_b"] = num_or_string(rep.exponent_b);
    j["power_envelope_ok"] = rep.power_envelope_ok;
    j["verdicts"] = {{"dhat", weights::to_string(rep.dhat)},
                     {"dcheck", weights::to_string(rep.dcheck)},
                     {"d", weights::to_string(rep.d)},
                     {"regular", weights::to_string(rep.regular)},
                     {"rapidly_increasing", weights::to_string(rep.rapidly_increasing)}};
    return j;
}

nlohmann::json to_json(const criteria::CriterionReport& rep) {
    nlohmann::json j;
    j["pair_id"] = rep.pair_id;
    j["caveat_not_d"] = rep.caveat_not_d;
    j["inner_divergent"] = rep.inner_divergent;
    j["grid_r"] = curve_json(rep.grid_r);
    j["m_curve"] = curve_json(rep.m_curve);
    j["n_curve"] = curve_json(rep.n_curve);
    j["kstar_curve"] = curve_json(rep.kstar_curve);
    j["h_curve"] = curve_json(rep.h_curve);
    j["M"] = num_or_string(rep.m_sup);
    j["N"] = num_or_string(rep.n_sup);
    j["Kstar"] = num_or_string(rep.kstar_sup);
    j["finite"] = {{"M", rep.m_finite}, {"N", rep.n_finite}, {"Kstar", rep.kstar_finite}};
    j["verdict"] = criteria::to_string(rep.verdict);
    nlohmann::json gj = nlohmann::json::array();
    for (const auto& s : rep.gj)
        gj.push_back({{"j", s.j},
                      {"r_j", num_or_string(s.r_j)},
                      {"ratio", num_or_string(s.ratio)},
                      {"h_pow", num_or_string(s.h_pow)}});
    j["gj"] = gj;
    j["gj_empirical_c"] = num_or_string(rep.gj_empirical_c);
    j["equivalence_consistent"] = rep.equivalence_consistent;
    j["gj_consistent"] = rep.gj_consistent;
    return j;
}

void write_file(const std::string& path, const std::string& contents) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw EstimationError("cannot write file: " + path);
    out << contents;
}

} // namespace bergman::report
