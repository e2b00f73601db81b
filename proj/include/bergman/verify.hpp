#pragma once

#include <string>
#include <vector>

#include "bergman/config.hpp"

namespace bergman::verify {

struct CheckRow {
    std::string id;
    std::string lemma_tag;
    double value = 0.0; // worst observed metric
    double band = 0.0;  // the pinned threshold it must stay within
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

// kernel suite
CheckRow check_kernel_golden(const config::RunConfig& cfg);
CheckRow check_lemma31_bands(const config::RunConfig& cfg);

// norms suite
CheckRow check_lemma32_band(const config::RunConfig& cfg);
CheckRow check_littlewood_paley(const config::RunConfig& cfg);
CheckRow check_parseval(const config::RunConfig& cfg);
CheckRow check_theorem_a_sanity(const config::RunConfig& cfg);
CheckRow check_theorem_a_power_slopes(const config::RunConfig& cfg);

// projection suite
CheckRow check_reproducing(const config::RunConfig& cfg);
CheckRow check_adjoint_anchor(const config::RunConfig& cfg);
CheckRow check_adjoint_paper_constant(const config::RunConfig& cfg);
CheckRow check_linfty_bloch_sup(const config::RunConfig& cfg);
CheckRow check_montecarlo_agreement(const config::RunConfig& cfg);

// criteria suite
CheckRow check_classifier_truth_table(const config::RunConfig& cfg);
CheckRow check_power_oracle(const config::RunConfig& cfg);
std::vector<criteria::CriterionReport> run_pair_corpus(const config::RunConfig& cfg);
CheckRow check_equivalence_consistency(const std::vector<criteria::CriterionReport>& reports);
CheckRow check_gj_chain(const std::vector<criteria::CriterionReport>& reports);
CheckRow check_schur(const config::RunConfig& cfg);

// suite: kernel | norms | projection | criteria | all
std::vector<CheckRow> run_suite(const std::string& suite, const config::RunConfig& cfg);

} // namespace bergman::verify
