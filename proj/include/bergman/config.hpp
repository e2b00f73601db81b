#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bergman/criteria.hpp"
#include "bergman/parallel.hpp"
#include "bergman/weights.hpp"

namespace bergman::config {

struct PairSpec {
    std::string id;
    std::string omega_spec;
    std::string upsilon_spec;
    double p = 2.0;
};

struct ClassExpectation {
    std::optional<bool> dhat, dcheck, d, regular, rapid;
};

struct RunConfig {
    int n = 2;
    std::uint64_t seed = 0x5eedbe26u;
    long long mc_samples = 10000000;
    int kmax_closed = 20; // dyadic grid depth for closed-form sweeps
    int kmax_quad = 10;   // dyadic grid depth for 2-D quadrature sweeps
    double quadrature_tol = 1e-10;
    double series_tol = 1e-10;
    double band_lemma31 = 20.0;
    double band_lemma32 = 10.0;
    double band_comparability = 50.0;
    int threads = 0; // 0: OpenMP default, 1: serial reference path
    std::string out_dir = "out";

    std::vector<std::pair<std::string, std::string>> weight_specs; // (id, spec)
    std::vector<PairSpec> pair_specs;
    std::map<std::string, ClassExpectation> expectations;

    Exec exec() const { return threads == 1 ? Exec::Serial : Exec::OpenMP; }
};

// flat key=value file with [weights] / [pairs] / [expect] sections
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// shipped corpus used when a config declares no weights/pairs
RunConfig default_config();

weights::RadialWeight weight_by_id(const RunConfig& cfg, const std::string& id);
std::vector<std::pair<std::string, weights::RadialWeight>> corpus_weights(const RunConfig& cfg);
std::vector<criteria::WeightPair> corpus_pairs(const RunConfig& cfg);

} // namespace bergman::config
