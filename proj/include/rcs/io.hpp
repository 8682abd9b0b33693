/**
 * File formats.
 *
 *   complex       {"n": int, "k": int, "faces": [[v0,...,vk], ...]}
 *                 faces sorted ascending, vertices 0-based
 *   growth order  {"n": int, "k": int, "order": [rank, ...]}
 *   report        config echo + per-trial records + aggregates
 *   trial CSV     trial,beta,isolated,m1,m2,m3  (RFC 4180, LF endings,
 *                 blank where the mode does not compute a statistic)
 *   survey JSONL  one CocycleSurveyRecord object per line
 *
 * Report serialization is byte-deterministic for a fixed (config, seed);
 * the wall-time field is the one execution-dependent value and can be
 * suppressed via include_wall_time = false.
 */
#pragma once

#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rcs/complex.hpp"
#include "rcs/harness.hpp"
#include "rcs/oracle.hpp"

namespace rcs {

inline nlohmann::json complex_to_json(const SimplicialComplexK& y) {
    validate_complex(y);
    nlohmann::json faces = nlohmann::json::array();
    BinomialTable bt(y.n, y.k + 1);
    std::vector<Vertex> buf(static_cast<std::size_t>(y.k) + 1);
    for (FaceRank r : y.kfaces) {
        face_unrank_into(r, y.k + 1, y.n, buf, bt);
        faces.push_back(buf);
    }
    return {{"n", y.n}, {"k", y.k}, {"faces", std::move(faces)}};
}

inline SimplicialComplexK complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("faces"))
        throw std::invalid_argument("complex: expected object with n, k, faces");
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    std::vector<FaceRank> ranks;
    for (const auto& jf : j.at("faces")) {
        const Face f = jf.get<Face>();
        if (static_cast<int>(f.size()) != k + 1)
            throw std::invalid_argument("complex: face has wrong vertex count");
        ranks.push_back(face_rank(f, n));
    }
    // make_complex sorts; duplicate faces surface as a validation error
    return make_complex(n, k, std::move(ranks));
}

inline nlohmann::json growth_order_to_json(const GrowthOrder& g) {
    validate_growth_order(g);
    return {{"n", g.n}, {"k", g.k}, {"order", g.order}};
}

inline GrowthOrder growth_order_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("order"))
        throw std::invalid_argument("growth order: expected object with n, k, order");
    GrowthOrder g{j.at("n").get<int>(), j.at("k").get<int>(),
                  j.at("order").get<std::vector<FaceRank>>()};
    validate_growth_order(g);
    return g;
}

inline nlohmann::json report_to_json(const ExperimentReport& rep, bool include_wall_time = true) {
    nlohmann::json cfg{{"mode", mode_name(rep.mode)},
                       {"n", rep.n},
                       {"k", rep.k},
                       {"trials", rep.trials},
                       {"master_seed", rep.master_seed}};
    cfg["c"] = rep.c ? nlohmann::json(*rep.c) : nlohmann::json(nullptr);
    nlohmann::json j{{"config", std::move(cfg)}};

    const bool sampled = rep.mode == ExperimentMode::BettiDist ||
                         rep.mode == ExperimentMode::IsolatedDist;
    if (sampled) {
        j["p"] = rep.p;
        j["p_clamped"] = rep.p_clamped;
        j["c_equivalent"] = rep.c_equivalent;
        j["histogram"] = rep.histogram;
        j["mean"] = rep.mean;
        j["variance"] = rep.variance;
        j["poisson_lambda"] = rep.poisson_lambda;
        j["lambda_exact"] = rep.lambda_exact;
        j["lambda_gap"] = rep.lambda_gap;
        j["sigma_binomial"] = rep.sigma_binomial;
        j["sigma_exact"] = rep.sigma_exact;
        j["tv_distance"] = rep.tv_distance;
        j["factorial_moments"] = rep.factorial_moments;
        j["mean_isolated"] = rep.mean_isolated;
    }
    if (rep.mode == ExperimentMode::BettiDist) {
        j["p_beta_zero"] = rep.p_beta_zero;
        j["predicted_vanish"] = rep.predicted_vanish;
        j["freq_beta_eq_isolated"] = rep.freq_beta_eq_isolated;
        j["beta_lt_isolated_trials"] = rep.beta_lt_isolated_trials;
        j["mismatch_trials"] = rep.mismatch_trials;
    }
    if (rep.mode == ExperimentMode::Hitting) {
        j["freq12"] = rep.freq12;
        j["freq123"] = rep.freq123;
        j["ordering_violations"] = rep.ordering_violations;
        j["m1_mean"] = rep.m1_mean;
        j["m1_min"] = rep.m1_min;
        j["m1_max"] = rep.m1_max;
        j["window_center"] = rep.window_center;
        j["m1_mean_over_window"] = rep.m1_mean_over_window;
    }
    if (rep.mode == ExperimentMode::VanishSweep) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : rep.sweep_rows)
            rows.push_back({{"c", r.c},
                            {"p", r.p},
                            {"p_clamped", r.p_clamped},
                            {"trials", r.trials},
                            {"p_beta_zero", r.p_beta_zero},
                            {"predicted_vanish", r.predicted_vanish},
                            {"mean_beta", r.mean_beta},
                            {"mean_isolated", r.mean_isolated}});
        j["sweep"] = std::move(rows);
    }
    if (rep.mode == ExperimentMode::OracleCheck) {
        j["oracle_instances"] = rep.oracle_instances;
        j["oracle_mismatches"] = rep.oracle_mismatches;
        j["conn_instances"] = rep.conn_instances;
        j["conn_zero_beta"] = rep.conn_zero_beta;
        j["conn_violations"] = rep.conn_violations;
    }

    if (rep.mode != ExperimentMode::VanishSweep && rep.mode != ExperimentMode::OracleCheck) {
        nlohmann::json trials = nlohmann::json::array();
        for (const auto& r : rep.trial_records) {
            nlohmann::json t{{"trial", r.trial}};
            if (r.beta >= 0) t["beta"] = r.beta;
            if (r.isolated >= 0) t["isolated"] = r.isolated;
            if (r.m1 >= 0) {
                t["m1"] = r.m1;
                t["m2"] = r.m2;
                t["m3"] = r.m3;
            }
            trials.push_back(std::move(t));
        }
        j["trial_records"] = std::move(trials);
    }
    if (include_wall_time) j["wall_time_ms"] = rep.wall_time_ms;
    return j;
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open for reading: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void write_trials_csv(std::ostream& out, const ExperimentReport& rep) {
    out << "trial,beta,isolated,m1,m2,m3\n";
    auto cell = [](std::int64_t v) { return v < 0 ? std::string() : std::to_string(v); };
    for (const auto& r : rep.trial_records)
        out << r.trial << ',' << cell(r.beta) << ',' << cell(r.isolated) << ',' << cell(r.m1)
            << ',' << cell(r.m2) << ',' << cell(r.m3) << '\n';
}

inline void write_survey_jsonl(std::ostream& out, std::span<const CocycleSurveyRecord> records) {
    for (const auto& r : records) {
        nlohmann::json j{{"support_size", r.support_size},
                         {"max_degree", r.max_degree},
                         {"x_count", r.x_count},
                         {"num_nontrivial_components", r.num_nontrivial_components},
                         {"is_minimal_in_coset", r.is_minimal_in_coset},
                         {"is_min_support_overall", r.is_min_support_overall}};
        out << j.dump() << '\n';
    }
}

}  // namespace rcs
