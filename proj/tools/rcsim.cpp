// rcsim: Monte Carlo experiments on random k-dimensional complexes.
//
// Subcommands: betti, isolated, hitting, sweep, oracle-check, generate.
// Exit codes: 0 success, 2 config error, 3 capacity error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "rcs/harness.hpp"
#include "rcs/io.hpp"
#include "rcs/oracle.hpp"
#include "rcs/process.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitCapacityError = 3;

struct CommonOpts {
    int n = 0;
    int k = 2;
    std::uint64_t trials = 1;
    std::uint64_t seed = 42;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    std::string out;
    std::string csv;
    std::optional<double> c;
    std::optional<double> p;
};

void add_sampling_opts(CLI::App* cmd, CommonOpts& o, bool needs_rate) {
    cmd->add_option("--n", o.n, "vertex count")->required();
    cmd->add_option("--k", o.k, "complex dimension (k-faces are sampled)")
        ->capture_default_str();
    cmd->add_option("--trials", o.trials, "number of trials")->capture_default_str();
    cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
    cmd->add_option("--threads", o.threads, "worker threads")->capture_default_str();
    cmd->add_option("--out", o.out, "write the JSON report here (default: stdout)");
    cmd->add_option("--csv", o.csv, "write per-trial CSV (trial,beta,isolated,m1,m2,m3) here");
    if (needs_rate) {
        auto* c_opt = cmd->add_option("--c", o.c, "window parameter, p = (k log n + c)/n");
        cmd->add_option("--p", o.p, "explicit face probability (overrides --c)")->excludes(c_opt);
    }
}

std::vector<double> parse_c_grid(const std::string& spec) {
    double start = 0, end = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &end, &step) != 3 || step <= 0)
        throw std::invalid_argument("bad --c-grid, expected start:end:step with step > 0");
    std::vector<double> grid;
    for (double c = start; c <= end + 1e-9; c += step) grid.push_back(c);
    if (grid.empty()) throw std::invalid_argument("--c-grid produced no points");
    return grid;
}

void emit_report(const rcs::ExperimentReport& rep, const CommonOpts& o) {
    const nlohmann::json j = rcs::report_to_json(rep);
    if (!o.csv.empty()) {
        std::ofstream csv(o.csv, std::ios::binary);
        if (!csv) throw std::invalid_argument("cannot open for writing: " + o.csv);
        rcs::write_trials_csv(csv, rep);
    }
    if (o.out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    rcs::write_json_file(o.out, j);
    std::cout << rcs::mode_name(rep.mode) << ": n=" << rep.n << " k=" << rep.k
              << " trials=" << rep.trials << " -> " << o.out << " (" << rep.wall_time_ms
              << " ms)\n";
}

rcs::ExperimentConfig to_config(const CommonOpts& o, rcs::ExperimentMode mode) {
    rcs::ExperimentConfig cfg;
    cfg.mode = mode;
    cfg.n = o.n;
    cfg.k = o.k;
    cfg.trials = o.trials;
    cfg.master_seed = o.seed;
    cfg.c = o.c;
    cfg.p_override = o.p;
    cfg.threads = std::max(1, o.threads);
    return cfg;
}

void write_traces(const CommonOpts& o, const std::string& trace_dir) {
    std::filesystem::create_directories(trace_dir);
    for (std::uint64_t i = 0; i < o.trials; ++i) {
        rcs::SplitMix64 rng(rcs::trial_seed(o.seed, i));
        const rcs::GrowthOrder g = rcs::sample_growth_order(o.n, o.k, rng);
        std::ofstream out(trace_dir + "/trace_" + std::to_string(i) + ".csv", std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write traces in " + trace_dir);
        out << "m,isolated_count,num_components,rank\n";
        rcs::run_hitting_times(g, true,
                               [&](std::uint64_t m, std::uint64_t iso, std::uint64_t comps,
                                   std::uint64_t rank) {
                                   out << m << ',' << iso << ',' << comps << ',' << rank << '\n';
                               });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random k-complex simulator: Z/2 cohomology, hypergraph connectivity, "
                 "and hitting times of the growth process"};
    app.require_subcommand(1);

    CommonOpts betti_o, isolated_o, hitting_o, sweep_o, generate_o;
    std::string dump_dir, trace_dir, c_grid_spec;
    CommonOpts oracle_o;
    int oracle_n_min = 4, oracle_n_max = 6;

    auto* betti = app.add_subcommand("betti", "distribution of beta^{k-1} over Y(n,p) trials");
    add_sampling_opts(betti, betti_o, true);
    betti->add_option("--dump-mismatch", dump_dir,
                      "directory for complexes with beta != isolated count");

    auto* isolated = app.add_subcommand("isolated", "distribution of the isolated-face count");
    add_sampling_opts(isolated, isolated_o, true);

    auto* hitting = app.add_subcommand("hitting", "hitting times M1, M2, M3 of the growth process");
    add_sampling_opts(hitting, hitting_o, false);
    hitting->add_option("--c", hitting_o.c, "window parameter for the reported scale only");
    hitting->add_option("--trace-dir", trace_dir,
                        "also write per-trial traces (m,isolated_count,num_components,rank)");

    auto* sweep = app.add_subcommand("sweep", "vanishing probability across a grid of c values");
    add_sampling_opts(sweep, sweep_o, false);
    sweep->add_option("--c-grid", c_grid_spec, "grid as start:end:step, e.g. -2:2:0.5")->required();

    auto* oracle = app.add_subcommand("oracle-check",
                                      "cross-check betti_top against the exhaustive oracle");
    std::string survey_out;
    int survey_n = 5;
    oracle->add_option("--n-min", oracle_n_min, "smallest n")->capture_default_str();
    oracle->add_option("--n-max", oracle_n_max, "largest n")->capture_default_str();
    oracle->add_option("--trials", oracle_o.trials, "total instance budget")->capture_default_str();
    oracle->add_option("--seed", oracle_o.seed, "master seed")->capture_default_str();
    oracle->add_option("--out", oracle_o.out, "write the JSON report here");
    oracle->add_option("--survey-out", survey_out,
                       "also write a minimal-cocycle survey (JSON lines) over sampled complexes");
    oracle->add_option("--survey-n", survey_n, "vertex count for the survey")->capture_default_str();

    auto* generate = app.add_subcommand("generate", "sample one Y(n,p) and write it as JSON");
    generate->add_option("--n", generate_o.n, "vertex count")->required();
    generate->add_option("--k", generate_o.k, "complex dimension")->capture_default_str();
    auto* gc = generate->add_option("--c", generate_o.c, "window parameter");
    generate->add_option("--p", generate_o.p, "explicit face probability")->excludes(gc);
    generate->add_option("--seed", generate_o.seed, "seed")->capture_default_str();
    generate->add_option("--out", generate_o.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (betti->parsed()) {
            rcs::ExperimentConfig cfg = to_config(betti_o, rcs::ExperimentMode::BettiDist);
            if (!dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                cfg.mismatch_sink = [&](std::uint64_t trial, const rcs::SimplicialComplexK& y) {
                    rcs::write_json_file(dump_dir + "/mismatch_trial_" + std::to_string(trial) +
                                             ".json",
                                         rcs::complex_to_json(y));
                };
            }
            emit_report(rcs::run_experiment(cfg), betti_o);
        } else if (isolated->parsed()) {
            emit_report(rcs::run_experiment(to_config(isolated_o, rcs::ExperimentMode::IsolatedDist)),
                        isolated_o);
        } else if (hitting->parsed()) {
            emit_report(rcs::run_experiment(to_config(hitting_o, rcs::ExperimentMode::Hitting)),
                        hitting_o);
            if (!trace_dir.empty()) write_traces(hitting_o, trace_dir);
        } else if (sweep->parsed()) {
            rcs::ExperimentConfig cfg = to_config(sweep_o, rcs::ExperimentMode::VanishSweep);
            cfg.c_grid = parse_c_grid(c_grid_spec);
            emit_report(rcs::run_experiment(cfg), sweep_o);
        } else if (oracle->parsed()) {
            rcs::ExperimentConfig cfg;
            cfg.mode = rcs::ExperimentMode::OracleCheck;
            cfg.trials = std::max<std::uint64_t>(oracle_o.trials, 54);
            cfg.master_seed = oracle_o.seed;
            cfg.oracle_n_min = oracle_n_min;
            cfg.oracle_n_max = oracle_n_max;
            const rcs::ExperimentReport rep = rcs::run_experiment(cfg);
            if (!oracle_o.out.empty())
                rcs::write_json_file(oracle_o.out, rcs::report_to_json(rep));
            else
                std::cout << rcs::report_to_json(rep).dump(2) << '\n';
            if (!survey_out.empty()) {
                std::ofstream sout(survey_out, std::ios::binary);
                if (!sout) throw std::invalid_argument("cannot open for writing: " + survey_out);
                for (int t = 0; t < 10; ++t) {
                    rcs::SplitMix64 rng(rcs::trial_seed(oracle_o.seed, 1000 + t));
                    const auto y = rcs::sample_ynp(survey_n, 2, (t + 1) / 11.0, rng);
                    const auto records = rcs::minimal_cocycle_survey(y);
                    rcs::write_survey_jsonl(sout, records);
                }
            }
            if (rep.oracle_mismatches > 0 || rep.conn_violations > 0) {
                std::cerr << "oracle-check: " << rep.oracle_mismatches << " betti mismatches, "
                          << rep.conn_violations << " connectivity violations\n";
                return 1;
            }
        } else if (generate->parsed()) {
            double p;
            if (generate_o.p) {
                p = *generate_o.p;
            } else if (generate_o.c) {
                p = rcs::window_p(generate_o.n, generate_o.k, *generate_o.c);
            } else {
                throw std::invalid_argument("generate: need --p or --c");
            }
            rcs::SplitMix64 rng(generate_o.seed);
            const rcs::SimplicialComplexK y = rcs::sample_ynp(generate_o.n, generate_o.k, p, rng);
            const nlohmann::json j = rcs::complex_to_json(y);
            if (!generate_o.out.empty())
                rcs::write_json_file(generate_o.out, j);
            else
                std::cout << j.dump(2) << '\n';
        }
    } catch (const rcs::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacityError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
