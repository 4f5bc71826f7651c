// Copyright 2026 The phaseop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the phaseop library.

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phaseop/analytic.h"
#include "phaseop/experiment.h"
#include "phaseop/graph6.h"
#include "phaseop/maxcut.h"
#include "phaseop/optimizer.h"
#include "phaseop/simulator.h"
#include "phaseop/strategies.h"
#include "phaseop/summary.h"

using namespace phaseop;
using nlohmann::json;

namespace {

std::string partition_string(const std::vector<bool> &partition) {
    std::string out;
    for (bool side : partition) {
        out.push_back(side ? '1' : '0');
    }
    return out;
}

void write_or_print(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA MaxCut with custom phase operators"};
    app.require_subcommand(1);

    std::string graph_text;
    std::string op_text;
    double gamma = 0;
    double beta = 0;
    std::size_t depth = 1;
    std::vector<double> angles;
    std::size_t starts = 100;
    std::uint64_t seed = 0;
    std::size_t max_instances = 10;
    std::string strategy;
    std::string config_path;
    std::string output_path;
    std::string metadata_path;
    std::string input_path;
    std::string quartiles_path;
    std::string percent_path;

    auto *maxcut_cmd = app.add_subcommand("maxcut", "Exact maximum cut of a graph6 graph");
    maxcut_cmd->add_option("graph", graph_text, "graph6 string")->required();

    auto *eval_cmd = app.add_subcommand("eval-p1", "Closed-form single-layer expectation");
    eval_cmd->add_option("--graph", graph_text, "cost graph (graph6)")->required();
    eval_cmd->add_option("--operator", op_text, "phase-operator graph (graph6)")->required();
    eval_cmd->add_option("--gamma", gamma)->required();
    eval_cmd->add_option("--beta", beta)->required();

    auto *sim_cmd = app.add_subcommand("simulate", "Statevector expectation at depth p");
    sim_cmd->add_option("--graph", graph_text, "cost graph (graph6)")->required();
    sim_cmd->add_option("--operator", op_text, "phase-operator graph (graph6)")->required();
    sim_cmd->add_option("--p", depth)->required()->check(CLI::PositiveNumber);
    sim_cmd->add_option("--angles", angles, "gamma_1..gamma_p,beta_1..beta_p")->required()->delimiter(',');

    auto *opt_cmd = app.add_subcommand("optimize", "Multi-start angle optimization");
    opt_cmd->add_option("--graph", graph_text, "cost graph (graph6)")->required();
    opt_cmd->add_option("--operator", op_text, "phase-operator graph (graph6)")->required();
    opt_cmd->add_option("--p", depth)->required()->check(CLI::PositiveNumber);
    opt_cmd->add_option("--starts", starts)->check(CLI::PositiveNumber);
    opt_cmd->add_option("--seed", seed);

    auto *gen_cmd = app.add_subcommand("gen-ops", "Generate phase-operator graphs, one graph6 per line");
    gen_cmd->add_option("--graph", graph_text, "cost graph (graph6)")->required();
    gen_cmd->add_option("--strategy", strategy, "e.g. random, sub-1/2, tr-all, mder-1")->required();
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--max", max_instances)->check(CLI::PositiveNumber);

    auto *exp_cmd = app.add_subcommand("experiment", "Run a batch experiment from a JSON config");
    exp_cmd->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    exp_cmd->add_option("--output", output_path, "records CSV (default: stdout)");
    exp_cmd->add_option("--metadata", metadata_path, "run metadata JSON (default: <output>.meta.json)");

    auto *sum_cmd = app.add_subcommand("summarize", "Summary tables from a records CSV");
    sum_cmd->add_option("--input", input_path)->required()->check(CLI::ExistingFile);
    sum_cmd->add_option("--quartiles", quartiles_path, "quartile table CSV (default: stdout)");
    sum_cmd->add_option("--percent-better", percent_path, "percent-better table CSV (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*maxcut_cmd) {
            Graph g = parse_graph6(graph_text);
            CutResult cut = max_cut(g);
            std::cout << json{{"value", cut.value}, {"partition", partition_string(cut.partition)}}.dump() << "\n";
        } else if (*eval_cmd) {
            Graph g = parse_graph6(graph_text);
            Graph op = parse_graph6(op_text);
            std::cout << json{{"expectation", total_expectation(g, op, Angles1{gamma, beta})}}.dump() << "\n";
        } else if (*sim_cmd) {
            Graph g = parse_graph6(graph_text);
            Graph op = parse_graph6(op_text);
            if (angles.size() != 2 * depth) {
                throw std::invalid_argument("--angles needs 2p = " + std::to_string(2 * depth) + " values");
            }
            double value = qaoa_expectation(g, op, AngleSchedule::from_flat(angles));
            std::cout << json{{"expectation", value}}.dump() << "\n";
        } else if (*opt_cmd) {
            Graph g = parse_graph6(graph_text);
            Graph op = parse_graph6(op_text);
            OptimizeConfig cfg;
            cfg.n_starts = starts;
            cfg.seed = seed;
            OptimizeResult r = optimize(g, op, depth, cfg);
            int cut = max_cut(g).value;
            json out{{"best_value", r.best_value},
                     {"maxcut", cut},
                     {"approximation_ratio", cut > 0 ? r.best_value / cut : 0.0},
                     {"gammas", r.best_schedule.gammas},
                     {"betas", r.best_schedule.betas},
                     {"starts_converged", r.starts_converged},
                     {"evaluations", r.evaluations}};
            std::cout << out.dump() << "\n";
        } else if (*gen_cmd) {
            Graph g = parse_graph6(graph_text);
            StrategySpec spec = StrategySpec::parse(strategy);
            spec.seed = seed;
            spec.max_instances = max_instances;
            for (const PhaseOpInstance &inst : generate_phase_operators(g, spec)) {
                std::cout << encode_graph6(inst.operator_graph) << "\n";
            }
        } else if (*exp_cmd) {
            ExperimentConfig cfg = load_experiment_config(config_path);
            std::ofstream file;
            std::ostream *out = &std::cout;
            if (!output_path.empty() && output_path != "-") {
                file.open(output_path);
                if (!file) {
                    throw std::runtime_error("cannot write " + output_path);
                }
                out = &file;
                if (metadata_path.empty()) {
                    metadata_path = output_path + ".meta.json";
                }
            }
            if (!metadata_path.empty()) {
                write_or_print(metadata_path, experiment_metadata_json(cfg) + "\n");
            }
            *out << kRecordCsvHeader << "\n";
            run_experiment(cfg, [&](const ExperimentRecord &r) {
                write_record_csv(*out, r);
                out->flush();
            });
        } else if (*sum_cmd) {
            std::ifstream in(input_path);
            std::vector<ExperimentRecord> records = read_records_csv(in);
            SummaryStats stats = summarize(records);
            std::ostringstream quartiles;
            std::ostringstream percent;
            write_quartile_table(quartiles, stats);
            write_percent_better_table(percent, stats);
            if (quartiles_path.empty() && percent_path.empty()) {
                std::cout << quartiles.str() << "\n" << percent.str();
            } else {
                write_or_print(quartiles_path, quartiles.str());
                write_or_print(percent_path, percent.str());
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
