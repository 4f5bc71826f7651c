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

#include "phaseop/experiment.h"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "phaseop/maxcut.h"
#include "phaseop/seeding.h"

namespace phaseop {

namespace {

using nlohmann::json;

// Tags separating the seed streams derived from the master seed.
constexpr std::uint64_t kGenerationTag = 0x67656e;
constexpr std::uint64_t kSubsampleTag = 0x737562;
constexpr std::uint64_t kHighDepthTag = 0x686967;

void reject_unknown_keys(const json &object, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (const auto &item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw std::invalid_argument("unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

std::vector<StrategySpec> with_standard_first(std::vector<StrategySpec> specs) {
    std::vector<StrategySpec> out{StrategySpec{}};
    std::set<std::string> names{"standard"};
    for (StrategySpec &s : specs) {
        if (s.kind == StrategyKind::Standard) {
            continue;
        }
        if (!names.insert(s.name()).second) {
            throw std::invalid_argument("strategy '" + s.name() + "' listed twice");
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string sanitize(std::string text) {
    std::replace_if(text.begin(), text.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; }, ' ');
    return text;
}

// Uniform subset of `size` items, returned in ascending order.
std::vector<std::size_t> seeded_subset(std::vector<std::size_t> items, std::size_t size, std::uint64_t seed) {
    if (size == 0 || size >= items.size()) {
        return items;
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < size; ++i) {
        std::swap(items[i], items[i + uniform_index(rng, items.size() - i)]);
    }
    items.resize(size);
    std::sort(items.begin(), items.end());
    return items;
}

AngleSchedule pad_schedule(const AngleSchedule &schedule, std::size_t p) {
    AngleSchedule out = schedule;
    out.gammas.resize(p, 0.0);
    out.betas.resize(p, 0.0);
    return out;
}

ExperimentRecord error_record(std::size_t graph_index, const Graph6Entry &entry, const std::string &strategy,
                              std::size_t instance, std::size_t p, int maxcut, const std::string &message) {
    ExperimentRecord r;
    r.graph_index = graph_index;
    r.graph6 = entry.text;
    r.strategy = strategy;
    r.instance_index = instance;
    r.p = p;
    r.maxcut = maxcut;
    r.status = "error: " + sanitize(message);
    return r;
}

std::vector<ExperimentRecord> evaluate_graph(const ExperimentConfig &cfg, const std::vector<StrategySpec> &strategies,
                                             std::size_t graph_index, const Graph6Entry &entry, bool high_depth) {
    std::vector<ExperimentRecord> out;
    std::vector<std::size_t> depths;
    for (std::size_t p : cfg.depths) {
        if (p == 1 || high_depth) {
            depths.push_back(p);
        }
    }

    const Graph &g = entry.graph;
    const int maxcut = max_cut(g).value;
    for (const StrategySpec &base : strategies) {
        const std::string name = base.name();
        if (maxcut == 0) {
            for (std::size_t p : depths) {
                out.push_back(error_record(graph_index, entry, name, 0, p, 0, "graph has no edges"));
            }
            continue;
        }
        StrategySpec spec = base;
        spec.max_instances = cfg.max_instances;
        spec.seed = generation_seed(cfg.master_seed, graph_index, name);
        std::vector<PhaseOpInstance> instances;
        try {
            instances = generate_phase_operators(g, spec);
        } catch (const std::exception &e) {
            for (std::size_t p : depths) {
                out.push_back(error_record(graph_index, entry, name, 0, p, maxcut, e.what()));
            }
            continue;
        }

        for (const PhaseOpInstance &instance : instances) {
            std::optional<AngleSchedule> previous;
            for (std::size_t p : depths) {
                const std::uint64_t seed = task_seed(cfg.master_seed, graph_index, name, instance.instance_index, p);
                OptimizeConfig ocfg = cfg.optimizer;
                ocfg.seed = seed;
                if (p >= 2) {
                    ocfg.n_starts = cfg.high_depth_starts;
                }
                if (cfg.warm_start_depths && previous && previous->depth() < p) {
                    ocfg.warm_starts.push_back(pad_schedule(*previous, p));
                }
                try {
                    OptimizeResult best = optimize(g, instance.operator_graph, p, ocfg);
                    ExperimentRecord r;
                    r.graph_index = graph_index;
                    r.graph6 = entry.text;
                    r.strategy = name;
                    r.instance_index = instance.instance_index;
                    r.p = p;
                    r.maxcut = maxcut;
                    r.operator_edges = instance.operator_graph.num_edges();
                    r.best_expectation = best.best_value;
                    r.approximation_ratio = best.best_value / maxcut;
                    r.best_angles = best.best_schedule.flat();
                    r.seed_used = seed;
                    out.push_back(std::move(r));
                    previous = best.best_schedule;
                } catch (const std::exception &e) {
                    out.push_back(error_record(graph_index, entry, name, instance.instance_index, p, maxcut, e.what()));
                }
            }
        }
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string &line, std::size_t fields) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (out.size() + 1 < fields) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    out.push_back(line.substr(start));
    return out;
}

double parse_double(const std::string &text) {
    char *end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw std::invalid_argument("bad number '" + text + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string &text) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw std::invalid_argument("bad integer '" + text + "'");
    }
    return v;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (strategies.empty()) {
        throw std::invalid_argument("experiment needs at least one strategy");
    }
    if (depths.empty()) {
        throw std::invalid_argument("experiment needs at least one depth");
    }
    for (std::size_t p : depths) {
        if (p < 1) {
            throw std::invalid_argument("depths must be positive");
        }
    }
    if (parallelism < 1) {
        throw std::invalid_argument("parallelism must be at least 1");
    }
    if (max_instances < 1) {
        throw std::invalid_argument("max_instances must be at least 1");
    }
    if (high_depth_starts < 1) {
        throw std::invalid_argument("high_depth_starts must be at least 1");
    }
    optimizer.validate();
}

ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path &base_dir) {
    json doc = json::parse(json_text);
    if (!doc.is_object()) {
        throw std::invalid_argument("experiment config must be a JSON object");
    }
    reject_unknown_keys(doc,
                        {"input_path", "strategies", "depths", "optimizer", "master_seed", "parallelism",
                         "connected_only", "max_instances", "subsample", "high_depth_subsample", "high_depth_starts",
                         "warm_start_depths"},
                        "experiment config");

    ExperimentConfig cfg;
    std::filesystem::path input = doc.at("input_path").get<std::string>();
    cfg.input_path = input.is_relative() && !base_dir.empty() ? base_dir / input : input;

    std::vector<StrategySpec> specs;
    for (const auto &name : doc.at("strategies")) {
        specs.push_back(StrategySpec::parse(name.get<std::string>()));
    }
    if (specs.empty()) {
        throw std::invalid_argument("experiment needs at least one strategy");
    }
    cfg.strategies = with_standard_first(std::move(specs));
    cfg.depths = doc.at("depths").get<std::vector<std::size_t>>();
    std::sort(cfg.depths.begin(), cfg.depths.end());
    cfg.depths.erase(std::unique(cfg.depths.begin(), cfg.depths.end()), cfg.depths.end());

    if (doc.contains("optimizer")) {
        const json &opt = doc["optimizer"];
        reject_unknown_keys(opt, {"n_starts", "max_iterations", "gradient_tolerance", "analytic_p1"},
                            "optimizer config");
        cfg.optimizer.n_starts = opt.value("n_starts", cfg.optimizer.n_starts);
        cfg.optimizer.max_iterations = opt.value("max_iterations", cfg.optimizer.max_iterations);
        cfg.optimizer.gradient_tolerance = opt.value("gradient_tolerance", cfg.optimizer.gradient_tolerance);
        cfg.optimizer.analytic_p1 = opt.value("analytic_p1", cfg.optimizer.analytic_p1);
    }
    cfg.master_seed = doc.value("master_seed", cfg.master_seed);
    cfg.parallelism = doc.value("parallelism", cfg.parallelism);
    cfg.connected_only = doc.value("connected_only", cfg.connected_only);
    cfg.max_instances = doc.value("max_instances", cfg.max_instances);
    cfg.subsample = doc.value("subsample", cfg.subsample);
    cfg.high_depth_subsample = doc.value("high_depth_subsample", cfg.high_depth_subsample);
    cfg.high_depth_starts = doc.value("high_depth_starts", cfg.high_depth_starts);
    cfg.warm_start_depths = doc.value("warm_start_depths", cfg.warm_start_depths);
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path.string());
    }
    std::stringstream text;
    text << in.rdbuf();
    return parse_experiment_config(text.str(), path.parent_path());
}

std::string experiment_metadata_json(const ExperimentConfig &cfg) {
    json strategies = json::array();
    for (const StrategySpec &s : cfg.strategies) {
        strategies.push_back(s.name());
    }
    json doc = {
        {"input_path", cfg.input_path.string()},
        {"strategies", strategies},
        {"depths", cfg.depths},
        {"optimizer",
         {{"method", "L-BFGS, strong Wolfe line search, central-difference gradient"},
          {"gradient_step", kGradientStep},
          {"n_starts", cfg.optimizer.n_starts},
          {"max_iterations", cfg.optimizer.max_iterations},
          {"gradient_tolerance", cfg.optimizer.gradient_tolerance},
          {"analytic_p1", cfg.optimizer.analytic_p1},
          {"angle_box", {{"gamma", "[0, 2pi)"}, {"beta", "[0, pi)"}}},
          {"initialization", "uniform over angle box"}}},
        {"master_seed", cfg.master_seed},
        {"parallelism", cfg.parallelism},
        {"connected_only", cfg.connected_only},
        {"max_instances", cfg.max_instances},
        {"draws_per_instance", kDrawsPerInstance},
        {"subsample", cfg.subsample},
        {"high_depth_subsample", cfg.high_depth_subsample},
        {"high_depth_starts", cfg.high_depth_starts},
        {"warm_start_depths", cfg.warm_start_depths},
        {"percent_better", {{"comparison", "strict"}, {"tie_tolerance", 1e-9}}},
    };
    return doc.dump(2);
}

void write_record_csv(std::ostream &out, const ExperimentRecord &r) {
    std::string angles;
    for (std::size_t i = 0; i < r.best_angles.size(); ++i) {
        angles += fmt::format("{}{:.17g}", i ? ";" : "", r.best_angles[i]);
    }
    out << fmt::format("{},{},{},{},{},{},{},{:.17g},{:.17g},{},{},{}\n", r.graph_index, r.graph6, r.strategy,
                       r.instance_index, r.p, r.maxcut, r.operator_edges, r.best_expectation, r.approximation_ratio,
                       angles, r.seed_used, sanitize(r.status));
}

std::vector<ExperimentRecord> read_records_csv(std::istream &in) {
    std::vector<ExperimentRecord> out;
    std::string line;
    if (!std::getline(in, line) || line != kRecordCsvHeader) {
        throw std::invalid_argument("records CSV must start with the header line: " + std::string(kRecordCsvHeader));
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto fields = split_csv_line(line, 12);
        if (fields.size() != 12) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 12 columns");
        }
        try {
            ExperimentRecord r;
            r.graph_index = parse_u64(fields[0]);
            r.graph6 = fields[1];
            r.strategy = fields[2];
            r.instance_index = parse_u64(fields[3]);
            r.p = parse_u64(fields[4]);
            r.maxcut = static_cast<int>(parse_u64(fields[5]));
            r.operator_edges = parse_u64(fields[6]);
            r.best_expectation = parse_double(fields[7]);
            r.approximation_ratio = parse_double(fields[8]);
            std::stringstream angles(fields[9]);
            for (std::string item; std::getline(angles, item, ';');) {
                r.best_angles.push_back(parse_double(item));
            }
            r.seed_used = parse_u64(fields[10]);
            r.status = fields[11];
            out.push_back(std::move(r));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

GraphSelection select_graphs(const ExperimentConfig &cfg, const std::vector<Graph6Entry> &corpus) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!cfg.connected_only || corpus[i].graph.connected()) {
            eligible.push_back(i);
        }
    }
    GraphSelection selection;
    selection.all = seeded_subset(eligible, cfg.subsample, derive_seed({cfg.master_seed, kSubsampleTag}));
    selection.high_depth =
        seeded_subset(selection.all, cfg.high_depth_subsample, derive_seed({cfg.master_seed, kHighDepthTag}));
    return selection;
}

std::uint64_t generation_seed(std::uint64_t master_seed, std::size_t graph_index, std::string_view strategy) {
    return derive_seed({master_seed, graph_index, stable_hash(strategy), kGenerationTag});
}

std::uint64_t task_seed(std::uint64_t master_seed, std::size_t graph_index, std::string_view strategy,
                        std::size_t instance_index, std::size_t p) {
    return derive_seed({master_seed, graph_index, stable_hash(strategy), instance_index, p});
}

void run_experiment(const ExperimentConfig &cfg, const std::vector<Graph6Entry> &corpus, const RecordSink &sink) {
    cfg.validate();
    const std::vector<StrategySpec> strategies = with_standard_first(cfg.strategies);
    const GraphSelection selection = select_graphs(cfg, corpus);
    const std::set<std::size_t> high_depth(selection.high_depth.begin(), selection.high_depth.end());

    auto evaluate = [&](std::size_t slot) {
        const std::size_t index = selection.all[slot];
        try {
            return evaluate_graph(cfg, strategies, index, corpus[index], high_depth.contains(index));
        } catch (const std::exception &e) {
            return std::vector<ExperimentRecord>{
                error_record(index, corpus[index], "standard", 0, cfg.depths.front(), 0, e.what())};
        }
    };

    const std::size_t n = selection.all.size();
    const std::size_t workers = std::min(cfg.parallelism, n);
    if (workers <= 1) {
        for (std::size_t slot = 0; slot < n; ++slot) {
            for (const ExperimentRecord &r : evaluate(slot)) {
                sink(r);
            }
        }
        return;
    }

    std::vector<std::optional<std::vector<ExperimentRecord>>> done(n);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t slot; (slot = next.fetch_add(1)) < n;) {
                auto records = evaluate(slot);
                std::lock_guard lock(mutex);
                done[slot] = std::move(records);
                ready.notify_all();
            }
        });
    }
    for (std::size_t slot = 0; slot < n; ++slot) {
        std::vector<ExperimentRecord> records;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return done[slot].has_value(); });
            records = std::move(*done[slot]);
            done[slot].reset();
        }
        for (const ExperimentRecord &r : records) {
            sink(r);
        }
    }
}

void run_experiment(const ExperimentConfig &cfg, const RecordSink &sink) {
    run_experiment(cfg, read_graph6_file(cfg.input_path), sink);
}

}  // namespace phaseop
