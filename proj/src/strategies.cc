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

#include "phaseop/strategies.h"

#include <charconv>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "phaseop/canonical.h"
#include "phaseop/seeding.h"

namespace phaseop {

namespace {

bool parse_uint(std::string_view text, std::uint32_t &out) {
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

// Labeled upper-triangle bits; only used to skip re-canonicalizing a draw
// that repeats an earlier labeled graph exactly.
std::uint64_t labeled_key(const Graph &g) {
    if (g.num_vertices() > kMaxCanonicalVertices) {
        throw std::domain_error("deduplicated sampling supports at most " + std::to_string(kMaxCanonicalVertices) +
                                " vertices");
    }
    std::uint64_t key = 0;
    for (const Edge &e : g.edges()) {
        key |= std::uint64_t{1} << (e.v * (e.v - 1) / 2 + e.u);
    }
    return key;
}

// Draws candidate operators until max_instances isomorphism classes are found
// or the attempt budget runs out. A draw returning nullopt is discarded.
std::vector<PhaseOpInstance> sample_distinct(const StrategySpec &spec,
                                             const std::function<std::optional<Graph>(Rng &)> &draw) {
    Rng rng(spec.seed);
    std::unordered_set<std::uint64_t> labeled_seen;
    std::unordered_set<CanonicalForm> classes;
    std::vector<PhaseOpInstance> out;
    const std::size_t budget = kDrawsPerInstance * spec.max_instances;
    for (std::size_t attempt = 0; attempt < budget && out.size() < spec.max_instances; ++attempt) {
        std::optional<Graph> candidate = draw(rng);
        if (!candidate || !labeled_seen.insert(labeled_key(*candidate)).second) {
            continue;
        }
        if (classes.insert(canonical_form(*candidate)).second) {
            out.push_back({std::move(*candidate), spec, out.size()});
        }
    }
    return out;
}

// Uniform sample of `count` items without replacement (partial Fisher-Yates).
std::vector<Edge> choose_edges(std::vector<Edge> pool, std::size_t count, Rng &rng) {
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + uniform_index(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

std::vector<PhaseOpInstance> single(Graph g, const StrategySpec &spec) {
    std::vector<PhaseOpInstance> out;
    out.push_back({std::move(g), spec, 0});
    return out;
}

void require_kind(const StrategySpec &spec, std::initializer_list<StrategyKind> kinds, const char *fn) {
    for (StrategyKind k : kinds) {
        if (spec.kind == k) {
            spec.validate();
            return;
        }
    }
    throw std::invalid_argument(std::string(fn) + " does not handle strategy " + spec.name());
}

}  // namespace

std::string StrategySpec::name() const {
    switch (kind) {
        case StrategyKind::Standard:
            return "standard";
        case StrategyKind::Random:
            return "random";
        case StrategyKind::SubgraphAlpha:
            return "sub-" + std::to_string(alpha.num) + "/" + std::to_string(alpha.den);
        case StrategyKind::TRMost:
            return "tr-most";
        case StrategyKind::TRKMost:
            return "tr-" + std::to_string(k) + "most";
        case StrategyKind::TRAll:
            return "tr-all";
        case StrategyKind::TRRandom:
            return "tr-random";
        case StrategyKind::MDER:
            return "mder-" + std::to_string(k);
        case StrategyKind::MDERAll:
            return "mder-all";
    }
    throw std::logic_error("unknown strategy kind");
}

StrategySpec StrategySpec::parse(std::string_view name) {
    StrategySpec spec;
    if (name == "standard") {
        spec.kind = StrategyKind::Standard;
    } else if (name == "random") {
        spec.kind = StrategyKind::Random;
    } else if (name == "tr-most") {
        spec.kind = StrategyKind::TRMost;
    } else if (name == "tr-all") {
        spec.kind = StrategyKind::TRAll;
    } else if (name == "tr-random") {
        spec.kind = StrategyKind::TRRandom;
    } else if (name == "mder-all") {
        spec.kind = StrategyKind::MDERAll;
    } else if (name.starts_with("sub-")) {
        std::string_view frac = name.substr(4);
        auto slash = frac.find('/');
        if (slash == std::string_view::npos || !parse_uint(frac.substr(0, slash), spec.alpha.num) ||
            !parse_uint(frac.substr(slash + 1), spec.alpha.den)) {
            throw std::invalid_argument("malformed subgraph strategy '" + std::string(name) + "'");
        }
        spec.kind = StrategyKind::SubgraphAlpha;
    } else if (name.starts_with("tr-") && name.ends_with("most")) {
        if (!parse_uint(name.substr(3, name.size() - 7), spec.k)) {
            throw std::invalid_argument("malformed strategy '" + std::string(name) + "'");
        }
        spec.kind = StrategyKind::TRKMost;
    } else if (name.starts_with("mder-")) {
        if (!parse_uint(name.substr(5), spec.k)) {
            throw std::invalid_argument("malformed strategy '" + std::string(name) + "'");
        }
        spec.kind = StrategyKind::MDER;
    } else {
        throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
    }
    spec.validate();
    return spec;
}

void StrategySpec::validate() const {
    if (max_instances < 1) {
        throw std::invalid_argument("max_instances must be at least 1");
    }
    if (kind == StrategyKind::SubgraphAlpha && (alpha.num == 0 || alpha.den == 0 || alpha.num > alpha.den)) {
        throw std::invalid_argument("subgraph fraction must lie in (0, 1]");
    }
    if ((kind == StrategyKind::TRKMost || kind == StrategyKind::MDER) && k < 1) {
        throw std::invalid_argument("strategy step count must be positive");
    }
}

std::string_view strategy_family(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Standard:
            return "standard";
        case StrategyKind::Random:
            return "random";
        case StrategyKind::SubgraphAlpha:
            return "sub";
        case StrategyKind::TRMost:
        case StrategyKind::TRKMost:
        case StrategyKind::TRAll:
        case StrategyKind::TRRandom:
            return "tr";
        case StrategyKind::MDER:
        case StrategyKind::MDERAll:
            return "mder";
    }
    throw std::logic_error("unknown strategy kind");
}

std::vector<std::string> default_strategy_names() {
    return {"standard", "random",  "sub-1/4", "sub-1/3",   "sub-1/2", "sub-2/3", "sub-3/4",
            "tr-most",  "tr-2most", "tr-all", "tr-random", "mder-1",  "mder-2",  "mder-all"};
}

std::optional<Edge> most_triangle_edge(const Graph &g) {
    std::optional<Edge> best;
    std::size_t best_count = 0;
    for (const Edge &e : g.edges()) {
        std::size_t count = g.triangles_through_edge(e);
        if (count > best_count) {
            best_count = count;
            best = e;
        }
    }
    return best;
}

Vertex max_degree_vertex(const Graph &g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.num_vertices(); ++v) {
        if (g.degree(v) > g.degree(best)) {
            best = v;
        }
    }
    return best;
}

std::vector<PhaseOpInstance> gen_random(const Graph &g, const StrategySpec &spec) {
    require_kind(spec, {StrategyKind::Random}, "gen_random");
    const std::size_t m = g.num_edges();
    if (m == 0) {
        throw std::domain_error("random operator would be empty: cost graph has no edges");
    }
    Graph complete = complete_graph(g.num_vertices());
    return sample_distinct(spec, [&](Rng &rng) -> std::optional<Graph> {
        return Graph(g.num_vertices(), choose_edges(complete.edges(), m, rng));
    });
}

std::vector<PhaseOpInstance> gen_subgraph(const Graph &g, const StrategySpec &spec) {
    require_kind(spec, {StrategyKind::SubgraphAlpha}, "gen_subgraph");
    const std::size_t m = g.num_edges();
    const std::size_t count = (spec.alpha.num * m + spec.alpha.den - 1) / spec.alpha.den;
    if (count == 0) {
        throw std::domain_error("subgraph operator would be empty: ceil(alpha |E|) = 0");
    }
    return sample_distinct(spec, [&](Rng &rng) -> std::optional<Graph> {
        return Graph(g.num_vertices(), choose_edges(g.edges(), count, rng));
    });
}

std::vector<PhaseOpInstance> gen_tr(const Graph &g, const StrategySpec &spec) {
    require_kind(spec, {StrategyKind::TRMost, StrategyKind::TRKMost, StrategyKind::TRAll, StrategyKind::TRRandom},
                 "gen_tr");
    if (!g.has_triangle()) {
        return single(g, spec);
    }
    if (spec.kind == StrategyKind::TRRandom) {
        std::vector<Edge> in_triangles;
        for (const Edge &e : g.edges()) {
            if (g.triangles_through_edge(e) > 0) {
                in_triangles.push_back(e);
            }
        }
        return sample_distinct(spec, [&](Rng &rng) -> std::optional<Graph> {
            return g.without_edge(in_triangles[uniform_index(rng, in_triangles.size())]);
        });
    }

    std::size_t steps = spec.kind == StrategyKind::TRMost ? 1 : spec.k;
    Graph h = g;
    for (std::size_t step = 0; spec.kind == StrategyKind::TRAll || step < steps; ++step) {
        std::optional<Edge> e = most_triangle_edge(h);
        if (!e) {
            break;
        }
        h = h.without_edge(*e);
    }
    return single(std::move(h), spec);
}

std::vector<PhaseOpInstance> gen_mder(const Graph &g, const StrategySpec &spec) {
    require_kind(spec, {StrategyKind::MDER, StrategyKind::MDERAll}, "gen_mder");
    if (g.num_edges() == 0) {
        throw std::domain_error("max-degree edge removal needs at least one edge");
    }
    if (spec.kind == StrategyKind::MDERAll) {
        return single(g.without_vertex_edges(max_degree_vertex(g)), spec);
    }
    if (spec.k > g.num_edges()) {
        throw std::domain_error("mder-" + std::to_string(spec.k) + " removes more edges than the graph has (" +
                                std::to_string(g.num_edges()) + ")");
    }
    auto out = sample_distinct(spec, [&](Rng &rng) -> std::optional<Graph> {
        Graph h = g;
        for (std::uint32_t step = 0; step < spec.k; ++step) {
            Vertex hub = max_degree_vertex(h);
            std::vector<Edge> incident;
            for (const Edge &e : h.edges()) {
                if (e.u == hub || e.v == hub) {
                    incident.push_back(e);
                }
            }
            h = h.without_edge(incident[uniform_index(rng, incident.size())]);
        }
        if (h.num_edges() == 0) {
            return std::nullopt;
        }
        return h;
    });
    if (out.empty()) {
        throw std::domain_error("mder-" + std::to_string(spec.k) + " only produces empty operators on this graph");
    }
    return out;
}

std::vector<PhaseOpInstance> generate_phase_operators(const Graph &g, const StrategySpec &spec) {
    switch (spec.kind) {
        case StrategyKind::Standard:
            spec.validate();
            return single(g, spec);
        case StrategyKind::Random:
            return gen_random(g, spec);
        case StrategyKind::SubgraphAlpha:
            return gen_subgraph(g, spec);
        case StrategyKind::TRMost:
        case StrategyKind::TRKMost:
        case StrategyKind::TRAll:
        case StrategyKind::TRRandom:
            return gen_tr(g, spec);
        case StrategyKind::MDER:
        case StrategyKind::MDERAll:
            return gen_mder(g, spec);
    }
    throw std::logic_error("unknown strategy kind");
}

}  // namespace phaseop
