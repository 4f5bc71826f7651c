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

#include "phaseop/simulator.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "phaseop/lbfgs.h"
#include "phaseop/maxcut.h"

namespace phaseop {

namespace {

void check_qubits(std::size_t n) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxVertices) + "]");
    }
}

std::vector<std::uint8_t> cut_table(const Graph &g) {
    std::vector<std::uint8_t> table(std::size_t{1} << g.num_vertices());
    for (std::uint32_t z = 0; z < table.size(); ++z) {
        table[z] = static_cast<std::uint8_t>(cut_value(g, z));
    }
    return table;
}

void apply_phase_table(Statevector &state, std::span<const std::uint8_t> cuts, std::size_t max_cut, double gamma) {
    std::vector<Amplitude> factors(max_cut + 1);
    for (std::size_t k = 0; k <= max_cut; ++k) {
        factors[k] = std::polar(1.0, -gamma * static_cast<double>(k));
    }
    auto amps = state.amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) {
        amps[z] *= factors[cuts[z]];
    }
}

}  // namespace

Statevector::Statevector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubits(num_qubits);
    if (amplitudes_.size() != std::size_t{1} << num_qubits) {
        throw std::invalid_argument("expected 2^" + std::to_string(num_qubits) + " amplitudes, got " +
                                    std::to_string(amplitudes_.size()));
    }
}

double Statevector::norm_squared() const {
    double total = 0;
    for (const Amplitude &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void AngleSchedule::validate() const {
    if (gammas.empty() || gammas.size() != betas.size()) {
        throw std::invalid_argument("angle schedule needs equal, nonzero numbers of gammas and betas (got " +
                                    std::to_string(gammas.size()) + " and " + std::to_string(betas.size()) + ")");
    }
}

std::vector<double> AngleSchedule::flat() const {
    std::vector<double> out(gammas);
    out.insert(out.end(), betas.begin(), betas.end());
    return out;
}

AngleSchedule AngleSchedule::from_flat(std::span<const double> values) {
    if (values.empty() || values.size() % 2 != 0) {
        throw std::invalid_argument("flat angle list must have even, nonzero length");
    }
    std::size_t p = values.size() / 2;
    return AngleSchedule{{values.begin(), values.begin() + p}, {values.begin() + p, values.end()}};
}

Statevector initial_state(std::size_t num_qubits) {
    check_qubits(num_qubits);
    std::size_t dim = std::size_t{1} << num_qubits;
    return Statevector(num_qubits, std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)))));
}

void apply_phase(Statevector &state, const Graph &op_graph, double gamma) {
    if (op_graph.num_vertices() != state.num_qubits()) {
        throw std::invalid_argument("operator graph size does not match qubit count");
    }
    apply_phase_table(state, cut_table(op_graph), op_graph.num_edges(), gamma);
}

void apply_mixer(Statevector &state, double beta) {
    const Amplitude c(std::cos(beta), 0);
    const Amplitude s(0, -std::sin(beta));
    auto amps = state.amplitudes();
    for (std::size_t q = 0; q < state.num_qubits(); ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t z = 0; z < amps.size(); ++z) {
            if (z & bit) {
                continue;
            }
            const Amplitude a0 = amps[z];
            const Amplitude a1 = amps[z | bit];
            amps[z] = c * a0 + s * a1;
            amps[z | bit] = s * a0 + c * a1;
        }
    }
}

QaoaCircuit::QaoaCircuit(const Graph &cost_graph, const Graph &op_graph)
    : num_qubits_(cost_graph.num_vertices()),
      num_cost_edges_(cost_graph.num_edges()),
      num_op_edges_(op_graph.num_edges()) {
    if (op_graph.num_vertices() != num_qubits_) {
        throw std::invalid_argument("cost graph has " + std::to_string(num_qubits_) +
                                    " vertices but operator graph has " + std::to_string(op_graph.num_vertices()));
    }
    auto cost = cut_table(cost_graph);
    cost_cut_.assign(cost.begin(), cost.end());
    op_cut_ = cut_table(op_graph);
}

Statevector QaoaCircuit::prepare(const AngleSchedule &schedule) const {
    schedule.validate();
    Statevector state = initial_state(num_qubits_);
    for (std::size_t layer = 0; layer < schedule.depth(); ++layer) {
        apply_phase_table(state, op_cut_, num_op_edges_, schedule.gammas[layer]);
        apply_mixer(state, schedule.betas[layer]);
    }
    return state;
}

double QaoaCircuit::expectation(const AngleSchedule &schedule) const {
    Statevector state = prepare(schedule);
    auto amps = state.amplitudes();
    double total = 0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        total += std::norm(amps[z]) * cost_cut_[z];
    }
    return total;
}

double qaoa_expectation(const Graph &cost_graph, const Graph &op_graph, const AngleSchedule &schedule) {
    return QaoaCircuit(cost_graph, op_graph).expectation(schedule);
}

std::vector<double> gradient(const Graph &cost_graph, const Graph &op_graph, const AngleSchedule &schedule) {
    schedule.validate();
    QaoaCircuit circuit(cost_graph, op_graph);
    auto f = [&](std::span<const double> x) { return circuit.expectation(AngleSchedule::from_flat(x)); };
    return central_gradient(f, schedule.flat(), kGradientStep);
}

}  // namespace phaseop
