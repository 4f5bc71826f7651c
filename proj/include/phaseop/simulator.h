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

#ifndef PHASEOP_SIMULATOR_H
#define PHASEOP_SIMULATOR_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "phaseop/graph.h"

namespace phaseop {

using Amplitude = std::complex<double>;

/// Dense 2^n amplitude vector. Qubit q is bit q of the basis index, and a
/// basis index doubles as a cut assignment (bit v = side of vertex v).
class Statevector {
   public:
    /// Throws std::invalid_argument unless amplitudes.size() == 2^n.
    Statevector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    double norm_squared() const;

   private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Per-layer angles. gammas[i] and betas[i] belong to layer i + 1.
struct AngleSchedule {
    std::vector<double> gammas;
    std::vector<double> betas;

    std::size_t depth() const { return gammas.size(); }
    /// Throws std::invalid_argument unless both lists have the same nonzero length.
    void validate() const;

    /// Flat layout (gamma_1..gamma_p, beta_1..beta_p).
    std::vector<double> flat() const;
    static AngleSchedule from_flat(std::span<const double> values);
};

/// Uniform superposition, every amplitude 2^(-n/2).
Statevector initial_state(std::size_t num_qubits);

/// Multiplies the amplitude of basis state z by exp(-i gamma cut(op_graph, z)).
void apply_phase(Statevector &state, const Graph &op_graph, double gamma);

/// Applies exp(-i beta X) to every qubit.
void apply_mixer(Statevector &state, double beta);

/// Precomputed cut tables for repeated evaluation of one (cost, operator) pair.
/// Evaluation does not mutate the object, so it can be shared across threads.
class QaoaCircuit {
   public:
    QaoaCircuit(const Graph &cost_graph, const Graph &op_graph);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_cost_edges() const { return num_cost_edges_; }

    Statevector prepare(const AngleSchedule &schedule) const;
    /// Expected cut value of the cost graph in the prepared state.
    double expectation(const AngleSchedule &schedule) const;

   private:
    std::size_t num_qubits_;
    std::size_t num_cost_edges_;
    std::size_t num_op_edges_;
    std::vector<double> cost_cut_;
    std::vector<std::uint8_t> op_cut_;
};

double qaoa_expectation(const Graph &cost_graph, const Graph &op_graph, const AngleSchedule &schedule);

/// Step used for the central-difference gradient.
inline constexpr double kGradientStep = 1e-6;

/// Central-difference gradient of qaoa_expectation, ordered (gammas, betas).
std::vector<double> gradient(const Graph &cost_graph, const Graph &op_graph, const AngleSchedule &schedule);

}  // namespace phaseop

#endif
