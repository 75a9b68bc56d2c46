// Copyright 2026 The dualsim Authors
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

#pragma once

#include <string>
#include <utility>

#include "dualsim/operators.hpp"
#include "dualsim/scenario.hpp"
#include "dualsim/state.hpp"

namespace dualsim {

// Composite initial state: the amplitude profile over system outcomes with
// every pointer in its ready level. Pure scenarios give the superposition
// vector, mixed scenarios the incoherent mixture with weights |a_i|^2.
DynamicalComponent build_initial_state(const MeasurementScenario& scenario);
StateVector build_initial_pure(const MeasurementScenario& scenario);
DensityMatrix build_initial_mixed(const MeasurementScenario& scenario);

// Finished premeasurement coupling for one observer: conditioned on system
// outcome k, every pointer cell is cyclically shifted from ready to level
// k+1, establishing the outcome correlation. An optional s_final_map is
// applied to the system afterwards. The result is unitary by construction.
Operator build_premeasurement_unitary(const MeasurementScenario& scenario,
                                      const std::string& observer);

// Exact inverse of a premeasurement coupling.
Operator build_reversal_unitary(const Operator& premeasurement);

// Interference witness for a binary system and the given observer: the
// cross-branch operator |s_1, level 1><s_2, level 2| + h.c. (levels taken on
// every pointer cell), identity on all other factors. Its expectation is
// 2 Re(a_1* a_2) on the entangled premeasured vector and 0 on the
// corresponding mixture, which is what makes the two operationally
// distinguishable in principle.
Operator build_interference_observable(const MeasurementScenario& scenario,
                                       const std::string& observer);
// Same, for the first observer.
Operator build_interference_observable(const MeasurementScenario& scenario);

// Premeasurement couplings (U_O, U_O') for a scenario with exactly two
// observers measuring in sequence.
std::pair<Operator, Operator> build_two_observer_chain(const MeasurementScenario& scenario);

// Scenario with every observer's pointer replicated over `df_count`
// identical cells. df_count = 1 returns the scenario unchanged; growth is
// bounded by the scenario's dimension cap.
MeasurementScenario expand_pointer_dfs(const MeasurementScenario& scenario, int df_count);

// Projector onto record value j of one observer: every cell of that observer
// sits at level j (j = 0 is ready). Identity on other factors.
Operator pointer_outcome_projector(const MeasurementScenario& scenario,
                                   const std::string& observer, int outcome);

// Pointer reading observable Q = sum_j q_j P_j (ready reads 0).
Operator pointer_observable(const MeasurementScenario& scenario, const std::string& observer);

// Free Hamiltonian from the scenario's spec; zero if none was given.
Operator free_hamiltonian_operator(const MeasurementScenario& scenario);

// Hermitian interaction generator H with exp(-i H duration) equal to the
// observer's premeasurement coupling, for scenarios in hamiltonian mode.
// Synthesized exactly from the coupling's cyclic-shift eigenstructure.
Operator interaction_hamiltonian(const MeasurementScenario& scenario,
                                 const std::string& observer, double duration);

}  // namespace dualsim
