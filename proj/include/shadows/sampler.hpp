// Copyright 2026 The shadows Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "shadows/protocol.hpp"
#include "shadows/rng.hpp"
#include "shadows/snapshot.hpp"
#include "shadows/state.hpp"

namespace shadows {

// Reproducibility contract for one shot, given master seed S and shot index
// t. A fresh stream Rng(shot_seed(S, t)) is consumed in this exact order:
//   1. scramblers: qubits in ascending order; each scrambled qubit draws
//      bounded(24); skipped qubits draw nothing and record index 0.
//   2. readout, by backend:
//        stabilizer       one bit per qubit, ascending, drawn only when the
//                         outcome is random (deterministic outcomes consume
//                         nothing);
//        dense            one uniform double;
//        maximally mixed  one bit per qubit, ascending.
// Identical (spec, state, S, t) therefore yields identical snapshots no
// matter how shots are batched across workers.
inline Snapshot sample_snapshot(const ProtocolSpec& spec,
                                const QuantumState& state,
                                std::uint64_t master_seed,
                                std::uint64_t shot_index) {
  const std::size_t n = spec.covering.num_qubits();
  Rng rng(shot_seed(master_seed, shot_index));

  Snapshot snap;
  snap.index = shot_index;
  snap.scramblers.resize(n, 0);
  for (std::size_t q = 0; q < n; ++q)
    if (spec.qubit_scrambled(q))
      snap.scramblers[q] =
          rng.bounded(static_cast<std::uint32_t>(kNumCliffords));

  snap.outcome.assign((n + 63) / 64, 0);
  if (std::holds_alternative<MaximallyMixed>(state)) {
    // unitary-invariant: readout is uniform regardless of the circuit
    for (std::size_t q = 0; q < n; ++q)
      snap.outcome[q >> 6] |= static_cast<std::uint64_t>(rng.bit())
                              << (q & 63);
    return snap;
  }

  Circuit meas = measurement_circuit(spec);
  if (const auto* st = std::get_if<StabilizerState>(&state)) {
    if (!spec.is_clifford())
      throw guard_error(
          "sample_snapshot: non-Clifford protocol on the stabilizer backend; "
          "convert the state to dense first");
    StabilizerState work = *st;
    for (std::size_t q = 0; q < n; ++q)
      work.apply_clifford1(q, snap.scramblers[q]);
    work.apply_circuit(meas);
    std::uint64_t bits = work.measure_all(rng);
    snap.outcome[0] = bits;
    return snap;
  }

  DenseState work = std::get<DenseState>(state);
  for (std::size_t q = 0; q < n; ++q)
    if (snap.scramblers[q] != 0)
      work.apply_matrix1(q, clifford_table()[snap.scramblers[q]].u);
  work.apply_circuit(meas);
  snap.outcome[0] = work.sample_outcome(rng);
  return snap;
}

// Generates `shots` snapshots. The work is split across `workers` threads in
// contiguous chunks writing to pre-sized slots, so output is byte-identical
// for every worker count. A stabilizer state driven through a non-Clifford
// protocol is converted to dense once, up front.
inline SnapshotDataset sample_dataset(const ProtocolSpec& spec,
                                      const QuantumState& state,
                                      std::uint64_t master_seed,
                                      std::size_t shots,
                                      std::size_t workers = 1,
                                      std::string state_label = {}) {
  spec.validate();
  if (state_num_qubits(state) != spec.covering.num_qubits())
    throw std::invalid_argument("sample_dataset: qubit count mismatch");

  const QuantumState* base = &state;
  QuantumState converted{MaximallyMixed{0}};
  if (!spec.is_clifford() && std::holds_alternative<StabilizerState>(state)) {
    converted = state_to_dense(state);
    base = &converted;
  }

  SnapshotDataset ds{spec, master_seed, std::move(state_label), {}};
  ds.snapshots.resize(shots);
  parallel_for_chunks(shots, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t)
      ds.snapshots[t] = sample_snapshot(spec, *base, master_seed, t);
  });
  return ds;
}

}  // namespace shadows
