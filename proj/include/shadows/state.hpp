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

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "shadows/dense.hpp"
#include "shadows/rng.hpp"
#include "shadows/stabilizer.hpp"

namespace shadows {

// The maximally mixed state I / 2^n. Invariant under every unitary, so the
// sampler never applies circuits to it.
struct MaximallyMixed {
  std::size_t num_qubits;
};

using QuantumState = std::variant<StabilizerState, DenseState, MaximallyMixed>;

inline std::size_t state_num_qubits(const QuantumState& s) {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, MaximallyMixed>)
      return v.num_qubits;
    else
      return v.num_qubits();
  }, s);
}

inline std::string state_backend_name(const QuantumState& s) {
  if (std::holds_alternative<StabilizerState>(s)) return "stabilizer";
  if (std::holds_alternative<DenseState>(s)) return "dense";
  return "maximally-mixed";
}

// tr(rho P)
inline double state_expectation(const QuantumState& s, const PauliString& p) {
  if (const auto* st = std::get_if<StabilizerState>(&s))
    return static_cast<double>(st->expectation(p));
  if (const auto* d = std::get_if<DenseState>(&s))
    return d->expectation(p).real();
  return p.is_identity() ? static_cast<double>(p.sign()) : 0.0;
}

inline DenseState state_to_dense(const QuantumState& s) {
  if (const auto* st = std::get_if<StabilizerState>(&s)) return st->to_dense();
  if (const auto* d = std::get_if<DenseState>(&s)) return *d;
  throw guard_error("state_to_dense: maximally mixed state has no pure form");
}

inline const std::vector<std::string>& state_preset_names() {
  static const std::vector<std::string> names{
      "computational-zero", "product-plus",      "ghz",
      "cluster-1d",         "random-stabilizer", "random-dense",
      "maximally-mixed"};
  return names;
}

// Named initial states. `seed` only matters for the random presets.
inline QuantumState prepare_preset(const std::string& name, std::size_t n,
                                   std::uint64_t seed = 0) {
  if (n == 0) throw guard_error("prepare_preset: need >= 1 qubit");
  if (name == "computational-zero") return StabilizerState(n);
  if (name == "product-plus") {
    StabilizerState st(n);
    for (std::size_t q = 0; q < n; ++q) st.h(q);
    return st;
  }
  if (name == "ghz") {
    StabilizerState st(n);
    st.h(0);
    for (std::size_t q = 0; q + 1 < n; ++q) st.cx(q, q + 1);
    return st;
  }
  if (name == "cluster-1d") {
    // ring graph state; the wrap-around edge only exists once n >= 3
    StabilizerState st(n);
    for (std::size_t q = 0; q < n; ++q) st.h(q);
    for (std::size_t q = 0; q + 1 < n; ++q) st.cz(q, q + 1);
    if (n >= 3) st.cz(n - 1, 0);
    return st;
  }
  if (name == "random-stabilizer") {
    StabilizerState st(n);
    Rng rng(mix64(seed ^ 0x517abf1e5ULL));
    for (std::size_t layer = 0; layer < n + 2; ++layer) {
      for (std::size_t q = 0; q < n; ++q)
        st.apply_clifford1(q, rng.bounded(24));
      for (std::size_t q = layer % 2; q + 1 < n; q += 2)
        if (rng.bit()) st.cx(q, q + 1);
      if (n > 1) st.cx(rng.bounded(static_cast<std::uint32_t>(n - 1)), n - 1);
    }
    return st;
  }
  if (name == "random-dense") {
    // Haar-distributed via normalized complex gaussians (Box-Muller)
    DenseState d(n);
    Rng rng(mix64(seed ^ 0xd15ea5edULL));
    for (auto& a : d.amplitudes()) {
      double u1 = rng.uniform(), u2 = rng.uniform();
      while (u1 <= 1e-300) u1 = rng.uniform();
      double r = std::sqrt(-2.0 * std::log(u1));
      a = {r * std::cos(2.0 * std::numbers::pi * u2),
           r * std::sin(2.0 * std::numbers::pi * u2)};
    }
    double nrm = std::sqrt(d.norm_sq());
    for (auto& a : d.amplitudes()) a /= nrm;
    return d;
  }
  if (name == "maximally-mixed") return MaximallyMixed{n};
  throw std::invalid_argument("unknown state preset: " + name);
}

}  // namespace shadows
