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
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadows/channel.hpp"
#include "shadows/covering.hpp"

namespace shadows {

// Measurement basis family applied to each non-singleton block. Singleton
// blocks are always plain scrambled-qubit (Pauli) measurements.
enum class BasisFamily { PauliLocal, Bell, TunablePhase, Ghz };

enum class ScrambleMode { AllQubits, OnePerBlock };

inline std::string family_name(BasisFamily f) {
  switch (f) {
    case BasisFamily::PauliLocal: return "pauli";
    case BasisFamily::Bell: return "bell";
    case BasisFamily::TunablePhase: return "tunable";
    case BasisFamily::Ghz: return "ghz";
  }
  throw std::logic_error("family_name: bad enum");
}

inline BasisFamily family_from_name(const std::string& s) {
  if (s == "pauli") return BasisFamily::PauliLocal;
  if (s == "bell") return BasisFamily::Bell;
  if (s == "tunable") return BasisFamily::TunablePhase;
  if (s == "ghz") return BasisFamily::Ghz;
  throw std::invalid_argument("unknown basis family: " + s);
}

struct Gate {
  enum class Kind { H, S, CX, CZ, CPhase, Clifford1 };
  Kind kind;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;      // CX control=q0 target=q1; CZ/CPhase symmetric
  double angle = 0.0;        // CPhase only
  std::uint32_t table_index = 0;  // Clifford1 only
};

using Circuit = std::vector<Gate>;

// Basis-change circuit applied to a block right before the computational
// readout (gates listed in application order, block-local qubit ids):
//   PauliLocal: nothing
//   Bell:       CZ(0,1), H(0), H(1)       measures the +-X1Z2 / +-Z1X2 pairs
//   Tunable:    CPhase(0,1,phi), H(0), H(1)
//   Ghz(n):     CX(n-2,n-1) ... CX(0,1), H(0)   [inverse GHZ preparation]
inline Circuit block_circuit(BasisFamily family, std::size_t block_size,
                             double phi = std::numbers::pi) {
  switch (family) {
    case BasisFamily::PauliLocal:
      if (block_size != 1)
        throw std::invalid_argument("block_circuit: pauli blocks have size 1");
      return {};
    case BasisFamily::Bell:
      if (block_size != 2)
        throw std::invalid_argument("block_circuit: bell blocks have size 2");
      return {{Gate::Kind::CZ, 0, 1}, {Gate::Kind::H, 0}, {Gate::Kind::H, 1}};
    case BasisFamily::TunablePhase:
      if (block_size != 2)
        throw std::invalid_argument(
            "block_circuit: tunable blocks have size 2");
      return {{Gate::Kind::CPhase, 0, 1, phi},
              {Gate::Kind::H, 0},
              {Gate::Kind::H, 1}};
    case BasisFamily::Ghz: {
      if (block_size < 2)
        throw std::invalid_argument("block_circuit: ghz blocks need size >= 2");
      Circuit c;
      for (std::size_t k = block_size - 1; k-- > 0;)
        c.push_back({Gate::Kind::CX, static_cast<std::uint32_t>(k),
                     static_cast<std::uint32_t>(k + 1)});
      c.push_back({Gate::Kind::H, 0});
      return c;
    }
  }
  throw std::logic_error("block_circuit: bad enum");
}

// A full randomized-measurement protocol: a covering, the basis family for
// its blocks, and how scramblers are assigned.
struct ProtocolSpec {
  Covering covering;
  BasisFamily family = BasisFamily::Bell;
  double phi = std::numbers::pi;  // TunablePhase only
  ScrambleMode scramble = ScrambleMode::AllQubits;
  std::string name;  // optional human label

  void validate() const {
    for (const auto& b : covering.blocks()) {
      switch (family) {
        case BasisFamily::PauliLocal:
          if (b.size() != 1)
            throw std::invalid_argument(
                "ProtocolSpec: pauli protocol needs singleton blocks");
          break;
        case BasisFamily::Bell:
        case BasisFamily::TunablePhase:
          if (b.size() > 2)
            throw std::invalid_argument(
                "ProtocolSpec: pair protocols allow blocks of size <= 2");
          break;
        case BasisFamily::Ghz:
          break;
      }
    }
    if (family == BasisFamily::TunablePhase &&
        !(phi >= -1e-12 && phi <= std::numbers::pi + 1e-12))
      throw std::invalid_argument("ProtocolSpec: phi outside [0, pi]");
    if (scramble == ScrambleMode::OnePerBlock &&
        !(family == BasisFamily::Bell || family == BasisFamily::PauliLocal))
      throw std::invalid_argument(
          "ProtocolSpec: one-per-block scrambling is only valid for bell");
  }

  // Every gate Clifford: Bell, Pauli, GHZ always; tunable only at the two
  // endpoint angles (exact doubles).
  bool is_clifford() const {
    if (family != BasisFamily::TunablePhase) return true;
    return phi == 0.0 || phi == std::numbers::pi;
  }

  bool qubit_scrambled(std::size_t q) const {
    if (scramble == ScrambleMode::AllQubits) return true;
    std::size_t bi = covering.block_of(q);
    return covering.blocks()[bi].front() == q;
  }

  std::string label() const {
    if (!name.empty()) return name;
    std::string l = family_name(family);
    if (family == BasisFamily::TunablePhase)
      l += "(phi=" + format_double(phi) + ")";
    if (scramble == ScrambleMode::OnePerBlock) l += "/one-per-block";
    return l;
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"family", family_name(family)},
                     {"covering", covering.to_json()},
                     {"num_qubits", covering.num_qubits()},
                     {"scramble", scramble == ScrambleMode::AllQubits
                                      ? "all"
                                      : "one-per-block"}};
    if (family == BasisFamily::TunablePhase) j["phi"] = phi;
    if (!name.empty()) j["name"] = name;
    return j;
  }

  static ProtocolSpec from_json(const nlohmann::json& j) {
    std::size_t n = j.at("num_qubits").get<std::size_t>();
    ProtocolSpec spec{Covering::from_json(n, j.at("covering")),
                      family_from_name(j.at("family").get<std::string>())};
    if (j.contains("phi")) spec.phi = j.at("phi").get<double>();
    if (j.contains("scramble"))
      spec.scramble = j.at("scramble").get<std::string>() == "one-per-block"
                          ? ScrambleMode::OnePerBlock
                          : ScrambleMode::AllQubits;
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    spec.validate();
    return spec;
  }
};

// Gates of the whole measurement layer (after scramblers), block circuits
// mapped onto global qubit ids.
inline Circuit measurement_circuit(const ProtocolSpec& spec) {
  Circuit all;
  for (const auto& block : spec.covering.blocks()) {
    if (block.size() == 1) continue;  // singleton: computational readout
    for (Gate g : block_circuit(spec.family, block.size(), spec.phi)) {
      g.q0 = block[g.q0];
      g.q1 = g.kind == Gate::Kind::H || g.kind == Gate::Kind::S ||
                     g.kind == Gate::Kind::Clifford1
                 ? g.q1
                 : block[g.q1];
      all.push_back(g);
    }
  }
  return all;
}

// Eigenvalue tables for every block of the protocol. Singleton blocks are
// scrambled-qubit measurements; pairs take the family table; larger blocks
// are GHZ-type.
inline ChannelEigenvalues protocol_eigenvalues(const ProtocolSpec& spec) {
  spec.validate();
  ChannelEigenvalues eigs;
  for (const auto& block : spec.covering.blocks()) {
    if (block.size() == 1) {
      eigs.blocks.push_back(pauli_block_eigs());
      continue;
    }
    switch (spec.family) {
      case BasisFamily::Bell:
        eigs.blocks.push_back(bell_block_eigs());
        break;
      case BasisFamily::TunablePhase:
        eigs.blocks.push_back(tunable_block_eigs(delta_from_phi(spec.phi)));
        break;
      case BasisFamily::Ghz:
        eigs.blocks.push_back(ghz_block_eigs(block.size()));
        break;
      case BasisFamily::PauliLocal:
        throw std::logic_error("protocol_eigenvalues: unreachable");
    }
  }
  return eigs;
}

}  // namespace shadows
