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

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadows/pauli.hpp"

namespace shadows {

// Partition of qubits 0..N-1 into disjoint measurement blocks. Sites within a
// block are kept sorted; blocks are ordered by their smallest site. The block
// list is also the JSON wire form: a list of index lists.
class Covering {
 public:
  Covering(std::size_t num_qubits,
           std::vector<std::vector<std::uint32_t>> blocks)
      : n_(num_qubits), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("Covering: empty block");
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(n_, kUnassigned);
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      for (std::uint32_t q : blocks_[bi]) {
        if (q >= n_)
          throw std::invalid_argument("Covering: site out of range");
        if (block_of_[q] != kUnassigned)
          throw std::invalid_argument("Covering: site appears twice");
        block_of_[q] = static_cast<std::uint32_t>(bi);
      }
    }
    for (std::size_t q = 0; q < n_; ++q)
      if (block_of_[q] == kUnassigned)
        throw std::invalid_argument("Covering: site not covered");
  }

  std::size_t num_qubits() const { return n_; }
  const std::vector<std::vector<std::uint32_t>>& blocks() const {
    return blocks_;
  }
  std::size_t block_of(std::size_t q) const { return block_of_.at(q); }

  std::size_t max_block_size() const {
    std::size_t m = 0;
    for (const auto& b : blocks_) m = std::max(m, b.size());
    return m;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& b : blocks_) j.push_back(b);
    return j;
  }

  static Covering from_json(std::size_t num_qubits, const nlohmann::json& j) {
    std::vector<std::vector<std::uint32_t>> blocks;
    for (const auto& b : j) blocks.push_back(b.get<std::vector<std::uint32_t>>());
    return Covering(num_qubits, std::move(blocks));
  }

  friend bool operator==(const Covering& a, const Covering& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  static constexpr std::uint32_t kUnassigned = 0xFFFFFFFF;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> blocks_;
  std::vector<std::uint32_t> block_of_;
};

// Number of blocks that the support of p intersects only partially.
inline std::size_t cut_count(const PauliString& p, const Covering& c) {
  if (p.num_qubits() != c.num_qubits())
    throw std::invalid_argument("cut_count: size mismatch");
  std::size_t cuts = 0;
  for (const auto& block : c.blocks()) {
    std::size_t inside = 0;
    for (std::uint32_t q : block)
      if (p.letter(q) != 'I') ++inside;
    if (inside != 0 && inside != block.size()) ++cuts;
  }
  return cuts;
}

inline bool is_compatible(const PauliString& p, const Covering& c) {
  return cut_count(p, c) == 0;
}

enum class Parity { Even, Odd };

// 1D chain paired as (0,1)(2,3)... (even parity) or (1,2)(3,4)... (odd).
// Leftover endpoints become singleton blocks on an open chain; with
// periodic=true the odd covering instead wraps the last site around to 0.
inline Covering dimer_chain(std::size_t num_qubits, Parity parity,
                            bool periodic = false) {
  if (num_qubits < 2)
    throw std::invalid_argument("dimer_chain: need at least two sites");
  std::vector<std::vector<std::uint32_t>> blocks;
  std::size_t start = parity == Parity::Even ? 0 : 1;
  if (start == 1) {
    if (periodic) {
      if (num_qubits % 2 != 0)
        throw std::invalid_argument(
            "dimer_chain: periodic odd covering needs an even chain");
    } else {
      blocks.push_back({0});
    }
  }
  std::size_t q = start;
  while (q + 1 < num_qubits) {
    blocks.push_back({static_cast<std::uint32_t>(q),
                      static_cast<std::uint32_t>(q + 1)});
    q += 2;
  }
  if (q < num_qubits) {
    if (periodic && start == 1)
      blocks.push_back({static_cast<std::uint32_t>(q), 0});
    else
      blocks.push_back({static_cast<std::uint32_t>(q)});
  }
  return Covering(num_qubits, std::move(blocks));
}

// 1D chain tiled with size-n blocks beginning at `offset`; leading and
// trailing remainders become singleton blocks.
inline Covering n_mer_chain(std::size_t num_qubits, std::size_t block_size,
                            std::size_t offset = 0) {
  if (block_size == 0 || block_size > num_qubits)
    throw std::invalid_argument("n_mer_chain: invalid block size");
  if (offset >= num_qubits)
    throw std::invalid_argument("n_mer_chain: offset out of range");
  std::vector<std::vector<std::uint32_t>> blocks;
  for (std::size_t q = 0; q < offset; ++q)
    blocks.push_back({static_cast<std::uint32_t>(q)});
  std::size_t q = offset;
  while (q + block_size <= num_qubits) {
    std::vector<std::uint32_t> b;
    for (std::size_t j = 0; j < block_size; ++j)
      b.push_back(static_cast<std::uint32_t>(q + j));
    blocks.push_back(std::move(b));
    q += block_size;
  }
  for (; q < num_qubits; ++q)
    blocks.push_back({static_cast<std::uint32_t>(q)});
  return Covering(num_qubits, std::move(blocks));
}

// Labeled list of same-size Pauli operators.
struct OperatorSet {
  std::vector<PauliString> operators;
  std::vector<std::string> labels;

  void validate() const {
    if (operators.size() != labels.size())
      throw std::invalid_argument("OperatorSet: label count mismatch");
    for (const auto& p : operators)
      if (p.num_qubits() != operators.front().num_qubits())
        throw std::invalid_argument("OperatorSet: mixed qubit counts");
  }

  void add(PauliString p, std::string label) {
    operators.push_back(std::move(p));
    labels.push_back(std::move(label));
  }

  std::size_t size() const { return operators.size(); }
};

// Honeycomb lattice on an L x L torus, two sites per unit cell:
// cell (r, c) holds sites A = 2*(r*L + c) and B = A + 1. Site A(r,c) bonds to
// B(r,c), B(r,c-1) and B(r-1,c). Faces are 3-colourable by (c - r) mod 3,
// which labels each edge by the colour absent from its two adjacent faces;
// the edges of one label form a perfect matching (the dimer covering for that
// `orientation`). Such a covering pairs all six vertices of every face whose
// colour differs from the orientation label, i.e. two thirds of all faces.
// The colouring only closes on the torus when L is a multiple of 3.
struct HoneycombLattice {
  std::size_t side = 0;     // L
  Covering covering;        // dimer covering for the requested orientation
  OperatorSet plaquettes;   // one weight-6 operator per face
  // face (r,c) vertex cycle, used to build plaquette operators
  std::vector<std::array<std::uint32_t, 6>> face_sites;
  std::vector<int> face_colors;
};

inline HoneycombLattice honeycomb(
    std::size_t L, int orientation,
    std::span<const char> letters = std::span<const char>()) {
  if (L < 3 || L % 3 != 0)
    throw std::invalid_argument(
        "honeycomb: side length must be a positive multiple of 3");
  if (orientation < 0 || orientation > 2)
    throw std::invalid_argument("honeycomb: orientation must be 0, 1 or 2");
  std::array<char, 6> letter_buf = {'Z', 'Z', 'Z', 'Z', 'Z', 'Z'};
  if (!letters.empty()) {
    if (letters.size() != 6)
      throw std::invalid_argument("honeycomb: need six plaquette letters");
    std::copy(letters.begin(), letters.end(), letter_buf.begin());
  }
  const std::size_t n = 2 * L * L;
  auto site_a = [&](std::size_t r, std::size_t c) {
    return static_cast<std::uint32_t>(2 * (r * L + c));
  };
  auto site_b = [&](std::size_t r, std::size_t c) {
    return static_cast<std::uint32_t>(2 * (r * L + c) + 1);
  };
  auto color = [&](std::size_t r, std::size_t c) {
    return static_cast<int>((c + 2 * r) % 3);  // == (c - r) mod 3
  };

  std::vector<std::vector<std::uint32_t>> blocks;
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      int chi = color(r, c);
      // Edge labels at A(r,c): intra-cell bond (chi+2)%3, bond to B(r,c-1)
      // chi, bond to B(r-1,c) (chi+1)%3. Exactly one matches `orientation`.
      if ((chi + 2) % 3 == orientation)
        blocks.push_back({site_a(r, c), site_b(r, c)});
      else if (chi == orientation)
        blocks.push_back({site_a(r, c), site_b(r, (c + L - 1) % L)});
      else
        blocks.push_back({site_a(r, c), site_b((r + L - 1) % L, c)});
    }
  }

  HoneycombLattice lat{L, Covering(n, std::move(blocks)), {}, {}, {}};
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      std::size_t rm = (r + L - 1) % L, cp = (c + 1) % L;
      std::array<std::uint32_t, 6> cyc = {site_a(r, c),  site_b(r, c),
                                          site_a(r, cp), site_b(rm, cp),
                                          site_a(rm, cp), site_b(rm, c)};
      PauliString p(n);
      for (std::size_t j = 0; j < 6; ++j) p.set_letter(cyc[j], letter_buf[j]);
      lat.plaquettes.add(p, "plaq(" + std::to_string(r) + "," +
                                std::to_string(c) + ")");
      lat.face_sites.push_back(cyc);
      lat.face_colors.push_back(color(r, c));
    }
  }
  lat.plaquettes.validate();
  return lat;
}

}  // namespace shadows
