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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadows/common.hpp"
#include "shadows/covering.hpp"
#include "shadows/pauli.hpp"

namespace shadows {

// Pattern convention: for a block of n sites, bit j of a pattern marks the
// block's j-th site (in ascending qubit order) as non-identity. Rendered
// with a bullet for non-identity and a ring for identity, site 0 leftmost.
inline std::string pattern_text(std::uint32_t pattern, std::size_t n) {
  std::string out;
  for (std::size_t j = 0; j < n; ++j)
    out += ((pattern >> j) & 1) ? "•" : "∘";
  return out;
}

// Eigenvalues of one block of a locally scrambled measurement channel.
// Within a block the eigenvalue depends only on the identity/non-identity
// pattern of the operator, never on which Pauli letters realise it.
struct BlockEigenvalues {
  std::size_t block_size = 0;
  std::vector<double> lambda;     // size 1 << block_size, indexed by pattern
  std::vector<Fraction> exact;    // parallel to lambda; den==0 when unknown

  double at(std::uint32_t pattern) const {
    if (pattern >= lambda.size())
      throw std::invalid_argument("BlockEigenvalues: pattern out of range");
    return lambda[pattern];
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint32_t m = 0; m < lambda.size(); ++m) {
      nlohmann::json row{{"pattern", pattern_text(m, block_size)},
                         {"lambda", lambda[m]}};
      if (m < exact.size() && exact[m].valid()) row["exact"] = exact[m].str();
      rows.push_back(std::move(row));
    }
    return nlohmann::json{{"block_size", block_size}, {"values", rows}};
  }
};

// Single scrambled qubit measured in the computational basis:
// identity passes through, every Pauli direction is damped to 1/3.
inline BlockEigenvalues pauli_block_eigs() {
  BlockEigenvalues e;
  e.block_size = 1;
  e.lambda = {1.0, 1.0 / 3.0};
  e.exact = {Fraction::of(1, 1), Fraction::of(1, 3)};
  return e;
}

// Two scrambled qubits read out in a maximally entangled pair basis:
// single-site directions vanish, the doubly supported ones keep 1/3.
inline BlockEigenvalues bell_block_eigs() {
  BlockEigenvalues e;
  e.block_size = 2;
  e.lambda = {1.0, 0.0, 0.0, 1.0 / 3.0};
  e.exact = {Fraction::of(1, 1), Fraction::of(0, 1), Fraction::of(0, 1),
             Fraction::of(1, 3)};
  return e;
}

inline double max_tunable_delta() { return std::numbers::ln2; }

// Two-qubit basis of tunable entanglement, parametrised by delta in
// [0, ln 2]: delta = 0 is the maximally entangled point (Bell) and
// delta = ln 2 the product point (two independent Pauli qubits).
//   lambda(single site) = (e^delta - 1) / 3
//   lambda(both sites)  = (5 - 2 e^delta) / 9
inline BlockEigenvalues tunable_block_eigs(double delta) {
  if (!(delta >= -1e-12 && delta <= max_tunable_delta() + 1e-12))
    throw std::invalid_argument("tunable_block_eigs: delta outside [0, ln 2]");
  if (delta < 0.0) delta = 0.0;
  if (delta > max_tunable_delta()) delta = max_tunable_delta();
  const double em1 = std::expm1(delta);  // e^delta - 1, exact at both ends
  BlockEigenvalues e;
  e.block_size = 2;
  const double single = em1 / 3.0;
  const double both = (3.0 - 2.0 * em1) / 9.0;
  e.lambda = {1.0, single, single, both};
  e.exact.assign(4, Fraction{});
  e.exact[0] = Fraction::of(1, 1);
  if (delta == 0.0) {
    e.exact[1] = e.exact[2] = Fraction::of(0, 1);
    e.exact[3] = Fraction::of(1, 3);
  }
  return e;
}

// Average subsystem purities of a block's measurement basis, indexed by the
// site subset mask. For a basis of pure product-of-block states the purity of
// a subset equals that of its complement, and the empty and full subsets are
// exactly 1.
struct EntanglementFeature {
  std::size_t block_size = 0;
  std::vector<double> purity;  // size 1 << block_size

  void validate() const {
    const std::size_t dim = std::size_t{1} << block_size;
    if (purity.size() != dim)
      throw std::invalid_argument("EntanglementFeature: wrong table size");
    const std::uint32_t full = static_cast<std::uint32_t>(dim - 1);
    if (std::abs(purity[0] - 1.0) > 1e-9 || std::abs(purity[full] - 1.0) > 1e-9)
      throw std::invalid_argument(
          "EntanglementFeature: trivial subsets must have purity 1");
    for (std::uint32_t m = 0; m < dim; ++m) {
      double lo = std::ldexp(1.0, -std::popcount(m));
      if (purity[m] < lo - 1e-9 || purity[m] > 1.0 + 1e-9)
        throw std::invalid_argument(
            "EntanglementFeature: purity outside physical range");
      if (std::abs(purity[m] - purity[full ^ m]) > 1e-9)
        throw std::invalid_argument(
            "EntanglementFeature: complement symmetry violated");
    }
  }
};

// Channel eigenvalues from the entanglement feature of the measurement basis:
//   lambda_A = (-1/3)^{|A|} * sum_{B subset of A} (-2)^{|B|} * purity_B
inline BlockEigenvalues ef_to_eigs(const EntanglementFeature& ef) {
  ef.validate();
  const std::size_t dim = std::size_t{1} << ef.block_size;
  BlockEigenvalues e;
  e.block_size = ef.block_size;
  e.lambda.assign(dim, 0.0);
  e.exact.assign(dim, Fraction{});
  for (std::uint32_t a = 0; a < dim; ++a) {
    double sum = 0.0;
    std::uint32_t b = a;
    while (true) {
      double w = std::ldexp(1.0, std::popcount(b));  // 2^{|B|}
      sum += (std::popcount(b) % 2 ? -w : w) * ef.purity[b];
      if (b == 0) break;
      b = (b - 1) & a;
    }
    const int ca = std::popcount(a);
    double lam = sum / std::pow(-3.0, ca);
    if (lam < 0.0) {
      if (lam < -1e-9)
        throw std::invalid_argument("ef_to_eigs: negative eigenvalue");
      lam = 0.0;
    }
    e.lambda[a] = lam;
  }
  e.exact[0] = Fraction::of(1, 1);
  return e;
}

// Entanglement feature of the n-qubit GHZ basis: every proper non-empty
// subset has purity 1/2.
inline EntanglementFeature ghz_entanglement_feature(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ghz_entanglement_feature: n >= 2");
  if (n > 20) throw guard_error("ghz_entanglement_feature: n too large");
  EntanglementFeature ef;
  ef.block_size = n;
  const std::size_t dim = std::size_t{1} << n;
  ef.purity.assign(dim, 0.5);
  ef.purity[0] = 1.0;
  ef.purity[dim - 1] = 1.0;
  return ef;
}

// Closed form for the fully supported pattern of a GHZ block:
//   lambda = (2^n + 1 + (-1)^n) / (2 * 3^n)
inline double ghz_full_pattern_eigenvalue(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("ghz_full_pattern_eigenvalue: n >= 2");
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  return (std::ldexp(1.0, static_cast<int>(n)) + 1.0 + parity) /
         (2.0 * std::pow(3.0, static_cast<double>(n)));
}

// GHZ block eigenvalues, with exact fractions attached. The doubles come from
// the generic entanglement-feature map; the fractions from the same subset
// sum done in integer arithmetic (all purities are 1 or 1/2).
inline BlockEigenvalues ghz_block_eigs(std::size_t n) {
  if (n > 20) throw guard_error("ghz_block_eigs: n too large");
  BlockEigenvalues e = ef_to_eigs(ghz_entanglement_feature(n));
  const std::size_t dim = std::size_t{1} << n;
  for (std::uint32_t a = 0; a < dim; ++a) {
    // 2 * sum_{B subset A} (-2)^{|B|} purity_B is an integer.
    std::int64_t twice = 0;
    std::uint32_t b = a;
    while (true) {
      std::int64_t w = std::int64_t{1} << std::popcount(b);
      if (std::popcount(b) % 2) w = -w;
      bool trivial = (b == 0) || (b == dim - 1);
      twice += trivial ? 2 * w : w;
      if (b == 0) break;
      b = (b - 1) & a;
    }
    const int ca = std::popcount(a);
    std::int64_t den = 2;
    for (int i = 0; i < ca; ++i) den *= 3;
    if (ca % 2) twice = -twice;
    e.exact[a] = Fraction::of(twice, den);
  }
  return e;
}

// Per-site cost factor of an n-qubit GHZ block: the squared shadow norm of a
// compatible weight-k operator is f_n^k.
//   f_n = 3 / (2^{n-1} + 1)^{1/n}  (n even),  3 / 2^{1 - 1/n}  (n odd)
inline double scaling_factor(std::size_t n) {
  if (n == 0) throw std::invalid_argument("scaling_factor: n >= 1");
  const double nd = static_cast<double>(n);
  if (n % 2 == 0)
    return 3.0 /
           std::pow(std::ldexp(1.0, static_cast<int>(n) - 1) + 1.0, 1.0 / nd);
  return 3.0 / std::pow(2.0, 1.0 - 1.0 / nd);
}

// True when an n-qubit stabilizer-basis protocol saturates the entangled
// measurement cost floor, i.e. f_n >= 3/2 (equivalently, the per-block hit
// probability of a compatible operator is at most (2/3)^n).
inline bool stabilizer_bound_check(std::size_t n) {
  return scaling_factor(n) >= 1.5 - 1e-12;
}

// Mean single-site purity of the four states CPhase(phi)|s0 s1> with
// s in {+,-}: computed from the 4-dimensional amplitudes directly.
inline double cphase_basis_mean_purity(double phi) {
  if (!(phi >= -1e-12 && phi <= std::numbers::pi + 1e-12))
    throw std::invalid_argument("cphase_basis_mean_purity: phi outside [0, pi]");
  using c64 = std::complex<double>;
  const c64 top = std::polar(1.0, phi);
  double total = 0.0;
  for (int s0 : {+1, -1}) {
    for (int s1 : {+1, -1}) {
      // amp[(b1 << 1) | b0], site 0 = low bit
      std::array<c64, 4> amp = {0.5, 0.5 * s0, 0.5 * s1,
                                0.5 * s0 * s1 * top};
      for (int site = 0; site < 2; ++site) {
        c64 rho00 = 0, rho01 = 0, rho11 = 0;
        for (int other = 0; other < 2; ++other) {
          std::size_t i0 = site == 0 ? (other << 1) : other;
          std::size_t i1 = i0 | (std::size_t{1} << site);
          rho00 += amp[i0] * std::conj(amp[i0]);
          rho11 += amp[i1] * std::conj(amp[i1]);
          rho01 += amp[i0] * std::conj(amp[i1]);
        }
        total += std::norm(rho00) + std::norm(rho11) + 2.0 * std::norm(rho01);
      }
    }
  }
  return total / 8.0;
}

// delta = ln 2 - S2, with S2 the mean single-site second Renyi entropy of the
// CPhase(phi) basis. phi = pi gives 0 (Bell), phi = 0 gives ln 2 (product).
inline double delta_from_phi(double phi) {
  return std::numbers::ln2 + std::log(cphase_basis_mean_purity(phi));
}

// Inverse of delta_from_phi on [0, ln 2], using purity = (3 + cos phi) / 4.
inline double phi_from_delta(double delta) {
  if (!(delta >= -1e-12 && delta <= max_tunable_delta() + 1e-12))
    throw std::invalid_argument("phi_from_delta: delta outside [0, ln 2]");
  double c = 2.0 * std::exp(delta) - 3.0;
  if (c < -1.0) c = -1.0;
  if (c > 1.0) c = 1.0;
  return std::acos(c);
}

// Eigenvalue tables for every block of a covering, aligned with
// Covering::blocks().
struct ChannelEigenvalues {
  std::vector<BlockEigenvalues> blocks;

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& b : blocks) j.push_back(b.to_json());
    return j;
  }
};

// Squared shadow norm of a Pauli operator under a block channel: the product
// of inverse eigenvalues over the blocks its support touches. An operator
// that touches a zero eigenvalue is not learnable.
struct ShadowNorm {
  double value = std::numeric_limits<double>::quiet_NaN();
  bool unlearnable = false;
  std::string operator_label;
  std::string protocol_label;

  nlohmann::json to_json() const {
    nlohmann::json j{{"operator", operator_label},
                     {"protocol", protocol_label}};
    if (unlearnable)
      j["norm_sq"] = "UNLEARNABLE";
    else
      j["norm_sq"] = value;
    return j;
  }
};

inline ShadowNorm shadow_norm_sq(const PauliString& p, const Covering& cov,
                                 const ChannelEigenvalues& eigs,
                                 std::string protocol_label = std::string()) {
  if (p.num_qubits() != cov.num_qubits())
    throw std::invalid_argument("shadow_norm_sq: size mismatch");
  if (eigs.blocks.size() != cov.blocks().size())
    throw std::invalid_argument("shadow_norm_sq: eigenvalue table mismatch");
  ShadowNorm out;
  out.operator_label = p.str();
  out.protocol_label = std::move(protocol_label);
  double acc = 1.0;
  for (std::size_t bi = 0; bi < cov.blocks().size(); ++bi) {
    const auto& block = cov.blocks()[bi];
    std::uint32_t pattern = 0;
    for (std::size_t j = 0; j < block.size(); ++j)
      if (p.letter(block[j]) != 'I') pattern |= std::uint32_t{1} << j;
    if (pattern == 0) continue;
    const double lam = eigs.blocks[bi].at(pattern);
    if (lam < kZeroEigenvalueThreshold) {
      out.unlearnable = true;
      return out;
    }
    acc /= lam;
  }
  out.value = acc;
  return out;
}

// Shots needed to learn every operator in the set to accuracy epsilon with
// high probability: ceil(ln M * max ||O||^2 / epsilon^2), floored at one
// shot (a single-operator set has ln 1 = 0).
inline std::uint64_t sample_budget(std::span<const ShadowNorm> norms,
                                   double epsilon) {
  if (norms.empty())
    throw std::invalid_argument("sample_budget: empty operator set");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("sample_budget: epsilon must be positive");
  double max_norm = 0.0;
  for (const auto& n : norms) {
    if (n.unlearnable)
      throw unlearnable_error("sample_budget: set contains an unlearnable operator");
    max_norm = std::max(max_norm, n.value);
  }
  const double raw =
      std::log(static_cast<double>(norms.size())) * max_norm / (epsilon * epsilon);
  const double c = std::ceil(raw);
  return c < 1.0 ? 1 : static_cast<std::uint64_t>(c);
}

// Budget for a campaign split across several coverings: each sub-campaign is
// budgeted independently and the totals add.
inline std::uint64_t sample_budget_split(
    const std::vector<std::vector<ShadowNorm>>& per_covering, double epsilon) {
  std::uint64_t total = 0;
  for (const auto& norms : per_covering)
    total += sample_budget(norms, epsilon);
  return total;
}

}  // namespace shadows
