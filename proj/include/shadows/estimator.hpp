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
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "shadows/channel.hpp"
#include "shadows/dense.hpp"
#include "shadows/snapshot.hpp"

namespace shadows {

inline constexpr double kHitThreshold = 1e-9;

// How per-snapshot overlaps are evaluated. Dense evaluates the block matrix
// element in the measured basis (at most 8x8 work) and is the default for
// every protocol; Symplectic tracks Paulis through the block circuit, needs
// every gate Clifford, and exists as an opt-in fast path asserted equal to
// Dense in tests. Auto picks Symplectic exactly when the protocol allows it.
enum class EstimatorRoute { Dense, Symplectic, Auto };

struct ShotValue {
  double value = 0.0;
  bool hit = false;
};

namespace detail {

// One Pauli over <= 32 qubits in hermitian form, conjugated in place with
// the usual binary tableau rules (row <- U row U^dag).
struct LocalRow {
  std::uint32_t x = 0, z = 0;
  int sign = 1;

  bool xb(std::size_t q) const { return (x >> q) & 1; }
  bool zb(std::size_t q) const { return (z >> q) & 1; }

  void h(std::size_t q) {
    if (xb(q) && zb(q)) sign = -sign;
    std::uint32_t xq = (x >> q) & 1, zq = (z >> q) & 1;
    x ^= (xq ^ zq) << q;
    z ^= (xq ^ zq) << q;
  }
  void s(std::size_t q) {
    if (xb(q) && zb(q)) sign = -sign;
    z ^= (x >> q & 1) << q;
  }
  void cx(std::size_t c, std::size_t t) {
    if (xb(c) && zb(t) && !(xb(t) ^ zb(c))) sign = -sign;
    x ^= (x >> c & 1) << t;
    z ^= (z >> t & 1) << c;
  }
  void apply(const Circuit& circuit) {
    for (const auto& g : circuit) {
      switch (g.kind) {
        case Gate::Kind::H: h(g.q0); break;
        case Gate::Kind::S: s(g.q0); break;
        case Gate::Kind::CX: cx(g.q0, g.q1); break;
        case Gate::Kind::CZ: h(g.q1); cx(g.q0, g.q1); h(g.q1); break;
        case Gate::Kind::CPhase:
          if (g.angle == 0.0) break;
          if (g.angle == std::numbers::pi) {
            h(g.q1); cx(g.q0, g.q1); h(g.q1);
            break;
          }
          throw guard_error("symplectic route: non-Clifford phase gate");
        case Gate::Kind::Clifford1:
          for (char w : clifford_table()[g.table_index].word)
            w == 'H' ? h(g.q0) : s(g.q0);
          break;
      }
    }
  }
};

}  // namespace detail

// A Pauli observable bound to one protocol: per-block site lists, letter
// codes, inverse eigenvalues, and the measured block bases.
class CompiledObservable {
 public:
  CompiledObservable(const PauliString& op, const ProtocolSpec& spec,
                     const ChannelEigenvalues& eigs)
      : op_(op), spec_(spec) {
    const auto& blocks = spec.covering.blocks();
    if (op.num_qubits() != spec.covering.num_qubits())
      throw std::invalid_argument("CompiledObservable: qubit count mismatch");
    if (eigs.blocks.size() != blocks.size())
      throw std::invalid_argument("CompiledObservable: eigenvalue tables "
                                  "do not match the covering");
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& sites = blocks[bi];
      std::uint32_t pattern = 0;
      for (std::size_t j = 0; j < sites.size(); ++j)
        if (op.letter(sites[j]) != 'I') pattern |= std::uint32_t{1} << j;
      if (pattern == 0) continue;
      double lambda = eigs.blocks[bi].at(pattern);
      BlockTerm term{sites, {}, pattern, 0.0};
      for (std::size_t site : sites)
        term.codes.push_back(letter_code(op.letter(site)));
      if (lambda < kZeroEigenvalueThreshold) {
        unlearnable_ = true;
      } else {
        term.inv_lambda = 1.0 / lambda;
        inv_lambda_product_ *= term.inv_lambda;
      }
      terms_.push_back(std::move(term));
      if (!basis_.count(sites.size()))
        basis_.emplace(sites.size(), block_basis_states(
            sites.size() == 1 ? BasisFamily::PauliLocal : spec.family,
            sites.size(), spec.phi));
      if (!circuit_.count(sites.size()))
        circuit_.emplace(sites.size(), block_circuit(
            sites.size() == 1 ? BasisFamily::PauliLocal : spec.family,
            sites.size(), spec.phi));
    }
  }

  const PauliString& op() const { return op_; }
  bool unlearnable() const { return unlearnable_; }

  // product of 1/lambda over touched blocks == squared shadow norm
  double norm_sq() const {
    return unlearnable_ ? std::numeric_limits<double>::quiet_NaN()
                        : inv_lambda_product_;
  }

  ShotValue shot_value(const Snapshot& snap,
                       EstimatorRoute route = EstimatorRoute::Dense) const {
    if (unlearnable_)
      throw unlearnable_error("shot_value: observable is not learnable "
                              "under this protocol");
    if (route == EstimatorRoute::Auto)
      route = spec_.is_clifford() ? EstimatorRoute::Symplectic
                                  : EstimatorRoute::Dense;
    double prod = static_cast<double>(op_.sign()) * inv_lambda_product_;
    bool hit = true;
    for (const auto& term : terms_) {
      double m = route == EstimatorRoute::Symplectic
                     ? block_overlap_symplectic(term, snap)
                     : block_overlap_dense(term, snap);
      if (std::abs(m) <= kHitThreshold) {
        hit = false;
        prod = 0.0;
        break;
      }
      prod *= m;
    }
    return {hit ? prod : 0.0, hit};
  }

 private:
  struct BlockTerm {
    std::vector<std::uint32_t> sites;
    std::vector<std::uint8_t> codes;  // 0=I 1=X 2=Z 3=Y at each block site
    std::uint32_t pattern = 0;
    double inv_lambda = 0.0;
  };

  static std::uint8_t letter_code(char letter) {
    switch (letter) {
      case 'I': return 0;
      case 'X': return 1;
      case 'Z': return 2;
      case 'Y': return 3;
    }
    throw std::logic_error("letter_code: bad letter");
  }

  // Scrambler-conjugated block Pauli: letters u P u^dag per site, overall
  // sign collected separately.
  void conjugated_letters(const BlockTerm& term, const Snapshot& snap,
                          std::uint32_t* xm, std::uint32_t* zm,
                          int* sign) const {
    *xm = 0;
    *zm = 0;
    *sign = 1;
    for (std::size_t j = 0; j < term.sites.size(); ++j) {
      if (term.codes[j] == 0) continue;
      const auto& img =
          clifford_table()[snap.scramblers[term.sites[j]]].image[term.codes[j]];
      if (img.sign < 0) *sign = -*sign;
      *xm |= static_cast<std::uint32_t>(img.code & 1) << j;
      *zm |= static_cast<std::uint32_t>(img.code >> 1) << j;
    }
  }

  std::uint32_t block_bits(const BlockTerm& term, const Snapshot& snap) const {
    std::uint32_t b = 0;
    for (std::size_t j = 0; j < term.sites.size(); ++j)
      b |= static_cast<std::uint32_t>(snap.outcome_bit(term.sites[j])) << j;
    return b;
  }

  double block_overlap_symplectic(const BlockTerm& term,
                                  const Snapshot& snap) const {
    detail::LocalRow row;
    conjugated_letters(term, snap, &row.x, &row.z, &row.sign);
    row.apply(circuit_.at(term.sites.size()));
    if (row.x != 0) return 0.0;
    std::uint32_t b = block_bits(term, snap);
    int par = std::popcount(b & row.z) & 1;
    return (par ? -1.0 : 1.0) * row.sign;
  }

  double block_overlap_dense(const BlockTerm& term,
                             const Snapshot& snap) const {
    std::uint32_t xm, zm;
    int sign;
    conjugated_letters(term, snap, &xm, &zm, &sign);
    const std::size_t k = term.sites.size();
    PauliString p = PauliString::identity(k);
    for (std::size_t j = 0; j < k; ++j) {
      int code = ((xm >> j) & 1) + 2 * ((zm >> j) & 1);
      p.set_letter(j, "IXZY"[code]);
    }
    p.set_sign(sign);
    const DenseState& v = basis_.at(k)[block_bits(term, snap)];
    double m = v.expectation(p).real();
    if (spec_.is_clifford()) {
      // exact matrix elements are -1, 0 or +1; drop the float noise so all
      // nonzero shot values share one magnitude
      double r = std::round(m);
      if (std::abs(m - r) < 1e-6) m = r;
    }
    return m;
  }

  PauliString op_;
  ProtocolSpec spec_;
  std::vector<BlockTerm> terms_;
  std::map<std::size_t, std::vector<DenseState>> basis_;
  std::map<std::size_t, Circuit> circuit_;
  double inv_lambda_product_ = 1.0;
  bool unlearnable_ = false;
};

struct Estimate {
  std::string label;
  std::string protocol_label;
  std::string status = "OK";  // "OK" or "UNLEARNABLE"
  double mean = std::numeric_limits<double>::quiet_NaN();
  double std_error = std::numeric_limits<double>::quiet_NaN();
  double median_of_means = std::numeric_limits<double>::quiet_NaN();
  double hit_frequency = std::numeric_limits<double>::quiet_NaN();
  double second_moment = std::numeric_limits<double>::quiet_NaN();
  double second_moment_std_error = std::numeric_limits<double>::quiet_NaN();
  double norm_sq = std::numeric_limits<double>::quiet_NaN();
  std::size_t shots = 0;
  std::size_t shots_used = 0;   // shots entering the median-of-means
  std::size_t group_count = 0;

  bool learnable() const { return status == "OK"; }
};

// Mean, standard error, and median-of-means of the per-shot estimates.
// Sums use pairwise reduction so results do not depend on worker count.
// `groups` groups of floor(shots/groups) shots each (default 1, i.e. a
// plain mean); the remainder is dropped from the median only.
inline Estimate estimate_observable(const PauliString& op,
                                    const SnapshotDataset& ds,
                                    const ChannelEigenvalues& eigs,
                                    std::string label = {},
                                    std::size_t groups = 1,
                                    EstimatorRoute route = EstimatorRoute::Dense,
                                    std::size_t workers = 1) {
  Estimate est;
  est.label = label.empty() ? op.str() : std::move(label);
  est.protocol_label = ds.protocol.label();
  est.shots = ds.snapshots.size();

  CompiledObservable compiled(op, ds.protocol, eigs);
  if (compiled.unlearnable()) {
    est.status = "UNLEARNABLE";
    return est;
  }
  est.norm_sq = compiled.norm_sq();
  if (est.shots == 0) return est;

  const std::size_t m = est.shots;
  std::vector<double> values(m), squares(m), fourths(m), hits(m);
  parallel_for_chunks(m, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      ShotValue sv = compiled.shot_value(ds.snapshots[t], route);
      values[t] = sv.value;
      squares[t] = sv.value * sv.value;
      fourths[t] = squares[t] * squares[t];
      hits[t] = sv.hit ? 1.0 : 0.0;
    }
  });

  est.mean = pairwise_sum(values) / static_cast<double>(m);
  est.second_moment = pairwise_sum(squares) / static_cast<double>(m);
  est.hit_frequency = pairwise_sum(hits) / static_cast<double>(m);
  if (m > 1) {
    auto stderr_of = [m](double mean_sq, double mean1) {
      double var = (mean_sq - mean1 * mean1) * static_cast<double>(m) /
                   static_cast<double>(m - 1);
      return std::sqrt(std::max(0.0, var) / static_cast<double>(m));
    };
    est.std_error = stderr_of(est.second_moment, est.mean);
    est.second_moment_std_error =
        stderr_of(pairwise_sum(fourths) / static_cast<double>(m),
                  est.second_moment);
  }

  std::size_t g_count = std::min(groups ? groups : 1, m);
  std::size_t group_size = m / g_count;
  est.group_count = g_count;
  est.shots_used = g_count * group_size;
  std::vector<double> means(g_count);
  for (std::size_t g = 0; g < g_count; ++g) {
    std::span<const double> slice(values.data() + g * group_size, group_size);
    means[g] = pairwise_sum(slice) / static_cast<double>(group_size);
  }
  std::sort(means.begin(), means.end());
  est.median_of_means =
      g_count % 2 ? means[g_count / 2]
                  : 0.5 * (means[g_count / 2 - 1] + means[g_count / 2]);
  return est;
}

// Single-observable forms. Unlike the set-level call below, these raise on
// an unlearnable observable instead of reporting a status.
inline ShotValue shot_value(const PauliString& p, const ProtocolSpec& spec,
                            const Snapshot& snap,
                            const ChannelEigenvalues& eigs,
                            EstimatorRoute route = EstimatorRoute::Dense) {
  return CompiledObservable(p, spec, eigs).shot_value(snap, route);
}

inline Estimate estimate(const PauliString& p, const SnapshotDataset& ds,
                         const ChannelEigenvalues& eigs,
                         std::size_t groups = 1,
                         EstimatorRoute route = EstimatorRoute::Dense) {
  if (ds.snapshots.empty())
    throw std::invalid_argument("estimate: empty dataset");
  Estimate est = estimate_observable(p, ds, eigs, {}, groups, route);
  if (!est.learnable())
    throw unlearnable_error(
        "estimate: observable is not learnable under this protocol");
  return est;
}

inline double second_moment(const PauliString& p, const SnapshotDataset& ds,
                            const ChannelEigenvalues& eigs) {
  return estimate(p, ds, eigs).second_moment;
}

inline double hit_frequency(const PauliString& p, const SnapshotDataset& ds,
                            const ChannelEigenvalues& eigs) {
  return estimate(p, ds, eigs).hit_frequency;
}

// Estimates every operator of a set against the first dataset that can
// learn it; operators no dataset can learn are reported with status
// UNLEARNABLE rather than raising.
inline std::vector<Estimate> estimate_set(
    const OperatorSet& ops, const std::vector<SnapshotDataset>& datasets,
    std::size_t groups = 1, EstimatorRoute route = EstimatorRoute::Dense,
    std::size_t workers = 1) {
  if (datasets.empty())
    throw std::invalid_argument("estimate_set: no datasets");
  std::vector<ChannelEigenvalues> eigs;
  eigs.reserve(datasets.size());
  for (const auto& ds : datasets)
    eigs.push_back(protocol_eigenvalues(ds.protocol));

  std::vector<Estimate> out;
  out.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops.operators[i];
    const std::string& label = ops.labels[i];
    bool done = false;
    for (std::size_t d = 0; d < datasets.size(); ++d) {
      ShadowNorm norm = shadow_norm_sq(op, datasets[d].protocol.covering,
                                       eigs[d], datasets[d].protocol.label());
      if (norm.unlearnable) continue;
      out.push_back(estimate_observable(op, datasets[d], eigs[d], label,
                                        groups, route, workers));
      done = true;
      break;
    }
    if (!done) {
      Estimate est;
      est.label = label;
      est.status = "UNLEARNABLE";
      out.push_back(std::move(est));
    }
  }
  return out;
}

}  // namespace shadows
