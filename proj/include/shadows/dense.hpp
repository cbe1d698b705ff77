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
#include <vector>

#include "shadows/clifford.hpp"
#include "shadows/common.hpp"
#include "shadows/pauli.hpp"
#include "shadows/protocol.hpp"
#include "shadows/rng.hpp"

namespace shadows {

inline constexpr std::size_t kMaxDenseQubits = 24;
inline constexpr std::size_t kMaxOracleQubits = 12;

// Dense statevector. Qubit q is bit q of the basis index (qubit 0 least
// significant).
class DenseState {
 public:
  explicit DenseState(std::size_t num_qubits)
      : n_(num_qubits), amp_(std::size_t{1} << check_size(num_qubits)) {
    amp_[0] = 1.0;
  }

  DenseState(std::size_t num_qubits, std::vector<std::complex<double>> amps)
      : n_(num_qubits), amp_(std::move(amps)) {
    check_size(num_qubits);
    if (amp_.size() != (std::size_t{1} << n_))
      throw std::invalid_argument("DenseState: amplitude count mismatch");
  }

  std::size_t num_qubits() const { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
  std::vector<std::complex<double>>& amplitudes() { return amp_; }

  void apply_matrix1(std::size_t q, const std::array<std::complex<double>, 4>& u) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & bit) continue;
      const auto a0 = amp_[i];
      const auto a1 = amp_[i | bit];
      amp_[i] = u[0] * a0 + u[1] * a1;
      amp_[i | bit] = u[2] * a0 + u[3] * a1;
    }
  }

  void apply_h(std::size_t q) {
    static const double r = 1.0 / std::numbers::sqrt2;
    apply_matrix1(q, {r, r, r, -r});
  }

  void apply_s(std::size_t q) {
    apply_matrix1(q, {1.0, 0.0, 0.0, std::complex<double>(0.0, 1.0)});
  }

  void apply_x(std::size_t q) { apply_matrix1(q, {0.0, 1.0, 1.0, 0.0}); }

  void apply_cx(std::size_t control, std::size_t target) {
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    for (std::size_t i = 0; i < amp_.size(); ++i)
      if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
  }

  void apply_cz(std::size_t a, std::size_t b) {
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amp_.size(); ++i)
      if ((i & mask) == mask) amp_[i] = -amp_[i];
  }

  void apply_cphase(std::size_t a, std::size_t b, double phi) {
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    const std::complex<double> w = std::polar(1.0, phi);
    for (std::size_t i = 0; i < amp_.size(); ++i)
      if ((i & mask) == mask) amp_[i] *= w;
  }

  void apply_gate(const Gate& g) {
    switch (g.kind) {
      case Gate::Kind::H: apply_h(g.q0); break;
      case Gate::Kind::S: apply_s(g.q0); break;
      case Gate::Kind::CX: apply_cx(g.q0, g.q1); break;
      case Gate::Kind::CZ: apply_cz(g.q0, g.q1); break;
      case Gate::Kind::CPhase: apply_cphase(g.q0, g.q1, g.angle); break;
      case Gate::Kind::Clifford1:
        apply_matrix1(g.q0, clifford_table()[g.table_index].u);
        break;
    }
  }

  void apply_circuit(const Circuit& c) {
    for (const auto& g : c) apply_gate(g);
  }

  // Applies the adjoint of the circuit (gates reversed, each inverted).
  void apply_circuit_adjoint(const Circuit& c) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      switch (it->kind) {
        case Gate::Kind::H: apply_h(it->q0); break;
        case Gate::Kind::S:
          apply_matrix1(it->q0,
                        {1.0, 0.0, 0.0, std::complex<double>(0.0, -1.0)});
          break;
        case Gate::Kind::CX: apply_cx(it->q0, it->q1); break;
        case Gate::Kind::CZ: apply_cz(it->q0, it->q1); break;
        case Gate::Kind::CPhase:
          apply_cphase(it->q0, it->q1, -it->angle);
          break;
        case Gate::Kind::Clifford1:
          apply_matrix1(it->q0,
                        detail::mat_adj(clifford_table()[it->table_index].u));
          break;
      }
    }
  }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return s;
  }

  // |psi> <- P |psi>
  void apply_pauli(const PauliString& p) {
    if (p.num_qubits() != n_)
      throw std::invalid_argument("apply_pauli: qubit count mismatch");
    const std::uint64_t xm = p.x_words().empty() ? 0 : p.x_words()[0];
    const std::uint64_t zm = p.z_words().empty() ? 0 : p.z_words()[0];
    std::complex<double> base(static_cast<double>(p.sign()), 0.0);
    switch (std::popcount(xm & zm) & 3) {
      case 1: base *= std::complex<double>(0.0, 1.0); break;
      case 2: base = -base; break;
      case 3: base *= std::complex<double>(0.0, -1.0); break;
      default: break;
    }
    std::vector<std::complex<double>> out(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      double par = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
      out[i ^ xm] = base * par * amp_[i];
    }
    amp_ = std::move(out);
  }

  // <psi| P |psi>. Real for hermitian P; the imaginary part is returned so
  // callers can assert it vanishes.
  std::complex<double> expectation(const PauliString& p) const {
    if (p.num_qubits() != n_)
      throw std::invalid_argument("expectation: qubit count mismatch");
    const std::uint64_t xm = p.x_words().empty() ? 0 : p.x_words()[0];
    const std::uint64_t zm = p.z_words().empty() ? 0 : p.z_words()[0];
    std::uint64_t ym = xm & zm;
    std::complex<double> base(static_cast<double>(p.sign()), 0.0);
    switch (std::popcount(ym) & 3) {
      case 1: base *= std::complex<double>(0.0, 1.0); break;
      case 2: base = -base; break;
      case 3: base *= std::complex<double>(0.0, -1.0); break;
      default: break;
    }
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (amp_[i] == std::complex<double>(0.0)) continue;
      double par = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
      acc += std::conj(amp_[i ^ xm]) * base * par * amp_[i];
    }
    return acc;
  }

  // Samples a computational-basis outcome using one uniform draw: walks the
  // cumulative distribution of |amp|^2. Part of the reproducibility
  // contract for the dense backend.
  std::uint64_t sample_outcome(Rng& rng) const {
    double u = rng.uniform() * norm_sq();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < amp_.size(); ++i) {
      acc += std::norm(amp_[i]);
      if (u < acc) return i;
    }
    return amp_.size() - 1;
  }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n == 0 || n > kMaxDenseQubits)
      throw guard_error("DenseState supports 1.." +
                        std::to_string(kMaxDenseQubits) + " qubits");
    return n;
  }

  std::size_t n_;
  std::vector<std::complex<double>> amp_;
};

// Full Born distribution over computational outcomes. Deliberately capped
// well below the statevector limit: meant for cross-checking samplers.
inline std::vector<double> born_oracle(const DenseState& state) {
  if (state.num_qubits() > kMaxOracleQubits)
    throw guard_error("born_oracle supports at most " +
                      std::to_string(kMaxOracleQubits) + " qubits");
  std::vector<double> p(state.amplitudes().size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = std::norm(state.amplitudes()[i]);
  return p;
}

// Probability of one computational outcome after running `circuit` on
// `state`.
inline double born_oracle(const DenseState& state, const Circuit& circuit,
                          std::uint64_t outcome) {
  if (state.num_qubits() > kMaxOracleQubits)
    throw guard_error("born_oracle supports at most " +
                      std::to_string(kMaxOracleQubits) + " qubits");
  if (outcome >= state.amplitudes().size())
    throw std::invalid_argument("born_oracle: outcome out of range");
  DenseState s = state;
  s.apply_circuit(circuit);
  return std::norm(s.amplitudes()[outcome]);
}

// The 2^n states |v_b> = C^dag |b> of a block basis: measuring the block
// circuit C then reading bit string b projects onto |v_b>. Outcome bit for
// block-local qubit k sits at bit k of b.
inline std::vector<DenseState> block_basis_states(BasisFamily family,
                                                  std::size_t block_size,
                                                  double phi = std::numbers::pi) {
  Circuit c = block_circuit(family, block_size, phi);
  std::vector<DenseState> out;
  const std::size_t dim = std::size_t{1} << block_size;
  out.reserve(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    DenseState v(block_size);
    v.amplitudes()[0] = 0.0;
    v.amplitudes()[b] = 1.0;
    v.apply_circuit_adjoint(c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace shadows
