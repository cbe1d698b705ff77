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
#include <vector>

#include "shadows/clifford.hpp"
#include "shadows/dense.hpp"
#include "shadows/pauli.hpp"
#include "shadows/protocol.hpp"
#include "shadows/rng.hpp"

namespace shadows {

// Pure stabilizer state as a binary tableau: rows 0..n-1 destabilizers,
// n..2n-1 stabilizers, plus one scratch row for deterministic measurements.
// Each row is a hermitian Pauli, sign (-1)^r.
class StabilizerState {
 public:
  explicit StabilizerState(std::size_t num_qubits)
      : n_(num_qubits),
        words_((num_qubits + 63) / 64),
        x_((2 * num_qubits + 1) * words_),
        z_((2 * num_qubits + 1) * words_),
        r_(2 * num_qubits + 1) {
    if (n_ == 0) throw guard_error("StabilizerState needs >= 1 qubit");
    for (std::size_t q = 0; q < n_; ++q) {
      set_xbit(q, q);           // destabilizer q: X_q
      set_zbit(n_ + q, q);      // stabilizer q:   Z_q  -> |0...0>
    }
  }

  std::size_t num_qubits() const { return n_; }

  void h(std::size_t q) {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      r_[i] ^= xbit(i, q) & zbit(i, q);
      bool x = xbit(i, q);
      put_xbit(i, q, zbit(i, q));
      put_zbit(i, q, x);
    }
  }

  void s(std::size_t q) {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      r_[i] ^= xbit(i, q) & zbit(i, q);
      put_zbit(i, q, zbit(i, q) ^ xbit(i, q));
    }
  }

  void cx(std::size_t c, std::size_t t) {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      r_[i] ^= xbit(i, c) & zbit(i, t) & (xbit(i, t) ^ zbit(i, c) ^ 1);
      put_xbit(i, t, xbit(i, t) ^ xbit(i, c));
      put_zbit(i, c, zbit(i, c) ^ zbit(i, t));
    }
  }

  void cz(std::size_t a, std::size_t b) {
    h(b);
    cx(a, b);
    h(b);
  }

  void apply_clifford1(std::size_t q, std::uint32_t table_index) {
    for (char g : clifford_table()[table_index].word)
      g == 'H' ? h(q) : s(q);
  }

  void apply_gate(const Gate& g) {
    switch (g.kind) {
      case Gate::Kind::H: h(g.q0); break;
      case Gate::Kind::S: s(g.q0); break;
      case Gate::Kind::CX: cx(g.q0, g.q1); break;
      case Gate::Kind::CZ: cz(g.q0, g.q1); break;
      case Gate::Kind::CPhase:
        if (g.angle == 0.0) break;
        if (g.angle == std::numbers::pi) {
          cz(g.q0, g.q1);
          break;
        }
        throw guard_error(
            "stabilizer backend: CPhase angle must be 0 or pi exactly");
      case Gate::Kind::Clifford1: apply_clifford1(g.q0, g.table_index); break;
    }
  }

  void apply_circuit(const Circuit& c) {
    for (const auto& g : c) apply_gate(g);
  }

  // Computational measurement of qubit q. Consumes one rng bit if and only
  // if the outcome is random; deterministic outcomes draw nothing. This is
  // part of the sampler reproducibility contract.
  int measure(std::size_t q, Rng& rng) {
    std::size_t p = 2 * n_;
    for (std::size_t i = n_; i < 2 * n_; ++i)
      if (xbit(i, q)) { p = i; break; }
    if (p < 2 * n_) {
      for (std::size_t i = 0; i < 2 * n_; ++i)
        if (i != p && xbit(i, q)) rowsum(i, p);
      copy_row(p - n_, p);
      zero_row(p);
      set_zbit(p, q);
      r_[p] = static_cast<std::uint8_t>(rng.bit());
      return r_[p];
    }
    zero_row(2 * n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (xbit(i, q)) rowsum(2 * n_, i + n_);
    return r_[2 * n_];
  }

  // Measures qubits 0..n-1 in ascending order; outcome bit of qubit q lands
  // at bit q.
  std::uint64_t measure_all(Rng& rng) {
    std::uint64_t out = 0;
    for (std::size_t q = 0; q < n_; ++q)
      out |= static_cast<std::uint64_t>(measure(q, rng)) << q;
    return out;
  }

  // tr(rho P) for a stabilizer state is -1, 0 or +1.
  int expectation(const PauliString& p) const {
    if (p.num_qubits() != n_)
      throw std::invalid_argument("expectation: qubit count mismatch");
    for (std::size_t i = n_; i < 2 * n_; ++i)
      if (anticommutes(i, p)) return 0;
    // p commutes with the whole stabilizer group, so it equals +-(product of
    // the generators flagged by anticommuting destabilizers).
    StabilizerState scratch(*this);
    scratch.zero_row(2 * n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (scratch.anticommutes(i, p)) scratch.rowsum(2 * n_, i + n_);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t px = w < p.x_words().size() ? p.x_words()[w] : 0;
      std::uint64_t pz = w < p.z_words().size() ? p.z_words()[w] : 0;
      if (scratch.x_[2 * n_ * words_ + w] != px ||
          scratch.z_[2 * n_ * words_ + w] != pz)
        throw std::logic_error("expectation: centralizer reduction failed");
    }
    int sign = scratch.r_[2 * n_] ? -1 : 1;
    return p.sign() * sign;
  }

  PauliString stabilizer_row(std::size_t k) const {
    return row_pauli(n_ + k);
  }

  PauliString destabilizer_row(std::size_t k) const { return row_pauli(k); }

  // Dense statevector, global phase fixed so the first nonzero amplitude is
  // real positive. Projects a seed vector onto the stabilizer group; retries
  // with pseudo-random seeds if the overlap vanishes.
  DenseState to_dense() const {
    if (n_ > 20) throw guard_error("to_dense supports at most 20 qubits");
    const std::size_t dim = std::size_t{1} << n_;
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
      DenseState psi(n_);
      if (attempt > 0) {
        Rng rng(mix64(0x5eedULL + attempt));
        for (auto& a : psi.amplitudes())
          a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
      }
      for (std::size_t k = 0; k < n_; ++k) {
        DenseState tmp = psi;
        tmp.apply_pauli(stabilizer_row(k));
        for (std::size_t i = 0; i < dim; ++i)
          psi.amplitudes()[i] =
              0.5 * (psi.amplitudes()[i] + tmp.amplitudes()[i]);
      }
      double nrm = std::sqrt(psi.norm_sq());
      if (nrm < 1e-9) continue;
      std::complex<double> ph = 0.0;
      for (const auto& a : psi.amplitudes())
        if (std::abs(a) > 1e-9) { ph = a / std::abs(a); break; }
      for (auto& a : psi.amplitudes()) a /= nrm * ph;
      return psi;
    }
    throw std::logic_error("to_dense: projector method failed");
  }

 private:
  bool xbit(std::size_t row, std::size_t q) const {
    return (x_[row * words_ + (q >> 6)] >> (q & 63)) & 1;
  }
  bool zbit(std::size_t row, std::size_t q) const {
    return (z_[row * words_ + (q >> 6)] >> (q & 63)) & 1;
  }
  void set_xbit(std::size_t row, std::size_t q) {
    x_[row * words_ + (q >> 6)] |= std::uint64_t{1} << (q & 63);
  }
  void set_zbit(std::size_t row, std::size_t q) {
    z_[row * words_ + (q >> 6)] |= std::uint64_t{1} << (q & 63);
  }
  void put_xbit(std::size_t row, std::size_t q, bool v) {
    std::uint64_t m = std::uint64_t{1} << (q & 63);
    auto& w = x_[row * words_ + (q >> 6)];
    w = v ? (w | m) : (w & ~m);
  }
  void put_zbit(std::size_t row, std::size_t q, bool v) {
    std::uint64_t m = std::uint64_t{1} << (q & 63);
    auto& w = z_[row * words_ + (q >> 6)];
    w = v ? (w | m) : (w & ~m);
  }

  void zero_row(std::size_t row) {
    for (std::size_t w = 0; w < words_; ++w) {
      x_[row * words_ + w] = 0;
      z_[row * words_ + w] = 0;
    }
    r_[row] = 0;
  }

  void copy_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) {
      x_[dst * words_ + w] = x_[src * words_ + w];
      z_[dst * words_ + w] = z_[src * words_ + w];
    }
    r_[dst] = r_[src];
  }

  // Phase bookkeeping of multiplying row h by row i (left-multiplication of
  // hermitian Paulis; the exponent of i is always even here).
  static int g_fn(int x1, int z1, int x2, int z2) {
    if (!x1 && !z1) return 0;
    if (x1 && z1) return z2 - x2;
    if (x1) return z2 * (2 * x2 - 1);
    return x2 * (1 - 2 * z2);
  }

  void rowsum(std::size_t h, std::size_t i) {
    int t = 2 * r_[h] + 2 * r_[i];
    for (std::size_t q = 0; q < n_; ++q)
      t += g_fn(xbit(i, q), zbit(i, q), xbit(h, q), zbit(h, q));
    t %= 4;
    if (t < 0) t += 4;
    r_[h] = static_cast<std::uint8_t>(t == 2);
    for (std::size_t w = 0; w < words_; ++w) {
      x_[h * words_ + w] ^= x_[i * words_ + w];
      z_[h * words_ + w] ^= z_[i * words_ + w];
    }
  }

  bool anticommutes(std::size_t row, const PauliString& p) const {
    int par = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t px = w < p.x_words().size() ? p.x_words()[w] : 0;
      std::uint64_t pz = w < p.z_words().size() ? p.z_words()[w] : 0;
      par ^= std::popcount(x_[row * words_ + w] & pz) & 1;
      par ^= std::popcount(z_[row * words_ + w] & px) & 1;
    }
    return par;
  }

  PauliString row_pauli(std::size_t row) const {
    PauliString p = PauliString::identity(n_);
    for (std::size_t q = 0; q < n_; ++q) {
      int code = (xbit(row, q) ? 1 : 0) + (zbit(row, q) ? 2 : 0);
      p.set_letter(q, "IXZY"[code]);
    }
    if (r_[row]) p.set_sign(-1);
    return p;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> x_, z_;
  std::vector<std::uint8_t> r_;
};

}  // namespace shadows
