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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shadows {

inline constexpr std::size_t kNumCliffords = 24;

// The single-qubit Clifford group, 24 elements modulo global phase.
//
// Index assignment is part of the dataset wire format and must never change:
// enumerate words over the generators {H, S} breadth-first (shorter words
// first; at equal length H-branches before S-branches), keeping each unitary
// the first time it appears up to global phase. Index 0 is the identity
// (empty word). `word` lists gates in application order (leftmost acts
// first).
struct CliffordGate {
  std::string word;
  std::array<std::complex<double>, 4> u;  // row-major 2x2

  // Conjugation action on Paulis: u sigma_p u^dag = sign * sigma_image.
  // Pauli codes: 0=I, 1=X, 2=Z, 3=Y (code = x + 2z).
  struct PauliImage {
    std::uint8_t code = 0;
    std::int8_t sign = 1;
  };
  std::array<PauliImage, 4> image;
};

namespace detail {

using c64 = std::complex<double>;
using Mat2 = std::array<c64, 4>;

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 mat_adj(const Mat2& a) {
  return Mat2{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]),
              std::conj(a[3])};
}

// Key that identifies a 2x2 unitary up to global phase: rotate so the first
// entry with magnitude > 1e-6 is real positive, then round to a coarse grid.
inline std::array<std::int64_t, 8> phase_canonical_key(const Mat2& m) {
  c64 ref{1.0, 0.0};
  for (const c64& e : m) {
    if (std::abs(e) > 1e-6) {
      ref = e / std::abs(e);
      break;
    }
  }
  std::array<std::int64_t, 8> key{};
  for (std::size_t i = 0; i < 4; ++i) {
    c64 v = m[i] / ref;
    key[2 * i] = std::llround(v.real() * 1e6);
    key[2 * i + 1] = std::llround(v.imag() * 1e6);
  }
  return key;
}

inline std::array<CliffordGate, 24> build_clifford_table() {
  const double s = 1.0 / std::sqrt(2.0);
  const Mat2 kI{c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{1, 0}};
  const Mat2 kH{c64{s, 0}, c64{s, 0}, c64{s, 0}, c64{-s, 0}};
  const Mat2 kS{c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{0, 1}};

  std::vector<std::pair<std::string, Mat2>> found;
  std::map<std::array<std::int64_t, 8>, std::size_t> seen;
  found.emplace_back("", kI);
  seen[phase_canonical_key(kI)] = 0;
  for (std::size_t head = 0; head < found.size() && found.size() < 24;
       ++head) {
    for (char g : {'H', 'S'}) {
      const Mat2& gate = g == 'H' ? kH : kS;
      Mat2 m = mat_mul(gate, found[head].second);  // g applied after the word
      auto key = phase_canonical_key(m);
      if (seen.contains(key)) continue;
      seen[key] = found.size();
      found.emplace_back(found[head].first + g, m);
      if (found.size() == 24) break;
    }
  }
  if (found.size() != 24)
    throw std::logic_error("clifford_table: enumeration did not close at 24");

  const std::array<Mat2, 4> paulis = {
      kI,
      Mat2{c64{0, 0}, c64{1, 0}, c64{1, 0}, c64{0, 0}},   // X
      Mat2{c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{-1, 0}},  // Z
      Mat2{c64{0, 0}, c64{0, -1}, c64{0, 1}, c64{0, 0}},  // Y
  };

  std::array<CliffordGate, 24> table;
  for (std::size_t i = 0; i < 24; ++i) {
    table[i].word = found[i].first;
    table[i].u = found[i].second;
    for (std::size_t p = 0; p < 4; ++p) {
      Mat2 m = mat_mul(mat_mul(table[i].u, paulis[p]), mat_adj(table[i].u));
      bool matched = false;
      for (std::size_t q = 0; q < 4 && !matched; ++q) {
        for (int sign : {+1, -1}) {
          double err = 0.0;
          for (std::size_t e = 0; e < 4; ++e)
            err += std::abs(m[e] - static_cast<double>(sign) * paulis[q][e]);
          if (err < 1e-9) {
            table[i].image[p] = {static_cast<std::uint8_t>(q),
                                 static_cast<std::int8_t>(sign)};
            matched = true;
            break;
          }
        }
      }
      if (!matched)
        throw std::logic_error("clifford_table: conjugation left Pauli group");
    }
  }
  return table;
}

}  // namespace detail

inline const std::array<CliffordGate, 24>& clifford_table() {
  static const std::array<CliffordGate, 24> table =
      detail::build_clifford_table();
  return table;
}

}  // namespace shadows
