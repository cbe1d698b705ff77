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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shadows/common.hpp"

namespace shadows {

// N-qubit Pauli operator in symplectic form: one (x, z) bit pair per qubit
// (I=00, X=10, Z=01, Y=11) plus an overall sign in {+1, -1}. Phases +-i never
// appear in a stored operator; they only occur transiently inside products.
//
// Text form: optional leading '-' (or '+'), then one of I/X/Y/Z per site with
// site 0 leftmost, e.g. "ZZII" or "-XYZI".
class PauliString {
 public:
  PauliString() = default;

  explicit PauliString(std::size_t num_qubits)
      : n_(num_qubits),
        x_(word_count(num_qubits), 0),
        z_(word_count(num_qubits), 0) {}

  static PauliString identity(std::size_t num_qubits) {
    return PauliString(num_qubits);
  }

  static PauliString from_text(std::string_view text) {
    int sign = +1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
      sign = text.front() == '-' ? -1 : +1;
      text.remove_prefix(1);
    }
    if (text.empty())
      throw std::invalid_argument("PauliString: empty text form");
    PauliString p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) p.set_letter(q, text[q]);
    p.sign_ = sign;
    return p;
  }

  static PauliString single(std::size_t num_qubits, std::size_t site,
                            char letter, int sign = +1) {
    PauliString p(num_qubits);
    p.set_letter(site, letter);
    p.set_sign(sign);
    return p;
  }

  std::size_t num_qubits() const { return n_; }

  int sign() const { return sign_; }

  void set_sign(int s) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("PauliString: sign must be +1 or -1");
    sign_ = s;
  }

  bool x_bit(std::size_t q) const {
    check_site(q);
    return (x_[q >> 6] >> (q & 63)) & 1;
  }

  bool z_bit(std::size_t q) const {
    check_site(q);
    return (z_[q >> 6] >> (q & 63)) & 1;
  }

  char letter(std::size_t q) const {
    bool x = x_bit(q), z = z_bit(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }

  void set_letter(std::size_t q, char letter) {
    check_site(q);
    bool x, z;
    switch (letter) {
      case 'I': x = false; z = false; break;
      case 'X': x = true; z = false; break;
      case 'Y': x = true; z = true; break;
      case 'Z': x = false; z = true; break;
      default:
        throw std::invalid_argument(
            std::string("PauliString: invalid letter '") + letter + "'");
    }
    set_bit(x_, q, x);
    set_bit(z_, q, z);
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x_.size(); ++i)
      w += std::popcount(x_[i] | z_[i]);
    return w;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    s.reserve(weight());
    for (std::size_t q = 0; q < n_; ++q)
      if (((x_[q >> 6] | z_[q >> 6]) >> (q & 63)) & 1) s.push_back(q);
    return s;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < x_.size(); ++i)
      if (x_[i] | z_[i]) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    out.reserve(n_ + 1);
    if (sign_ < 0) out.push_back('-');
    for (std::size_t q = 0; q < n_; ++q) out.push_back(letter(q));
    return out;
  }

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  void check_site(std::size_t q) const {
    if (q >= n_) throw std::invalid_argument("PauliString: site out of range");
  }

  static void set_bit(std::vector<std::uint64_t>& words, std::size_t q,
                      bool v) {
    if (v)
      words[q >> 6] |= std::uint64_t{1} << (q & 63);
    else
      words[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_, z_;
  int sign_ = +1;
};

// lhs * rhs == i^phase_exponent * value, where value carries sign +1.
// phase_exponent is reduced mod 4; odd values mean the product is
// anti-Hermitian (a +-i phase) and cannot be stored as a PauliString sign.
struct PauliProduct {
  PauliString value;
  int phase_exponent = 0;
  bool hermitian() const { return phase_exponent % 2 == 0; }
};

inline PauliProduct multiply_tracked(const PauliString& a,
                                     const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("multiply: size mismatch");
  const std::size_t n = a.num_qubits();
  PauliString out(n);
  int t = (a.sign() < 0 ? 2 : 0) + (b.sign() < 0 ? 2 : 0);
  for (std::size_t q = 0; q < n; ++q) {
    int x1 = a.x_bit(q), z1 = a.z_bit(q);
    int x2 = b.x_bit(q), z2 = b.z_bit(q);
    // sigma(x,z) = i^{xz} X^x Z^z; collect the i-exponent of the product.
    t += x1 * z1 + x2 * z2 + 2 * (z1 & x2) - (x1 ^ x2) * (z1 ^ z2);
    int xo = x1 ^ x2, zo = z1 ^ z2;
    if (xo || zo) out.set_letter(q, xo && zo ? 'Y' : (xo ? 'X' : 'Z'));
  }
  t = ((t % 4) + 4) % 4;
  return PauliProduct{out, t};
}

// Hermitian product only; a +-i phase is rejected so the caller decides how
// to handle anti-Hermitian combinations (see multiply_tracked).
inline PauliString multiply(const PauliString& a, const PauliString& b) {
  PauliProduct p = multiply_tracked(a, b);
  if (!p.hermitian())
    throw std::invalid_argument(
        "multiply: product carries a +-i phase; use multiply_tracked");
  if (p.phase_exponent == 2) p.value.set_sign(-1);
  return p.value;
}

inline bool commutes(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("commutes: size mismatch");
  std::uint64_t parity = 0;
  const auto& ax = a.x_words();
  const auto& az = a.z_words();
  const auto& bx = b.x_words();
  const auto& bz = b.z_words();
  for (std::size_t i = 0; i < ax.size(); ++i)
    parity ^= static_cast<std::uint64_t>(std::popcount(ax[i] & bz[i]) ^
                                         std::popcount(az[i] & bx[i]));
  return (parity & 1) == 0;
}

}  // namespace shadows
