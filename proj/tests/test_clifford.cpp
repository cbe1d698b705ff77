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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <set>

#include "shadows/clifford.hpp"
#include "shadows/dense.hpp"
#include "shadows/protocol.hpp"

namespace shadows {
namespace {

using detail::Mat2;
using detail::mat_adj;
using detail::mat_mul;

double mat_dist(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// distance modulo global phase, via |tr(a^dag b)| = 2
double phase_dist(const Mat2& a, const Mat2& b) {
  Mat2 p = mat_mul(mat_adj(a), b);
  return std::abs(2.0 - std::abs(p[0] + p[3]));
}

TEST_CASE("clifford table has 24 distinct unitaries", "[clifford]") {
  const auto& table = clifford_table();
  REQUIRE(table.size() == kNumCliffords);

  CHECK(table[0].word.empty());
  CHECK(mat_dist(table[0].u, Mat2{1.0, 0.0, 0.0, 1.0}) < 1e-12);

  for (std::size_t i = 0; i < kNumCliffords; ++i) {
    // unitary: u u^dag = 1
    Mat2 prod = mat_mul(table[i].u, mat_adj(table[i].u));
    CHECK(mat_dist(prod, Mat2{1.0, 0.0, 0.0, 1.0}) < 1e-12);
    // distinct modulo phase from every other entry
    for (std::size_t j = i + 1; j < kNumCliffords; ++j)
      CHECK(phase_dist(table[i].u, table[j].u) > 1e-3);
  }

  // words are BFS-ordered: lengths never decrease, H before S at each length
  for (std::size_t i = 0; i + 1 < kNumCliffords; ++i)
    CHECK(table[i].word.size() <= table[i + 1].word.size());
  CHECK(table[1].word == "H");
  CHECK(table[2].word == "S");
}

TEST_CASE("clifford pauli images match conjugation", "[clifford]") {
  const Mat2 kPaulis[4] = {
      Mat2{1.0, 0.0, 0.0, 1.0},
      Mat2{0.0, 1.0, 1.0, 0.0},
      Mat2{1.0, 0.0, 0.0, -1.0},
      Mat2{0.0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0.0},
  };
  const auto& table = clifford_table();
  for (const CliffordGate& g : table) {
    CHECK(g.image[0].code == 0);
    CHECK(g.image[0].sign == 1);
    for (std::size_t p = 0; p < 4; ++p) {
      Mat2 lhs = mat_mul(mat_mul(g.u, kPaulis[p]), mat_adj(g.u));
      Mat2 rhs = kPaulis[g.image[p].code];
      for (auto& e : rhs) e *= static_cast<double>(g.image[p].sign);
      CHECK(mat_dist(lhs, rhs) < 1e-9);
    }
    // conjugation permutes {X, Z, Y}
    std::set<int> codes = {g.image[1].code, g.image[2].code, g.image[3].code};
    CHECK(codes == std::set<int>{1, 2, 3});
  }

  // H: X<->Z, Y -> -Y
  const CliffordGate& h = table[1];
  CHECK((h.image[1].code == 2 && h.image[1].sign == 1));
  CHECK((h.image[2].code == 1 && h.image[2].sign == 1));
  CHECK((h.image[3].code == 3 && h.image[3].sign == -1));
  // S: X -> Y, Z -> Z, Y -> -X
  const CliffordGate& s = table[2];
  CHECK((s.image[1].code == 3 && s.image[1].sign == 1));
  CHECK((s.image[2].code == 2 && s.image[2].sign == 1));
  CHECK((s.image[3].code == 1 && s.image[3].sign == -1));
}

TEST_CASE("clifford table closes under multiplication", "[clifford]") {
  const auto& table = clifford_table();
  for (std::size_t i = 0; i < kNumCliffords; ++i) {
    for (std::size_t j = 0; j < kNumCliffords; ++j) {
      Mat2 prod = mat_mul(table[i].u, table[j].u);
      int matches = 0;
      for (std::size_t k = 0; k < kNumCliffords; ++k)
        if (phase_dist(prod, table[k].u) < 1e-6) ++matches;
      REQUIRE(matches == 1);
    }
  }
}

TEST_CASE("clifford words replay through the statevector", "[clifford]") {
  // `word` lists gates in application order, so the matrix is the reversed
  // product; check by acting on both basis states.
  const auto& table = clifford_table();
  for (std::size_t i = 0; i < kNumCliffords; ++i) {
    for (int b = 0; b < 2; ++b) {
      DenseState st(1, {b == 0 ? 1.0 : 0.0, b == 0 ? 0.0 : 1.0});
      for (char g : table[i].word) {
        if (g == 'H')
          st.apply_h(0);
        else
          st.apply_s(0);
      }
      std::complex<double> want0 = table[i].u[0 + b];
      std::complex<double> want1 = table[i].u[2 + b];
      // compare modulo the global phase the table may carry
      std::complex<double> got0 = st.amplitudes()[0];
      std::complex<double> got1 = st.amplitudes()[1];
      std::complex<double> ref{1.0, 0.0};
      if (std::abs(want0) > 1e-9)
        ref = got0 / want0;
      else if (std::abs(want1) > 1e-9)
        ref = got1 / want1;
      CHECK(std::abs(std::abs(ref) - 1.0) < 1e-9);
      CHECK(std::abs(got0 - ref * want0) < 1e-9);
      CHECK(std::abs(got1 - ref * want1) < 1e-9);
    }
  }
}

TEST_CASE("gate kind clifford1 matches the table entry", "[clifford]") {
  // applying Gate{Clifford1, q, table_index} must equal replaying the word
  for (std::size_t idx : {0u, 1u, 2u, 7u, 23u}) {
    DenseState via_gate(2);
    via_gate.apply_h(1);  // make the state non-trivial on both qubits
    DenseState via_word = via_gate;

    via_gate.apply_gate(
        Gate{Gate::Kind::Clifford1, 0, 0, 0.0,
             static_cast<std::uint32_t>(idx)});
    for (char g : clifford_table()[idx].word) {
      if (g == 'H')
        via_word.apply_h(0);
      else
        via_word.apply_s(0);
    }
    for (std::size_t a = 0; a < 4; ++a)
      CHECK(std::abs(via_gate.amplitudes()[a] - via_word.amplitudes()[a]) <
            1e-12);
  }
}

}  // namespace
}  // namespace shadows
