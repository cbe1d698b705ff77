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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "shadows/covering.hpp"

namespace shadows {
namespace {

using Blocks = std::vector<std::vector<std::uint32_t>>;

// number of strings over {I,X,Y,Z} whose support is a union of whole blocks
std::size_t count_compatible(const Covering& c) {
  static const char kLetters[] = "IXYZ";
  const std::size_t n = c.num_qubits();
  std::size_t total = 1;
  for (std::size_t q = 0; q < n; ++q) total *= 4;
  std::size_t hits = 0;
  for (std::size_t word = 0; word < total; ++word) {
    std::string text(n, 'I');
    std::size_t w = word;
    for (std::size_t q = 0; q < n; ++q) {
      text[q] = kLetters[w & 3];
      w >>= 2;
    }
    if (is_compatible(PauliString::from_text(text), c)) ++hits;
  }
  return hits;
}

TEST_CASE("dimer chain shapes", "[covering]") {
  CHECK(dimer_chain(6, Parity::Even).blocks() ==
        Blocks{{0, 1}, {2, 3}, {4, 5}});
  CHECK(dimer_chain(6, Parity::Odd).blocks() ==
        Blocks{{0}, {1, 2}, {3, 4}, {5}});
  CHECK(dimer_chain(6, Parity::Odd, true).blocks() ==
        Blocks{{0, 5}, {1, 2}, {3, 4}});
  CHECK(dimer_chain(5, Parity::Even).blocks() == Blocks{{0, 1}, {2, 3}, {4}});
  CHECK(dimer_chain(5, Parity::Odd).blocks() == Blocks{{0}, {1, 2}, {3, 4}});
  CHECK(dimer_chain(2, Parity::Even).blocks() == Blocks{{0, 1}});
  // periodic even == open even when nothing is left over
  CHECK(dimer_chain(8, Parity::Even, true) == dimer_chain(8, Parity::Even));

  CHECK_THROWS_AS(dimer_chain(1, Parity::Even), std::invalid_argument);
  CHECK_THROWS_AS(dimer_chain(5, Parity::Odd, true), std::invalid_argument);
}

TEST_CASE("n-mer chain shapes", "[covering]") {
  CHECK(n_mer_chain(6, 3).blocks() == Blocks{{0, 1, 2}, {3, 4, 5}});
  CHECK(n_mer_chain(8, 3, 1).blocks() ==
        Blocks{{0}, {1, 2, 3}, {4, 5, 6}, {7}});
  CHECK(n_mer_chain(4, 4).blocks() == Blocks{{0, 1, 2, 3}});
  CHECK(n_mer_chain(3, 2, 2).blocks() == Blocks{{0}, {1}, {2}});

  CHECK_THROWS_AS(n_mer_chain(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(n_mer_chain(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(n_mer_chain(4, 2, 4), std::invalid_argument);
}

TEST_CASE("covering normalizes and validates", "[covering]") {
  Covering c(4, {{3, 2}, {1, 0}});
  CHECK(c.blocks() == Blocks{{0, 1}, {2, 3}});
  CHECK(c.block_of(0) == 0);
  CHECK(c.block_of(3) == 1);
  CHECK(c.max_block_size() == 2);
  CHECK(c == Covering(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(c == Covering(4, {{0, 1, 2}, {3}}));

  CHECK_THROWS_AS(Covering(2, {{0, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Covering(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Covering(2, {{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Covering(3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("covering json round trip", "[covering]") {
  Covering c = dimer_chain(7, Parity::Odd);
  Covering back = Covering::from_json(7, c.to_json());
  CHECK(back == c);
  CHECK(c.to_json().dump() == "[[0],[1,2],[3,4],[5,6]]");
}

TEST_CASE("cut count and compatibility", "[covering]") {
  Covering c = dimer_chain(4, Parity::Even);
  CHECK(cut_count(PauliString::from_text("ZZII"), c) == 0);
  CHECK(cut_count(PauliString::from_text("XYZZ"), c) == 0);
  CHECK(cut_count(PauliString::from_text("IIII"), c) == 0);
  CHECK(cut_count(PauliString::from_text("ZIIZ"), c) == 2);
  CHECK(cut_count(PauliString::from_text("IZZI"), c) == 2);
  CHECK(cut_count(PauliString::from_text("ZZZI"), c) == 1);
  CHECK(is_compatible(PauliString::from_text("YYII"), c));
  CHECK_FALSE(is_compatible(PauliString::from_text("YIII"), c));

  CHECK_THROWS_AS(cut_count(PauliString::from_text("ZZ"), c),
                  std::invalid_argument);
}

TEST_CASE("compatible operator counts are block-local products", "[covering]") {
  // each dimer contributes 1 + 3^2 compatible local patterns, each trimer
  // 1 + 3^3, so the totals factorize over blocks
  for (std::size_t n : {2u, 4u, 6u, 8u}) {
    std::size_t expect = 1;
    for (std::size_t b = 0; b < n / 2; ++b) expect *= 10;
    CHECK(count_compatible(dimer_chain(n, Parity::Even)) == expect);
  }
  CHECK(count_compatible(n_mer_chain(6, 3)) == 28 * 28);
  CHECK(count_compatible(dimer_chain(5, Parity::Even)) == 10 * 10 * 4);
}

TEST_CASE("honeycomb lattice rejects bad parameters", "[covering]") {
  CHECK_THROWS_AS(honeycomb(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(honeycomb(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(honeycomb(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(honeycomb(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(honeycomb(3, -1), std::invalid_argument);
  std::vector<char> five = {'X', 'X', 'Y', 'Y', 'Z'};
  CHECK_THROWS_AS(honeycomb(3, 0, five), std::invalid_argument);
}

TEST_CASE("honeycomb dimer coverings hit two thirds of the faces",
          "[covering]") {
  for (int orientation = 0; orientation < 3; ++orientation) {
    HoneycombLattice lat = honeycomb(3, orientation);
    CHECK(lat.side == 3);
    CHECK(lat.covering.num_qubits() == 18);
    CHECK(lat.covering.blocks().size() == 9);
    CHECK(lat.covering.max_block_size() == 2);
    REQUIRE(lat.plaquettes.size() == 9);

    int compatible = 0;
    for (std::size_t f = 0; f < 9; ++f) {
      const PauliString& p = lat.plaquettes.operators[f];
      CHECK(p.weight() == 6);
      bool ok = is_compatible(p, lat.covering);
      // the covering of one orientation resolves exactly the faces of the
      // other two colours
      CHECK(ok == (lat.face_colors[f] != orientation));
      if (ok) ++compatible;
    }
    CHECK(compatible == 6);
  }

  // every face is picked up by some orientation
  HoneycombLattice lats[3] = {honeycomb(3, 0), honeycomb(3, 1),
                              honeycomb(3, 2)};
  for (std::size_t f = 0; f < 9; ++f) {
    int covered = 0;
    for (const auto& lat : lats)
      if (is_compatible(lats[0].plaquettes.operators[f], lat.covering))
        ++covered;
    CHECK(covered == 2);
  }

  // colours are balanced
  std::array<int, 3> counts = {0, 0, 0};
  for (int col : lats[0].face_colors) counts[col] += 1;
  CHECK(counts == std::array<int, 3>{3, 3, 3});
}

TEST_CASE("honeycomb plaquette letters follow the face cycle", "[covering]") {
  std::vector<char> letters = {'X', 'Y', 'Z', 'X', 'Y', 'Z'};
  HoneycombLattice lat = honeycomb(3, 1, letters);
  for (std::size_t f = 0; f < lat.face_sites.size(); ++f) {
    const auto& cyc = lat.face_sites[f];
    const PauliString& p = lat.plaquettes.operators[f];
    for (std::size_t j = 0; j < 6; ++j) CHECK(p.letter(cyc[j]) == letters[j]);
  }
  // default is all-Z
  HoneycombLattice plain = honeycomb(3, 1);
  for (const auto& p : plain.plaquettes.operators)
    for (std::size_t q : p.support()) CHECK(p.letter(q) == 'Z');
}

TEST_CASE("operator set validation", "[covering]") {
  OperatorSet set;
  set.add(PauliString::from_text("ZZ"), "a");
  set.add(PauliString::from_text("XY"), "b");
  CHECK(set.size() == 2);
  CHECK_NOTHROW(set.validate());

  set.add(PauliString::from_text("XYZ"), "c");
  CHECK_THROWS_AS(set.validate(), std::invalid_argument);

  OperatorSet skew;
  skew.operators.push_back(PauliString::from_text("ZZ"));
  CHECK_THROWS_AS(skew.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace shadows
