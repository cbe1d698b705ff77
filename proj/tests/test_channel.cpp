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
#include <numbers>
#include <vector>

#include "shadows/channel.hpp"
#include "shadows/common.hpp"
#include "shadows/covering.hpp"

namespace shadows {
namespace {

TEST_CASE("fractions reduce and print", "[common]") {
  CHECK(Fraction::of(6, 18).str() == "1/3");
  CHECK(Fraction::of(2, -4).str() == "-1/2");
  CHECK(Fraction::of(0, 7).str() == "0/1");
  CHECK(Fraction::of(6, 18) == Fraction::of(1, 3));
  CHECK(Fraction::of(4, 2).value() == 2.0);
  CHECK_FALSE(Fraction{}.valid());
  CHECK(Fraction::of(1, 3).valid());
  CHECK_THROWS_AS(Fraction::of(1, 0), std::invalid_argument);
}

TEST_CASE("double formatting is locale-free and round-trips", "[common]") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-3.0) == "-3");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(std::stod(format_double(std::numbers::ln2)) == std::numbers::ln2);
}

TEST_CASE("pairwise summation", "[common]") {
  std::vector<double> v(1000, 0.1);
  CHECK(std::abs(pairwise_sum(v) - 100.0) < 1e-11);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  CHECK(pairwise_sum(std::vector<double>{42.0}) == 42.0);
}

TEST_CASE("parallel chunks cover the range exactly once", "[common]") {
  for (std::size_t workers : {1u, 3u, 8u}) {
    std::vector<int> marks(103, 0);
    parallel_for_chunks(marks.size(), workers,
                        [&](std::size_t lo, std::size_t hi) {
                          for (std::size_t i = lo; i < hi; ++i) marks[i] += 1;
                        });
    for (int m : marks) REQUIRE(m == 1);
  }
}

TEST_CASE("pattern text rendering", "[channel]") {
  CHECK(pattern_text(0b101, 3) == "•∘•");
  CHECK(pattern_text(0, 2) == "∘∘");
  CHECK(pattern_text(3, 2) == "••");
}

TEST_CASE("single-qubit and pair eigenvalue tables", "[channel]") {
  BlockEigenvalues pauli = pauli_block_eigs();
  CHECK(pauli.block_size == 1);
  CHECK(pauli.lambda == std::vector<double>{1.0, 1.0 / 3.0});
  CHECK(pauli.exact[1] == Fraction::of(1, 3));

  BlockEigenvalues bell = bell_block_eigs();
  CHECK(bell.block_size == 2);
  CHECK(bell.lambda == std::vector<double>{1.0, 0.0, 0.0, 1.0 / 3.0});
  CHECK(bell.exact[3] == Fraction::of(1, 3));

  CHECK(bell.at(3) == 1.0 / 3.0);
  CHECK_THROWS_AS(bell.at(4), std::invalid_argument);
}

TEST_CASE("tunable table hits both endpoints exactly", "[channel]") {
  // delta = 0 reproduces the maximally entangled pair table bit for bit
  CHECK(tunable_block_eigs(0.0).lambda == bell_block_eigs().lambda);
  // delta = ln 2 is two independent scrambled qubits
  CHECK(tunable_block_eigs(max_tunable_delta()).lambda ==
        std::vector<double>{1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 9.0});

  CHECK_THROWS_AS(tunable_block_eigs(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(tunable_block_eigs(0.8), std::invalid_argument);
}

TEST_CASE("tunable table at delta = ln(11/8)", "[channel]") {
  BlockEigenvalues e = tunable_block_eigs(std::log(11.0 / 8.0));
  CHECK(e.lambda[0] == 1.0);
  CHECK(std::abs(e.lambda[1] - 0.125) < 1e-15);
  CHECK(std::abs(e.lambda[2] - 0.125) < 1e-15);
  CHECK(std::abs(e.lambda[3] - 0.25) < 1e-15);
}

TEST_CASE("entanglement feature validation", "[channel]") {
  EntanglementFeature ok = ghz_entanglement_feature(3);
  CHECK_NOTHROW(ok.validate());

  EntanglementFeature bad = ok;
  bad.purity.pop_back();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = ok;
  bad.purity[0] = 0.9;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = ok;  // singleton below its 1/2 floor
  bad.purity[1] = bad.purity[6] = 0.3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = ok;  // complement symmetry broken
  bad.purity[1] = 0.8;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  CHECK_THROWS_AS(ghz_entanglement_feature(1), std::invalid_argument);
  CHECK_THROWS_AS(ghz_entanglement_feature(21), guard_error);
}

TEST_CASE("entanglement feature map reproduces the basic tables",
          "[channel]") {
  // product basis: all purities 1 -> independent scrambled qubits
  EntanglementFeature prod;
  prod.block_size = 2;
  prod.purity = {1.0, 1.0, 1.0, 1.0};
  BlockEigenvalues e = ef_to_eigs(prod);
  CHECK(std::abs(e.at(1) - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(e.at(2) - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(e.at(3) - 1.0 / 9.0) < 1e-15);

  // maximally entangled pair: ghz feature with n = 2
  BlockEigenvalues pair = ef_to_eigs(ghz_entanglement_feature(2));
  CHECK(pair.at(0) == 1.0);
  CHECK(pair.at(1) == 0.0);
  CHECK(pair.at(2) == 0.0);
  CHECK(std::abs(pair.at(3) - 1.0 / 3.0) < 1e-15);

  // a feature that validates but implies a negative eigenvalue is rejected
  EntanglementFeature evil;
  evil.block_size = 3;
  evil.purity = {1.0, 1.0, 1.0, 0.5, 0.5, 1.0, 1.0, 1.0};
  CHECK_NOTHROW(evil.validate());
  CHECK_THROWS_AS(ef_to_eigs(evil), std::invalid_argument);
}

TEST_CASE("ghz block eigenvalues", "[channel]") {
  // n = 2 must coincide with the pair table
  BlockEigenvalues g2 = ghz_block_eigs(2);
  BlockEigenvalues bell = bell_block_eigs();
  for (std::uint32_t m = 0; m < 4; ++m) {
    CHECK(std::abs(g2.at(m) - bell.at(m)) < 1e-15);
    CHECK(g2.exact[m] == bell.exact[m]);
  }

  BlockEigenvalues g3 = ghz_block_eigs(3);
  CHECK(g3.exact[7] == Fraction::of(4, 27));
  CHECK(std::abs(g3.at(7) - 4.0 / 27.0) < 1e-15);
  // proper odd subsets vanish, proper even subsets keep (1/3)^|A|
  CHECK(g3.at(1) == 0.0);
  CHECK(g3.at(2) == 0.0);
  CHECK(g3.at(4) == 0.0);
  CHECK(std::abs(g3.at(3) - 1.0 / 9.0) < 1e-15);
  CHECK(std::abs(g3.at(5) - 1.0 / 9.0) < 1e-15);
  CHECK(g3.exact[3] == Fraction::of(1, 9));
  CHECK(g3.exact[1] == Fraction::of(0, 1));

  BlockEigenvalues g4 = ghz_block_eigs(4);
  CHECK(g4.exact[15] == Fraction::of(1, 9));
  CHECK(g4.at(7) == 0.0);
  CHECK(std::abs(g4.at(0b0011) - 1.0 / 9.0) < 1e-15);
  CHECK(std::abs(g4.at(0b1111) - 1.0 / 9.0) < 1e-15);

  // closed form for the full pattern, doubles vs exact fractions
  for (std::size_t n = 2; n <= 12; ++n) {
    BlockEigenvalues g = ghz_block_eigs(n);
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    double closed = ghz_full_pattern_eigenvalue(n);
    CHECK(std::abs(g.at(full) - closed) < 1e-14 * closed + 1e-15);
    REQUIRE(g.exact[full].valid());
    CHECK(std::abs(g.exact[full].value() - closed) < 1e-15);
  }

  CHECK_THROWS_AS(ghz_block_eigs(21), guard_error);
  CHECK_THROWS_AS(ghz_full_pattern_eigenvalue(1), std::invalid_argument);
}

TEST_CASE("per-site scaling factor", "[channel]") {
  CHECK(scaling_factor(1) == 3.0);
  CHECK(std::abs(scaling_factor(2) - std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(scaling_factor(3) - 3.0 / std::cbrt(4.0)) < 1e-14);
  // the two-site and four-site factors coincide: 3/sqrt(3) = 3/9^(1/4)
  CHECK(std::abs(scaling_factor(2) - scaling_factor(4)) < 1e-15);

  // f_n is the n-th root of the inverse full-pattern eigenvalue
  for (std::size_t n = 2; n <= 12; ++n) {
    double lhs = std::pow(scaling_factor(n), static_cast<double>(n));
    double rhs = 1.0 / ghz_full_pattern_eigenvalue(n);
    CHECK(std::abs(lhs - rhs) < 1e-11 * rhs);
  }

  // per parity branch the factor strictly decreases past n = 4
  for (std::size_t n = 4; n + 2 <= 64; ++n)
    CHECK(scaling_factor(n + 2) < scaling_factor(n));
  CHECK(scaling_factor(3) < scaling_factor(1));

  // every entangled stabilizer basis stays above the 3/2 cost floor
  for (std::size_t n = 1; n <= 64; ++n) CHECK(stabilizer_bound_check(n));

  CHECK_THROWS_AS(scaling_factor(0), std::invalid_argument);
}

TEST_CASE("phase-to-delta calibration", "[channel]") {
  // mean single-site purity of the phase basis is (3 + cos phi) / 4
  for (double phi : {0.0, 0.3, 1.0, std::numbers::pi / 2, 2.5,
                     std::numbers::pi}) {
    CHECK(std::abs(cphase_basis_mean_purity(phi) -
                   (3.0 + std::cos(phi)) / 4.0) < 1e-12);
  }
  CHECK(std::abs(delta_from_phi(std::numbers::pi)) < 1e-12);
  CHECK(std::abs(delta_from_phi(0.0) - std::numbers::ln2) < 1e-12);
  CHECK(std::abs(delta_from_phi(std::numbers::pi / 2) - std::log(1.5)) <
        1e-12);

  CHECK(phi_from_delta(0.0) == std::numbers::pi);
  CHECK(phi_from_delta(max_tunable_delta()) == 0.0);
  for (double delta : {0.05, 0.2, std::log(1.5), 0.6}) {
    CHECK(std::abs(delta_from_phi(phi_from_delta(delta)) - delta) < 1e-12);
  }

  CHECK_THROWS_AS(cphase_basis_mean_purity(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(cphase_basis_mean_purity(4.0), std::invalid_argument);
  CHECK_THROWS_AS(phi_from_delta(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(phi_from_delta(0.8), std::invalid_argument);
}

TEST_CASE("shadow norm multiplies over touched blocks", "[channel]") {
  Covering cov = dimer_chain(6, Parity::Even);
  ChannelEigenvalues eigs;
  for (std::size_t b = 0; b < 3; ++b) eigs.blocks.push_back(bell_block_eigs());

  auto norm = [&](const char* text) {
    return shadow_norm_sq(PauliString::from_text(text), cov, eigs, "pairs");
  };

  CHECK(norm("IIIIII").value == 1.0);
  CHECK(std::abs(norm("ZZIIII").value - 3.0) < 1e-12);
  CHECK(std::abs(norm("ZZXXII").value - 9.0) < 1e-12);
  CHECK(std::abs(norm("ZZXXYY").value - 27.0) < 1e-12);
  // only the pattern matters, not the letters
  CHECK(norm("XXIIII").value == norm("ZYIIII").value);
  // a cut block makes the operator unlearnable
  ShadowNorm cut = norm("ZIIIII");
  CHECK(cut.unlearnable);
  CHECK(std::isnan(cut.value));
  CHECK(cut.protocol_label == "pairs");
  CHECK(cut.operator_label == "ZIIIII");
  CHECK(cut.to_json()["norm_sq"] == "UNLEARNABLE");

  CHECK_THROWS_AS(shadow_norm_sq(PauliString::from_text("ZZ"), cov, eigs),
                  std::invalid_argument);
  ChannelEigenvalues short_table;
  short_table.blocks.push_back(bell_block_eigs());
  CHECK_THROWS_AS(
      shadow_norm_sq(PauliString::from_text("ZZIIII"), cov, short_table),
      std::invalid_argument);
}

TEST_CASE("sample budgets", "[channel]") {
  ShadowNorm one{5.0, false, "a", "p"};
  std::vector<ShadowNorm> single = {one};
  // ln 1 = 0: floored at one shot
  CHECK(sample_budget(single, 1.0) == 1);

  std::vector<ShadowNorm> set;
  for (int i = 0; i < 18; ++i) set.push_back(ShadowNorm{27.0, false, "", ""});
  CHECK(sample_budget(set, 0.1) == 7805);
  CHECK(sample_budget_split({set, set}, 0.1) == 15610);

  CHECK_THROWS_AS(sample_budget({}, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(sample_budget(single, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sample_budget(single, -1.0), std::invalid_argument);
  std::vector<ShadowNorm> broken = set;
  broken.push_back(ShadowNorm{0.0, true, "x", "p"});
  CHECK_THROWS_AS(sample_budget(broken, 0.1), unlearnable_error);
}

}  // namespace
}  // namespace shadows
