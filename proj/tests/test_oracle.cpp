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
#include <numbers>
#include <vector>

#include "shadows/channel.hpp"
#include "shadows/dense.hpp"
#include "shadows/oracle.hpp"
#include "shadows/protocol.hpp"

namespace shadows {
namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// tr(rho_S^2) of the reduced state on the sites in `mask`
double subsystem_purity(const DenseState& st, std::uint32_t mask) {
  const auto& amp = st.amplitudes();
  const std::size_t n = st.num_qubits();
  std::vector<std::size_t> in_sites, out_sites;
  for (std::size_t q = 0; q < n; ++q)
    ((mask >> q) & 1 ? in_sites : out_sites).push_back(q);
  const std::size_t ds = std::size_t{1} << in_sites.size();
  const std::size_t de = std::size_t{1} << out_sites.size();
  auto weave = [&](std::size_t s, std::size_t e) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < in_sites.size(); ++j)
      i |= ((s >> j) & 1) << in_sites[j];
    for (std::size_t j = 0; j < out_sites.size(); ++j)
      i |= ((e >> j) & 1) << out_sites[j];
    return i;
  };
  double purity = 0.0;
  for (std::size_t a = 0; a < ds; ++a) {
    for (std::size_t b = 0; b < ds; ++b) {
      std::complex<double> rho = 0.0;
      for (std::size_t e = 0; e < de; ++e)
        rho += amp[weave(a, e)] * std::conj(amp[weave(b, e)]);
      purity += std::norm(rho);
    }
  }
  return purity;
}

// eigenvalue table predicted from the measured mean subsystem purities of
// an actual basis
BlockEigenvalues eigs_from_measured_feature(
    const std::vector<DenseState>& basis) {
  const std::size_t n = basis.front().num_qubits();
  EntanglementFeature ef;
  ef.block_size = n;
  ef.purity.assign(std::size_t{1} << n, 0.0);
  for (std::uint32_t m = 0; m < ef.purity.size(); ++m) {
    double mean = 0.0;
    for (const auto& v : basis) mean += subsystem_purity(v, m);
    ef.purity[m] = mean / static_cast<double>(basis.size());
  }
  return ef_to_eigs(ef);
}

TEST_CASE("basis orthonormality check", "[oracle]") {
  for (auto family : {BasisFamily::Bell, BasisFamily::Ghz})
    CHECK_NOTHROW(oracle_check_basis(block_basis_states(family, 2)));
  CHECK_NOTHROW(oracle_check_basis(block_basis_states(BasisFamily::Ghz, 3)));
  CHECK_NOTHROW(oracle_check_basis(
      block_basis_states(BasisFamily::TunablePhase, 2, 0.7)));

  CHECK_THROWS_AS(oracle_check_basis({}), std::invalid_argument);

  // incomplete basis
  std::vector<DenseState> two = {DenseState(2), DenseState(2)};
  CHECK_THROWS_AS(oracle_check_basis(two), std::invalid_argument);

  // complete but not orthogonal
  std::vector<DenseState> skew = {
      DenseState(1, {1.0, 0.0}), DenseState(1, {kInvSqrt2, kInvSqrt2})};
  CHECK_THROWS_AS(oracle_check_basis(skew), std::invalid_argument);
}

TEST_CASE("oracle reproduces the single-qubit table", "[oracle]") {
  auto basis = block_basis_states(BasisFamily::PauliLocal, 1);
  CHECK(std::abs(oracle_block_eig(basis, 0) - 1.0) < 1e-12);
  CHECK(std::abs(oracle_block_eig(basis, 1) - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("oracle reproduces the product-pair table", "[oracle]") {
  // computational basis on two qubits = two independent scrambled qubits
  std::vector<DenseState> basis;
  for (int b = 0; b < 4; ++b) {
    std::vector<std::complex<double>> amp(4, 0.0);
    amp[b] = 1.0;
    basis.emplace_back(2, amp);
  }
  CHECK(std::abs(oracle_block_eig(basis, 1) - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(oracle_block_eig(basis, 2) - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(oracle_block_eig(basis, 3) - 1.0 / 9.0) < 1e-12);
}

TEST_CASE("oracle reproduces the entangled-pair table", "[oracle]") {
  auto basis = block_basis_states(BasisFamily::Bell, 2);
  BlockEigenvalues bell = bell_block_eigs();
  for (std::uint32_t m = 0; m < 4; ++m)
    CHECK(std::abs(oracle_block_eig(basis, m) - bell.at(m)) < 1e-12);

  // one scrambler per pair is enough for a maximally entangled basis
  for (std::uint32_t m = 0; m < 4; ++m)
    CHECK(std::abs(oracle_block_eig(basis, m, ScrambleMode::OnePerBlock) -
                   bell.at(m)) < 1e-12);
}

TEST_CASE("oracle eigenvalues ignore the pauli letters", "[oracle]") {
  auto basis = block_basis_states(BasisFamily::Bell, 2);
  // codes: 0=I 1=X 2=Z 3=Y
  double zz = oracle_block_eig_letters(basis, {2, 2});
  CHECK(std::abs(oracle_block_eig_letters(basis, {1, 2}) - zz) < 1e-12);
  CHECK(std::abs(oracle_block_eig_letters(basis, {3, 1}) - zz) < 1e-12);
  CHECK(std::abs(oracle_block_eig_letters(basis, {1, 0}) -
                 oracle_block_eig_letters(basis, {2, 0})) < 1e-12);

  CHECK_THROWS_AS(oracle_block_eig_letters(basis, {2}),
                  std::invalid_argument);
}

TEST_CASE("oracle reproduces the three-site stabilizer table", "[oracle]") {
  auto basis = block_basis_states(BasisFamily::Ghz, 3);
  BlockEigenvalues g3 = ghz_block_eigs(3);
  for (std::uint32_t m : {7u, 3u, 1u})
    CHECK(std::abs(oracle_block_eig(basis, m) - g3.at(m)) < 1e-12);
}

TEST_CASE("oracle matches the phase-basis analytics", "[oracle]") {
  for (double phi : {0.0, std::numbers::pi / 2, std::numbers::pi}) {
    auto basis = block_basis_states(BasisFamily::TunablePhase, 2, phi);
    BlockEigenvalues analytic = tunable_block_eigs(delta_from_phi(phi));
    BlockEigenvalues via_feature = eigs_from_measured_feature(basis);
    for (std::uint32_t m = 1; m < 4; ++m) {
      double direct = oracle_block_eig(basis, m);
      CHECK(std::abs(direct - analytic.at(m)) < 1e-12);
      CHECK(std::abs(via_feature.at(m) - analytic.at(m)) < 1e-12);
    }
    // the measured mean single-site purity is (3 + cos phi) / 4
    double mean = 0.0;
    for (const auto& v : basis) mean += subsystem_purity(v, 1);
    CHECK(std::abs(mean / 4.0 - cphase_basis_mean_purity(phi)) < 1e-12);
  }
}

TEST_CASE("oracle guards", "[oracle]") {
  // four-qubit basis: over the brute-force cap
  std::vector<DenseState> big;
  for (int b = 0; b < 16; ++b) {
    std::vector<std::complex<double>> amp(16, 0.0);
    amp[b] = 1.0;
    big.emplace_back(4, amp);
  }
  CHECK_THROWS_AS(oracle_block_eig(big, 1), guard_error);

  auto basis = block_basis_states(BasisFamily::Bell, 2);
  CHECK_THROWS_AS(oracle_block_eig(basis, 4), std::invalid_argument);
}

TEST_CASE("moment oracle on the entangled pair", "[oracle]") {
  ProtocolSpec spec{dimer_chain(2, Parity::Even), BasisFamily::Bell};
  DenseState phi0(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});

  for (const char* text : {"ZZ", "XX"}) {
    OracleMoments m =
        oracle_estimator_moments(spec, &phi0, PauliString::from_text(text));
    CHECK(std::abs(m.first - 1.0) < 1e-9);   // <P> = +1 on this state
    CHECK(std::abs(m.second - 3.0) < 1e-9);  // every-gate-stabilizer: 3^1
  }
  // YY has expectation -1 there; the second moment stays pinned
  OracleMoments yy =
      oracle_estimator_moments(spec, &phi0, PauliString::from_text("YY"));
  CHECK(std::abs(yy.first + 1.0) < 1e-9);
  CHECK(std::abs(yy.second - 3.0) < 1e-9);

  // identity is reproduced exactly, shot by shot
  OracleMoments id =
      oracle_estimator_moments(spec, &phi0, PauliString::from_text("II"));
  CHECK(std::abs(id.first - 1.0) < 1e-12);
  CHECK(std::abs(id.second - 1.0) < 1e-12);

  // mixed state: first moment 0, second moment = product of 1/lambda
  OracleMoments mixed = oracle_estimator_moments(
      spec, nullptr, PauliString::from_text("ZZ"), true);
  CHECK(std::abs(mixed.first) < 1e-12);
  CHECK(std::abs(mixed.second - 3.0) < 1e-9);

  CHECK_THROWS_AS(
      oracle_estimator_moments(spec, &phi0, PauliString::from_text("ZI")),
      unlearnable_error);
  CHECK_THROWS_AS(
      oracle_estimator_moments(spec, nullptr, PauliString::from_text("ZZ")),
      std::invalid_argument);
}

TEST_CASE("moment oracle at a non-stabilizer phase", "[oracle]") {
  ProtocolSpec spec{dimer_chain(2, Parity::Even), BasisFamily::TunablePhase,
                    std::numbers::pi / 2};
  // mixed-state second moment must equal 1/lambda for every protocol
  OracleMoments mixed = oracle_estimator_moments(
      spec, nullptr, PauliString::from_text("ZZ"), true);
  CHECK(std::abs(mixed.second - 4.5) < 1e-9);  // lambda(both) = 2/9

  // first moment is the true expectation on a generic dense state
  DenseState st(2, {0.5, {0.0, 0.5}, -0.5, {0.5, 0.0}});
  double want = st.expectation(PauliString::from_text("ZZ")).real();
  OracleMoments m =
      oracle_estimator_moments(spec, &st, PauliString::from_text("ZZ"));
  CHECK(std::abs(m.first - want) < 1e-9);
}

TEST_CASE("moment oracle with one scrambler per pair", "[oracle]") {
  ProtocolSpec spec{dimer_chain(4, Parity::Even), BasisFamily::Bell,
                    std::numbers::pi, ScrambleMode::OnePerBlock};
  OracleMoments mixed = oracle_estimator_moments(
      spec, nullptr, PauliString::from_text("ZZZZ"), true);
  CHECK(std::abs(mixed.second - 9.0) < 1e-9);

  ProtocolSpec big{dimer_chain(6, Parity::Even), BasisFamily::Bell};
  DenseState st(6);
  CHECK_THROWS_AS(
      oracle_estimator_moments(big, &st, PauliString::from_text("ZZIIII")),
      guard_error);
}

TEST_CASE("family wrapper matches the explicit basis form", "[oracle]") {
  double via_wrapper =
      oracle_pattern_eigenvalue(BasisFamily::Ghz, 2, {2, 2});
  double via_basis =
      oracle_block_eig(block_basis_states(BasisFamily::Ghz, 2), 3);
  CHECK(via_wrapper == via_basis);
  CHECK(std::abs(via_wrapper - 1.0 / 3.0) < 1e-12);
}

}  // namespace
}  // namespace shadows
