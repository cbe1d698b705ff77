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

// Release gate. Each test case is one acceptance criterion; the listener
// prints exactly one [PASS]/[FAIL] line per criterion. Everything funnels
// through the self-check suite in validate.hpp so `shadows_cli validate
// full` and this binary can never drift apart.

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

#include "shadows/validate.hpp"

namespace {

class acceptance_reporter : public Catch::EventListenerBase {
 public:
  using EventListenerBase::EventListenerBase;

  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::cout << (stats.totals.assertions.allPassed() ? "[PASS] " : "[FAIL] ")
              << stats.testInfo->name << std::endl;
  }
};

CATCH_REGISTER_LISTENER(acceptance_reporter)

shadows::ValidationContext accept_ctx() {
  shadows::ValidationContext ctx;
  ctx.workers = 8;
  return ctx;
}

void require_check(const shadows::ValidationCheck& c) {
  INFO(c.name << ": " << c.detail);
  REQUIRE(c.passed);
}

}  // namespace

TEST_CASE("criterion 1: block eigenvalue tables match the exhaustive oracle",
          "[acceptance]") {
  require_check(shadows::check_eigenvalue_identities(accept_ctx()));
  require_check(shadows::check_tunable_endpoints());
}

TEST_CASE("criterion 2: entanglement-feature map reproduces ghz eigenvalues",
          "[acceptance]") {
  require_check(shadows::check_ef_map());
}

TEST_CASE("criterion 3: scaling-factor table obeys the stabilizer bound",
          "[acceptance]") {
  require_check(shadows::check_fn_table());
}

TEST_CASE("criterion 4: tunable norm law 4^(k mod 2) * 2^k at delta ln(11/8)",
          "[acceptance]") {
  require_check(shadows::check_tunable_norm(accept_ctx()));
}

TEST_CASE("criterion 5: cphase calibration and the basis purity relation",
          "[acceptance]") {
  require_check(shadows::check_cphase_calibration());
}

TEST_CASE("criterion 6: estimator unbiasedness within 5 standard errors",
          "[acceptance]") {
  require_check(shadows::check_unbiasedness_mc(accept_ctx()));
}

TEST_CASE("criterion 7: second moments match shadow norms within 3 percent",
          "[acceptance]") {
  require_check(shadows::check_second_moment_mc(accept_ctx()));
}

TEST_CASE("criterion 8: hit frequencies within 2 percent relative",
          "[acceptance]") {
  require_check(shadows::check_hit_frequency_mc(accept_ctx()));
}

TEST_CASE("criterion 9: campaign budget formulas for the bundled presets",
          "[acceptance]") {
  require_check(shadows::check_budget_formulas());
}

TEST_CASE("criterion 10: one-per-dimer scrambling matches all-qubit moments",
          "[acceptance]") {
  require_check(shadows::check_teleportation_mc(accept_ctx()));
}

TEST_CASE("criterion 11: byte-identical outputs across worker counts",
          "[acceptance]") {
  require_check(shadows::check_determinism(accept_ctx()));
}
