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

// Self-check suite behind the `validate` subcommand. Each check is named so
// a failure pinpoints the broken invariant. `fast` runs analytic and
// brute-force-oracle identities (seconds); `full` adds the large Monte
// Carlo laws (minutes).

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "shadows/campaign.hpp"
#include "shadows/oracle.hpp"
#include "shadows/report.hpp"

namespace shadows {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Indirection for the analytic eigenvalue tables, so tests can inject a
// deliberately corrupted table and watch the right check fail.
struct ValidationContext {
  std::function<ChannelEigenvalues(const ProtocolSpec&)> eigenvalues =
      [](const ProtocolSpec& s) { return protocol_eigenvalues(s); };
  std::size_t workers = 1;
  std::uint64_t seed = 20260816;
};

namespace validate_detail {

inline ProtocolSpec pair_protocol(BasisFamily family,
                                  double phi = std::numbers::pi) {
  ProtocolSpec spec{dimer_chain(2, Parity::Even, false), family, phi};
  return spec;
}

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

template <typename Fn>
ValidationCheck run_check(const std::string& name, Fn&& fn) {
  ValidationCheck c{name, false, ""};
  std::ostringstream detail;
  try {
    c.passed = fn(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
    c.passed = false;
  }
  c.detail = detail.str();
  return c;
}

}  // namespace validate_detail

// fast: analytic tables vs the exhaustive 24^n oracle, to 1e-12
inline ValidationCheck check_eigenvalue_identities(
    const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("eigenvalue-identities", [&](std::ostringstream& out) {
    ProtocolSpec bell = pair_protocol(BasisFamily::Bell);
    ChannelEigenvalues bell_tab = ctx.eigenvalues(bell);
    const double want_bell[4] = {1.0, 0.0, 0.0, 1.0 / 3.0};
    for (std::uint32_t a = 0; a < 4; ++a) {
      std::vector<int> codes{a & 1 ? 2 : 0, a & 2 ? 2 : 0};
      double oracle = oracle_pattern_eigenvalue(BasisFamily::Bell, 2, codes);
      if (!close(bell_tab.blocks[0].at(a), want_bell[a], 1e-12) ||
          !close(oracle, want_bell[a], 1e-12)) {
        out << "bell pattern " << a << ": table "
            << bell_tab.blocks[0].at(a) << " oracle " << oracle;
        return false;
      }
    }
    std::vector<std::uint32_t> single{0};
    ProtocolSpec pauli{Covering(1, {single}), BasisFamily::PauliLocal};
    ChannelEigenvalues pauli_tab = ctx.eigenvalues(pauli);
    for (std::uint32_t a = 0; a < 2; ++a) {
      double want = a ? 1.0 / 3.0 : 1.0;
      double oracle = oracle_pattern_eigenvalue(BasisFamily::PauliLocal, 1,
                                                {a ? 2 : 0});
      if (!close(pauli_tab.blocks[0].at(a), want, 1e-12) ||
          !close(oracle, want, 1e-12)) {
        out << "pauli pattern " << a;
        return false;
      }
    }
    // ghz trimer against the oracle as well
    std::vector<std::uint32_t> trimer{0, 1, 2};
    ProtocolSpec ghz{Covering(3, {trimer}), BasisFamily::Ghz};
    ChannelEigenvalues ghz_tab = ctx.eigenvalues(ghz);
    for (std::uint32_t a : {std::uint32_t{3}, std::uint32_t{7}}) {
      std::vector<int> codes(3, 0);
      for (int q = 0; q < 3; ++q)
        if (a & (1u << q)) codes[q] = 2;
      double oracle = oracle_pattern_eigenvalue(BasisFamily::Ghz, 3, codes);
      if (!close(ghz_tab.blocks[0].at(a), oracle, 1e-12)) {
        out << "ghz pattern " << a << ": table " << ghz_tab.blocks[0].at(a)
            << " oracle " << oracle;
        return false;
      }
    }
    out << "bell, pauli and ghz tables match the exhaustive oracle";
    return true;
  });
}

// fast: tunable table endpoints coincide bitwise with bell / pauli x pauli
inline ValidationCheck check_tunable_endpoints() {
  using namespace validate_detail;
  return run_check("tunable-endpoints", [&](std::ostringstream& out) {
    BlockEigenvalues zero = tunable_block_eigs(0.0);
    BlockEigenvalues bell = bell_block_eigs();
    for (std::size_t a = 0; a < 4; ++a)
      if (zero.lambda[a] != bell.lambda[a]) {
        out << "delta=0 pattern " << a << " differs from bell";
        return false;
      }
    BlockEigenvalues top = tunable_block_eigs(max_tunable_delta());
    const double third = 1.0 / 3.0;
    const double want[4] = {1.0, third, third, third * third};
    for (std::size_t a = 0; a < 4; ++a)
      if (top.lambda[a] != want[a]) {
        out << "delta=ln2 pattern " << a << " differs from pauli x pauli";
        return false;
      }
    out << "exact equality at both endpoints";
    return true;
  });
}

// fast: entanglement-feature map reproduces the ghz closed forms
inline ValidationCheck check_ef_map() {
  using namespace validate_detail;
  return run_check("ef-map-ghz", [&](std::ostringstream& out) {
    for (std::size_t n = 2; n <= 12; ++n) {
      BlockEigenvalues eig = ghz_block_eigs(n);
      double want = ghz_full_pattern_eigenvalue(n);
      std::uint32_t full = (1u << n) - 1;
      if (!close(eig.at(full), want, 1e-12)) {
        out << "n=" << n << " full-pattern eigenvalue " << eig.at(full)
            << " want " << want;
        return false;
      }
    }
    // n=3, uniform subsystem purity p: lambda_full = (7 - 6p) / 27
    for (double p : {0.5, 0.6, 0.75, 0.9, 1.0}) {
      EntanglementFeature ef{3, {}};
      ef.purity.assign(8, 1.0);
      for (std::uint32_t a = 1; a < 7; ++a) ef.purity[a] = p;
      BlockEigenvalues eig = ef_to_eigs(ef);
      if (!close(eig.at(7), (7.0 - 6.0 * p) / 27.0, 1e-12)) {
        out << "uniform purity " << p << ": " << eig.at(7);
        return false;
      }
    }
    out << "closed forms reproduced for n=2..12 and the n=3 purity grid";
    return true;
  });
}

// fast: scaling-factor table and bound
inline ValidationCheck check_fn_table() {
  using namespace validate_detail;
  return run_check("fn-table", [&](std::ostringstream& out) {
    if (!close(scaling_factor(1), 3.0, 1e-12) ||
        !close(scaling_factor(2), std::sqrt(3.0), 1e-12) ||
        !close(scaling_factor(3), 3.0 / std::pow(2.0, 2.0 / 3.0), 1e-12)) {
      out << "f_1/f_2/f_3 mismatch";
      return false;
    }
    for (std::size_t n = 4; n + 2 <= 64; ++n)
      if (scaling_factor(n + 2) >= scaling_factor(n)) {
        out << "not decreasing at n=" << n;
        return false;
      }
    for (std::size_t n = 1; n <= 64; ++n)
      if (!stabilizer_bound_check(n)) {
        out << "f_n below 3/2 at n=" << n;
        return false;
      }
    out << "values, parity-branch monotonicity and the 3/2 bound hold";
    return true;
  });
}

// fast: tunable norm law at delta = ln(11/8)
inline ValidationCheck check_tunable_norm(const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("tunable-norm", [&](std::ostringstream& out) {
    const double delta = std::log(11.0 / 8.0);
    Covering cov = dimer_chain(8, Parity::Even, false);
    ProtocolSpec spec{cov, BasisFamily::TunablePhase, phi_from_delta(delta)};
    ChannelEigenvalues eigs = ctx.eigenvalues(spec);
    for (std::size_t k = 1; k <= 8; ++k) {
      PauliString p = PauliString::identity(8);
      for (std::size_t j = 0; j < k; ++j) p.set_letter(j, 'Z');
      ShadowNorm norm = shadow_norm_sq(p, cov, eigs);
      double want = std::pow(4.0, k % 2) * std::pow(2.0, k);
      if (norm.unlearnable || !close(norm.value, want, want * 1e-12)) {
        out << "k=" << k << ": " << norm.value << " want " << want;
        return false;
      }
    }
    out << "4^(k mod 2) * 2^k for k=1..8";
    return true;
  });
}

// fast: cphase calibration endpoints and the purity relation
inline ValidationCheck check_cphase_calibration() {
  using namespace validate_detail;
  return run_check("cphase-calibration", [&](std::ostringstream& out) {
    if (!close(delta_from_phi(std::numbers::pi), 0.0, 1e-12) ||
        !close(delta_from_phi(0.0), std::numbers::ln2, 1e-12)) {
      out << "endpoint calibration off";
      return false;
    }
    for (int i = 0; i < 20; ++i) {
      double phi = std::numbers::pi * i / 19.0;
      double dense = cphase_basis_mean_purity(phi);
      double closed = (3.0 + std::cos(phi)) / 4.0;
      if (!close(dense, closed, 1e-12)) {
        out << "purity mismatch at phi=" << phi << ": " << dense << " vs "
            << closed;
        return false;
      }
    }
    out << "delta endpoints exact; purity = (3 + cos phi)/4 on a 20-point "
           "grid";
    return true;
  });
}

// fast: compatible-operator counts by exhaustive enumeration
inline ValidationCheck check_compatibility_counts() {
  using namespace validate_detail;
  return run_check("compatibility-counts", [&](std::ostringstream& out) {
    auto count_compatible = [](const Covering& cov) {
      const std::size_t n = cov.num_qubits();
      std::size_t count = 0;
      std::vector<char> letters(n);
      std::size_t total = 1;
      for (std::size_t q = 0; q < n; ++q) total *= 4;
      for (std::size_t word = 0; word < total; ++word) {
        PauliString p = PauliString::identity(n);
        std::size_t w = word;
        for (std::size_t q = 0; q < n; ++q) {
          p.set_letter(q, "IXZY"[w & 3]);
          w >>= 2;
        }
        count += is_compatible(p, cov);
      }
      return count;
    };
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
      std::size_t got = count_compatible(dimer_chain(n, Parity::Even, false));
      std::size_t want = 1;
      for (std::size_t i = 0; i < n / 2; ++i) want *= 10;
      if (got != want) {
        out << "dimers N=" << n << ": " << got << " want " << want;
        return false;
      }
    }
    std::size_t got = count_compatible(n_mer_chain(6, 3, 0));
    if (got != 28 * 28) {
      out << "trimers N=6: " << got << " want 784";
      return false;
    }
    out << "10^(N/2) on dimers (N<=8) and (3^n+1)^(N/n) on trimers (N=6)";
    return true;
  });
}

// fast: campaign budget arithmetic for the three presets
inline ValidationCheck check_budget_formulas() {
  using namespace validate_detail;
  return run_check("budget-formulas", [&](std::ostringstream& out) {
    CampaignConfig s1d = preset_string_1d();
    detail::CampaignAnalysis an = detail::analyze_campaign(s1d);
    const double eps2 = s1d.epsilon * s1d.epsilon;
    std::uint64_t want =
        2 * static_cast<std::uint64_t>(std::ceil(std::log(18.0) * 27.0 / eps2));
    if (an.summary.at("budget_split").get<std::uint64_t>() != want) {
      out << "string-1d budget " << an.summary.at("budget_split")
          << " want " << want;
      return false;
    }
    CampaignConfig hc = preset_honeycomb();
    detail::CampaignAnalysis hc_an = detail::analyze_campaign(hc);
    if (!close(hc_an.summary.at("budget_prefactor").get<double>(), 54.0,
               1e-9) ||
        !close(hc_an.summary.at("pauli_budget_prefactor").get<double>(),
               729.0, 1e-9)) {
      out << "honeycomb prefactors "
          << hc_an.summary.at("budget_prefactor") << "/"
          << hc_an.summary.at("pauli_budget_prefactor");
      return false;
    }
    for (const auto& proto : hc_an.summary.at("per_protocol"))
      if (!close(proto.at("compatible_fraction").get<double>(), 2.0 / 3.0,
                 1e-12)) {
        out << "honeycomb per-orientation compatibility not 2/3";
        return false;
      }
    CampaignConfig mp = preset_multipoint();
    detail::CampaignAnalysis mp_an = detail::analyze_campaign(mp);
    if (!close(mp_an.summary.at("max_norm_sq").get<double>(), 9.0, 1e-9) ||
        !close(mp_an.summary.at("pauli_max_norm_sq").get<double>(), 81.0,
               1e-9)) {
      out << "multipoint norm scales "
          << mp_an.summary.at("max_norm_sq") << "/"
          << mp_an.summary.at("pauli_max_norm_sq");
      return false;
    }
    out << "string-1d split budget, honeycomb 54-vs-729 prefactors, "
           "multipoint 9-vs-81 norm scales";
    return true;
  });
}

// fast: all measured block bases are orthonormal and complete
inline ValidationCheck check_basis_orthonormality() {
  using namespace validate_detail;
  return run_check("basis-orthonormality", [&](std::ostringstream& out) {
    oracle_check_basis(block_basis_states(BasisFamily::PauliLocal, 1));
    oracle_check_basis(block_basis_states(BasisFamily::Bell, 2));
    for (double phi : {0.0, 0.4, 1.1, std::numbers::pi})
      oracle_check_basis(block_basis_states(BasisFamily::TunablePhase, 2, phi));
    oracle_check_basis(block_basis_states(BasisFamily::Ghz, 2));
    oracle_check_basis(block_basis_states(BasisFamily::Ghz, 3));
    out << "all block bases orthonormal and complete";
    return true;
  });
}

// fast: symplectic and dense routes agree shot by shot
inline ValidationCheck check_route_agreement(const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("route-agreement", [&](std::ostringstream& out) {
    Covering cov = dimer_chain(6, Parity::Even, false);
    for (BasisFamily family : {BasisFamily::Bell, BasisFamily::Ghz}) {
      Covering use = family == BasisFamily::Ghz ? n_mer_chain(6, 3, 0) : cov;
      ProtocolSpec spec{use, family};
      QuantumState state = prepare_preset("random-stabilizer", 6, 11);
      SnapshotDataset ds = sample_dataset(spec, state, ctx.seed, 400);
      ChannelEigenvalues eigs = ctx.eigenvalues(spec);
      for (const auto& text : {"ZZZZZZ", "XXYYZZ", "IIZZII", "YXIIII"}) {
        PauliString op = PauliString::from_text(text);
        CompiledObservable c(op, spec, eigs);
        if (c.unlearnable()) continue;
        for (const auto& snap : ds.snapshots) {
          double a = c.shot_value(snap, EstimatorRoute::Dense).value;
          double b = c.shot_value(snap, EstimatorRoute::Symplectic).value;
          if (!close(a, b, 1e-9)) {
            out << "routes disagree on " << text << ": " << a << " vs " << b;
            return false;
          }
        }
      }
    }
    out << "dense and symplectic shot values identical on 400-shot sets";
    return true;
  });
}

// fast: byte-identical datasets and reports across worker counts
inline ValidationCheck check_determinism(const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("determinism", [&](std::ostringstream& out) {
    CampaignConfig cfg = preset_string_1d();
    cfg.shots = 500;
    auto render = [&](std::size_t workers) {
      EstimateReport rep = run_estimate(cfg, workers);
      std::ostringstream os;
      for (const auto& ds : rep.datasets) write_snapshots(os, ds);
      write_estimates_csv(os, rep.rows);
      os << rep.summary.dump();
      return os.str();
    };
    std::string one = render(1);
    std::string eight = render(8);
    if (one != eight) {
      out << "1-worker and 8-worker outputs differ";
      return false;
    }
    out << "1 vs 8 workers byte-identical on a 500-shot campaign";
    return true;
  });
}

// full: estimator means match exact expectations within 5 standard errors
inline ValidationCheck check_unbiasedness_mc(const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("unbiasedness-mc", [&](std::ostringstream& out) {
    const std::size_t n = 6, shots = 200000;
    const double delta = std::log(11.0 / 8.0);
    std::vector<ProtocolSpec> protocols{
        {dimer_chain(n, Parity::Even, false), BasisFamily::Bell},
        {n_mer_chain(n, 3, 0), BasisFamily::Ghz},
        {dimer_chain(n, Parity::Even, false), BasisFamily::TunablePhase,
         phi_from_delta(delta)}};
    // learnable under all three coverings: whole dimers, and trimer
    // patterns of size 0, 2 or 3
    const char* ops[5] = {"ZZIIII", "IIIIZZ", "ZZIIZZ", "XXXXXX", "YYXXXX"};
    std::uint64_t salt = 0;
    for (const auto& preset : {"ghz", "cluster-1d"}) {
      QuantumState state = prepare_preset(preset, n, 0);
      DenseState dense = state_to_dense(state);
      for (const auto& spec : protocols) {
        SnapshotDataset ds = sample_dataset(
            spec, state, mix64(ctx.seed ^ ++salt), shots, ctx.workers,
            preset);
        ChannelEigenvalues eigs = ctx.eigenvalues(spec);
        for (const char* text : ops) {
          PauliString op = PauliString::from_text(text);
          double exact = dense.expectation(op).real();
          Estimate est = estimate_observable(op, ds, eigs, text, 1,
                                             EstimatorRoute::Dense,
                                             ctx.workers);
          if (!est.learnable()) {
            out << text << " unlearnable under " << spec.label();
            return false;
          }
          if (std::abs(est.mean - exact) > 5.0 * est.std_error) {
            out << preset << "/" << spec.label() << "/" << text << ": mean "
                << est.mean << " exact " << exact << " se " << est.std_error;
            return false;
          }
        }
      }
    }
    out << "30 (state, protocol, operator) cells within 5 standard errors "
           "at 2e5 shots";
    return true;
  });
}

// full: second moments on the maximally mixed state match the norms to 3%
inline ValidationCheck check_second_moment_mc(const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("second-moment-mc", [&](std::ostringstream& out) {
    const std::size_t shots = 1000000;
    struct Case {
      ProtocolSpec spec;
      std::size_t k;
      double want;
    };
    std::vector<Case> cases;
    const double delta = std::log(11.0 / 8.0);
    for (std::size_t k : {2u, 4u, 6u})
      cases.push_back({{dimer_chain(6, Parity::Even, false), BasisFamily::Bell},
                       k, std::pow(3.0, k / 2.0)});
    for (std::size_t k : {1u, 2u, 3u}) {
      std::vector<std::vector<std::uint32_t>> singles;
      for (std::uint32_t q = 0; q < 3; ++q) singles.push_back({q});
      cases.push_back({{Covering(3, singles), BasisFamily::PauliLocal}, k,
                       std::pow(3.0, static_cast<double>(k))});
    }
    cases.push_back(
        {{n_mer_chain(3, 3, 0), BasisFamily::Ghz}, 3,
         std::pow(scaling_factor(3), 3.0)});
    cases.push_back({{dimer_chain(4, Parity::Even, false),
                      BasisFamily::TunablePhase, phi_from_delta(delta)},
                     2, 4.0});
    cases.push_back({{dimer_chain(4, Parity::Even, false),
                      BasisFamily::TunablePhase, phi_from_delta(delta)},
                     3, 32.0});
    std::size_t idx = 0;
    for (const auto& c : cases) {
      std::size_t n = c.spec.covering.num_qubits();
      PauliString op = PauliString::identity(n);
      for (std::size_t j = 0; j < c.k; ++j) op.set_letter(j, 'Z');
      SnapshotDataset ds =
          sample_dataset(c.spec, MaximallyMixed{n},
                         mix64(ctx.seed ^ (0xabcULL + idx)), shots,
                         ctx.workers, "maximally-mixed");
      Estimate est =
          estimate_observable(op, ds, ctx.eigenvalues(c.spec), {}, 1,
                              EstimatorRoute::Dense, ctx.workers);
      if (std::abs(est.second_moment - c.want) > 0.03 * c.want) {
        out << c.spec.label() << " k=" << c.k << ": " << est.second_moment
            << " want " << c.want;
        return false;
      }
      ++idx;
    }
    out << "empirical E[o^2] within 3% of the analytic norms (9 cases, 1e6 "
           "shots each)";
    return true;
  });
}

// full: hit frequencies
inline ValidationCheck check_hit_frequency_mc(const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("hit-frequency-mc", [&](std::ostringstream& out) {
    const std::size_t shots = 1000000;
    {
      ProtocolSpec spec{dimer_chain(4, Parity::Even, false),
                        BasisFamily::Bell};
      PauliString op = PauliString::from_text("ZZZZ");
      SnapshotDataset ds =
          sample_dataset(spec, MaximallyMixed{4}, mix64(ctx.seed ^ 0xbe11),
                         shots, ctx.workers, "maximally-mixed");
      Estimate est = estimate_observable(op, ds, ctx.eigenvalues(spec), {}, 1,
                                         EstimatorRoute::Dense, ctx.workers);
      if (std::abs(est.hit_frequency - 1.0 / 9.0) > 0.02 / 9.0) {
        out << "bell k=4 hit frequency " << est.hit_frequency;
        return false;
      }
    }
    {
      std::vector<std::vector<std::uint32_t>> singles{{0}, {1}};
      ProtocolSpec spec{Covering(2, singles), BasisFamily::PauliLocal};
      PauliString op = PauliString::from_text("ZZ");
      SnapshotDataset ds =
          sample_dataset(spec, MaximallyMixed{2}, mix64(ctx.seed ^ 0x9a71),
                         shots, ctx.workers, "maximally-mixed");
      Estimate est = estimate_observable(op, ds, ctx.eigenvalues(spec), {}, 1,
                                         EstimatorRoute::Dense, ctx.workers);
      if (std::abs(est.hit_frequency - 1.0 / 9.0) > 0.02 / 9.0) {
        out << "pauli k=2 hit frequency " << est.hit_frequency;
        return false;
      }
    }
    out << "1/9 within 2% relative at 1e6 shots (bell k=4, pauli k=2)";
    return true;
  });
}

// full: one-per-dimer vs all-qubit scrambling give the same second moment
inline ValidationCheck check_teleportation_mc(const ValidationContext& ctx) {
  using namespace validate_detail;
  return run_check("teleportation-mc", [&](std::ostringstream& out) {
    const std::size_t shots = 1000000;
    PauliString op = PauliString::from_text("ZZII");
    Covering cov = dimer_chain(4, Parity::Even, false);
    ProtocolSpec all{cov, BasisFamily::Bell};
    ProtocolSpec one{cov, BasisFamily::Bell, std::numbers::pi,
                     ScrambleMode::OnePerBlock};
    auto moment = [&](const ProtocolSpec& spec, std::uint64_t salt) {
      SnapshotDataset ds =
          sample_dataset(spec, MaximallyMixed{4}, mix64(ctx.seed ^ salt),
                         shots, ctx.workers, "maximally-mixed");
      return estimate_observable(op, ds, ctx.eigenvalues(spec), {}, 1,
                                 EstimatorRoute::Dense, ctx.workers);
    };
    Estimate a = moment(all, 0x7e1e);
    Estimate b = moment(one, 0x7e1f);
    double gap = std::abs(a.second_moment - b.second_moment);
    double err = std::hypot(a.second_moment_std_error,
                            b.second_moment_std_error);
    if (gap > 5.0 * err) {
      out << "second moments " << a.second_moment << " vs "
          << b.second_moment << " differ by " << gap << " > 5x" << err;
      return false;
    }
    out << "one-per-dimer vs all-qubit second moments agree within "
           "combined error";
    return true;
  });
}

inline std::vector<ValidationCheck> run_validation(
    bool full, const ValidationContext& ctx = {},
    const std::function<void(const ValidationCheck&)>& progress = {}) {
  std::vector<ValidationCheck> checks;
  auto push = [&](ValidationCheck c) {
    if (progress) progress(c);
    checks.push_back(std::move(c));
  };
  push(check_eigenvalue_identities(ctx));
  push(check_tunable_endpoints());
  push(check_ef_map());
  push(check_fn_table());
  push(check_tunable_norm(ctx));
  push(check_cphase_calibration());
  push(check_compatibility_counts());
  push(check_budget_formulas());
  push(check_basis_orthonormality());
  push(check_route_agreement(ctx));
  push(check_determinism(ctx));
  if (full) {
    push(check_unbiasedness_mc(ctx));
    push(check_second_moment_mc(ctx));
    push(check_hit_frequency_mc(ctx));
    push(check_teleportation_mc(ctx));
  }
  return checks;
}

}  // namespace shadows
