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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadows/estimator.hpp"
#include "shadows/report.hpp"
#include "shadows/sampler.hpp"
#include "shadows/state.hpp"

namespace shadows {

struct SweepSettings {
  std::string axis = "k";
  std::size_t k_max = 8;
  std::vector<double> deltas{0.0, 0.1, std::log(11.0 / 8.0),
                             std::numbers::ln2};
  std::vector<double> delta_grid;  // axis=delta; default 9 points 0..ln2
  std::size_t k_fixed = 2;
  std::size_t n_max = 8;
  std::size_t shots = 0;  // 0 = analytic columns only

  nlohmann::json to_json() const {
    return nlohmann::json{{"axis", axis},
                          {"delta_grid", delta_grid},
                          {"deltas", deltas},
                          {"k_fixed", k_fixed},
                          {"k_max", k_max},
                          {"n_max", n_max},
                          {"shots", shots}};
  }

  static SweepSettings from_json(const nlohmann::json& j) {
    SweepSettings s;
    if (j.contains("axis")) s.axis = j.at("axis").get<std::string>();
    if (j.contains("deltas"))
      s.deltas = j.at("deltas").get<std::vector<double>>();
    if (j.contains("delta_grid"))
      s.delta_grid = j.at("delta_grid").get<std::vector<double>>();
    if (j.contains("k_max")) s.k_max = j.at("k_max").get<std::size_t>();
    if (j.contains("k_fixed")) s.k_fixed = j.at("k_fixed").get<std::size_t>();
    if (j.contains("n_max")) s.n_max = j.at("n_max").get<std::size_t>();
    if (j.contains("shots")) s.shots = j.at("shots").get<std::size_t>();
    return s;
  }
};

struct CampaignConfig {
  std::string name;
  std::size_t num_qubits = 0;
  std::string state_preset = "computational-zero";
  std::uint64_t state_seed = 0;
  std::vector<ProtocolSpec> protocols;
  OperatorSet operators;
  std::size_t shots = 10000;
  double epsilon = 0.0;  // 0 disables budget columns
  std::uint64_t seed = 1;
  std::size_t groups = 1;
  EstimatorRoute route = EstimatorRoute::Dense;
  SweepSettings sweep;

  void validate(bool need_protocols, bool need_operators) const {
    if (num_qubits == 0)
      throw std::invalid_argument("config: num_qubits must be >= 1");
    if (need_protocols && protocols.empty())
      throw std::invalid_argument("config: no protocols given");
    for (const auto& p : protocols) {
      p.validate();
      if (p.covering.num_qubits() != num_qubits)
        throw std::invalid_argument("config: protocol qubit count mismatch");
    }
    if (need_operators && operators.size() == 0)
      throw std::invalid_argument("config: no operators given");
    for (const auto& op : operators.operators)
      if (op.num_qubits() != num_qubits)
        throw std::invalid_argument("config: operator qubit count mismatch");
    if (operators.labels.size() != operators.operators.size())
      throw std::invalid_argument("config: operator label count mismatch");
    if (shots == 0) throw std::invalid_argument("config: shots must be >= 1");
    if (groups == 0)
      throw std::invalid_argument("config: groups must be >= 1");
    if (epsilon < 0.0)
      throw std::invalid_argument("config: epsilon must be >= 0");
    bool found = false;
    for (const auto& s : state_preset_names()) found |= s == state_preset;
    if (!found)
      throw std::invalid_argument("config: unknown state preset " +
                                  state_preset);
  }

  nlohmann::json to_json() const {
    nlohmann::json ops = nlohmann::json::array();
    for (std::size_t i = 0; i < operators.size(); ++i)
      ops.push_back({{"label", operators.labels[i]},
                     {"pauli", operators.operators[i].str()}});
    nlohmann::json protos = nlohmann::json::array();
    for (const auto& p : protocols) protos.push_back(p.to_json());
    return nlohmann::json{
        {"epsilon", epsilon},
        {"groups", groups},
        {"name", name},
        {"num_qubits", num_qubits},
        {"operators", ops},
        {"protocols", protos},
        {"route", route == EstimatorRoute::Symplectic ? "symplectic" : "dense"},
        {"seed", seed},
        {"shots", shots},
        {"state", {{"preset", state_preset}, {"seed", state_seed}}},
        {"sweep", sweep.to_json()}};
  }

  static CampaignConfig from_json(const nlohmann::json& j) {
    CampaignConfig c;
    c.num_qubits = j.at("num_qubits").get<std::size_t>();
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    if (j.contains("state")) {
      const auto& s = j.at("state");
      if (s.contains("preset"))
        c.state_preset = s.at("preset").get<std::string>();
      if (s.contains("seed")) c.state_seed = s.at("seed").get<std::uint64_t>();
    }
    if (j.contains("protocols"))
      for (const auto& p : j.at("protocols"))
        c.protocols.push_back(ProtocolSpec::from_json(p));
    if (j.contains("operators"))
      for (const auto& o : j.at("operators"))
        c.operators.add(PauliString::from_text(o.at("pauli").get<std::string>()),
                        o.at("label").get<std::string>());
    if (j.contains("shots")) c.shots = j.at("shots").get<std::size_t>();
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("groups")) c.groups = j.at("groups").get<std::size_t>();
    if (j.contains("route")) {
      std::string r = j.at("route").get<std::string>();
      if (r == "dense") c.route = EstimatorRoute::Dense;
      else if (r == "symplectic") c.route = EstimatorRoute::Symplectic;
      else throw std::invalid_argument("config: unknown route " + r);
    }
    if (j.contains("sweep")) c.sweep = SweepSettings::from_json(j.at("sweep"));
    return c;
  }
};

// ------------------------------------------------------------------ presets

inline const std::vector<std::string>& campaign_preset_names() {
  static const std::vector<std::string> names{"string-1d", "honeycomb",
                                              "multipoint"};
  return names;
}

// 1D ring of 12 qubits in a cluster state; the two periodic dimer coverings
// together learn every contiguous even-length Z-string up to weight 6.
inline CampaignConfig preset_string_1d() {
  CampaignConfig c;
  c.name = "string-1d";
  c.num_qubits = 12;
  c.state_preset = "cluster-1d";
  ProtocolSpec even{dimer_chain(12, Parity::Even, true), BasisFamily::Bell};
  even.name = "bell-even";
  ProtocolSpec odd{dimer_chain(12, Parity::Odd, true), BasisFamily::Bell};
  odd.name = "bell-odd";
  c.protocols = {even, odd};
  for (std::size_t k = 2; k <= 6; k += 2)
    for (std::size_t s = 0; s < 12; ++s) {
      PauliString p = PauliString::identity(12);
      for (std::size_t j = 0; j < k; ++j) p.set_letter((s + j) % 12, 'Z');
      c.operators.add(p, "Z" + std::to_string(k) + "@" + std::to_string(s));
    }
  c.shots = 200000;
  c.epsilon = 0.1;
  c.seed = 7;
  return c;
}

// Honeycomb torus, side 3 (18 qubits): dimer coverings from two bond
// orientations; operators are the nine all-Z plaquettes.
inline CampaignConfig preset_honeycomb() {
  CampaignConfig c;
  c.name = "honeycomb";
  c.num_qubits = 18;
  c.state_preset = "computational-zero";
  HoneycombLattice lat0 = honeycomb(3, 0);
  HoneycombLattice lat1 = honeycomb(3, 1);
  ProtocolSpec p0{lat0.covering, BasisFamily::Bell};
  p0.name = "bell-hc0";
  ProtocolSpec p1{lat1.covering, BasisFamily::Bell};
  p1.name = "bell-hc1";
  c.protocols = {p0, p1};
  c.operators = lat0.plaquettes;
  c.shots = 200000;
  c.epsilon = 0.1;
  c.seed = 7;
  return c;
}

// Two-point functions of bond operators on a 12-qubit chain: all 81 Pauli
// products supported on bonds (0,1) and (6,7), on the maximally mixed state.
inline CampaignConfig preset_multipoint() {
  CampaignConfig c;
  c.name = "multipoint";
  c.num_qubits = 12;
  c.state_preset = "maximally-mixed";
  ProtocolSpec even{dimer_chain(12, Parity::Even, true), BasisFamily::Bell};
  even.name = "bell-even";
  c.protocols = {even};
  const char letters[3] = {'X', 'Y', 'Z'};
  for (char a : letters)
    for (char b : letters)
      for (char d : letters)
        for (char e : letters) {
          PauliString p = PauliString::identity(12);
          p.set_letter(0, a);
          p.set_letter(1, b);
          p.set_letter(6, d);
          p.set_letter(7, e);
          c.operators.add(p, std::string{a, b} + "@01+" + std::string{d, e} +
                                 "@67");
        }
  c.shots = 200000;
  c.epsilon = 0.1;
  c.seed = 7;
  return c;
}

inline CampaignConfig campaign_preset(const std::string& name) {
  if (name == "string-1d") return preset_string_1d();
  if (name == "honeycomb") return preset_honeycomb();
  if (name == "multipoint") return preset_multipoint();
  throw std::invalid_argument("unknown campaign preset: " + name);
}

// ---------------------------------------------------------------- summaries

namespace detail {

// Norms of all operators under all protocols, the per-operator protocol
// assignment (first protocol that learns it), and campaign-level budget
// figures shared by the norm and estimate commands.
struct CampaignAnalysis {
  std::vector<std::vector<ShadowNorm>> norms;  // [protocol][operator]
  std::vector<long long> assignment;           // operator -> protocol or -1
  nlohmann::json summary;
};

inline CampaignAnalysis analyze_campaign(const CampaignConfig& cfg) {
  CampaignAnalysis out;
  std::vector<ChannelEigenvalues> eigs;
  for (const auto& p : cfg.protocols)
    eigs.push_back(protocol_eigenvalues(p));
  out.norms.resize(cfg.protocols.size());
  for (std::size_t pi = 0; pi < cfg.protocols.size(); ++pi)
    for (std::size_t oi = 0; oi < cfg.operators.size(); ++oi)
      out.norms[pi].push_back(shadow_norm_sq(cfg.operators.operators[oi],
                                             cfg.protocols[pi].covering,
                                             eigs[pi],
                                             cfg.protocols[pi].label()));
  out.assignment.assign(cfg.operators.size(), -1);
  for (std::size_t oi = 0; oi < cfg.operators.size(); ++oi)
    for (std::size_t pi = 0; pi < cfg.protocols.size(); ++pi)
      if (!out.norms[pi][oi].unlearnable) {
        out.assignment[oi] = static_cast<long long>(pi);
        break;
      }

  std::size_t max_weight = 0;
  for (const auto& op : cfg.operators.operators)
    max_weight = std::max(max_weight, op.weight());

  nlohmann::json per_protocol = nlohmann::json::array();
  std::vector<std::vector<ShadowNorm>> assigned(cfg.protocols.size());
  for (std::size_t oi = 0; oi < cfg.operators.size(); ++oi)
    if (out.assignment[oi] >= 0)
      assigned[static_cast<std::size_t>(out.assignment[oi])].push_back(
          out.norms[static_cast<std::size_t>(out.assignment[oi])][oi]);
  bool all_learnable = true;
  double max_norm = 0.0;
  std::size_t coverings_used = 0;
  for (std::size_t pi = 0; pi < cfg.protocols.size(); ++pi) {
    std::size_t learnable = 0;
    for (const auto& n : out.norms[pi])
      if (!n.unlearnable) {
        ++learnable;
        max_norm = std::max(max_norm, n.value);
      }
    if (!assigned[pi].empty()) ++coverings_used;
    per_protocol.push_back(
        {{"assigned_operators", assigned[pi].size()},
         {"compatible_fraction", cfg.operators.size()
                                     ? static_cast<double>(learnable) /
                                           static_cast<double>(
                                               cfg.operators.size())
                                     : 0.0},
         {"learnable_operators", learnable},
         {"protocol", cfg.protocols[pi].label()}});
  }
  for (long long a : out.assignment) all_learnable &= a >= 0;

  nlohmann::json summary{
      {"all_learnable", all_learnable},
      {"coverings_used", coverings_used},
      {"max_weight", max_weight},
      {"operators", cfg.operators.size()},
      {"per_protocol", per_protocol}};
  // PauliLocal reference on the same operators: ||P||^2 = 3^weight
  double pauli_max_norm = std::pow(3.0, static_cast<double>(max_weight));
  summary["max_norm_sq"] = all_learnable ? nlohmann::json(max_norm)
                                         : nlohmann::json(nullptr);
  summary["pauli_max_norm_sq"] = pauli_max_norm;
  if (all_learnable) {
    // prefactors: budget ~ prefactor * ln(M/coverings) / eps^2
    summary["budget_prefactor"] =
        static_cast<double>(coverings_used) * max_norm;
    summary["pauli_budget_prefactor"] = pauli_max_norm;
  }
  if (cfg.epsilon > 0.0 && all_learnable && cfg.operators.size() > 0) {
    std::vector<std::vector<ShadowNorm>> nonempty;
    for (auto& a : assigned)
      if (!a.empty()) nonempty.push_back(std::move(a));
    summary["budget_split"] = sample_budget_split(nonempty, cfg.epsilon);
    summary["epsilon"] = cfg.epsilon;
  }
  out.summary = std::move(summary);
  return out;
}

}  // namespace detail

// ------------------------------------------------------------------- norms

struct NormReport {
  std::vector<NormRow> rows;
  nlohmann::json summary;
};

// Analytic shadow norms and budgets for every (operator, protocol) pair.
// No simulation.
inline NormReport run_norm(const CampaignConfig& cfg) {
  cfg.validate(true, true);
  detail::CampaignAnalysis an = detail::analyze_campaign(cfg);
  NormReport rep;
  const double ln_m =
      std::log(static_cast<double>(cfg.operators.size()));
  for (std::size_t pi = 0; pi < cfg.protocols.size(); ++pi)
    for (std::size_t oi = 0; oi < cfg.operators.size(); ++oi) {
      NormRow row{cfg.operators.labels[oi], cfg.protocols[pi].label(),
                  an.norms[pi][oi]};
      if (cfg.epsilon > 0.0 && !row.norm.unlearnable)
        row.budget = std::max(
            1.0, std::ceil(ln_m * row.norm.value / (cfg.epsilon * cfg.epsilon)));
      rep.rows.push_back(std::move(row));
    }
  rep.summary = std::move(an.summary);
  return rep;
}

// ------------------------------------------------------------------- sweeps

namespace detail {

inline SweepRow sweep_point_empirical(SweepRow row, const ProtocolSpec& spec,
                                      const PauliString& op,
                                      std::size_t shots, std::uint64_t seed,
                                      std::size_t workers,
                                      EstimatorRoute route) {
  SnapshotDataset ds =
      sample_dataset(spec, MaximallyMixed{spec.covering.num_qubits()}, seed,
                     shots, workers, "maximally-mixed");
  Estimate est = estimate_observable(op, ds, protocol_eigenvalues(spec), {},
                                     1, route, workers);
  row.second_moment = est.second_moment;
  row.second_moment_std_error = est.second_moment_std_error;
  row.hit_frequency = est.hit_frequency;
  return row;
}

}  // namespace detail

// Fig-3-style tables. axis=k: norm vs operator weight for each delta in
// sweep.deltas (contiguous 1D supports on a dimer chain); axis=delta: fixed
// weight k_fixed over delta_grid; axis=n: GHZ block size scaling f_n.
// sweep.shots > 0 adds empirical second-moment columns sampled on the
// maximally mixed state.
inline std::vector<SweepRow> run_sweep(const CampaignConfig& cfg,
                                       std::size_t workers = 1) {
  const SweepSettings& sw = cfg.sweep;
  std::vector<SweepRow> rows;

  auto chain_op = [](std::size_t n, std::size_t k) {
    PauliString p = PauliString::identity(n);
    for (std::size_t j = 0; j < k; ++j) p.set_letter(j, 'Z');
    return p;
  };

  if (sw.axis == "k") {
    const std::size_t n = sw.k_max + (sw.k_max % 2);
    Covering cov = dimer_chain(n, Parity::Even, false);
    for (double delta : sw.deltas) {
      ProtocolSpec spec{cov, BasisFamily::TunablePhase, phi_from_delta(delta)};
      ChannelEigenvalues eigs = protocol_eigenvalues(spec);
      for (std::size_t k = 1; k <= sw.k_max; ++k) {
        PauliString op = chain_op(n, k);
        ShadowNorm norm = shadow_norm_sq(op, cov, eigs, spec.label());
        SweepRow row;
        row.axis = "k";
        row.k = static_cast<long long>(k);
        row.delta = delta;
        if (norm.unlearnable) {
          row.status = "UNLEARNABLE";
        } else {
          row.norm_sq = norm.value;
          if (sw.shots > 0)
            row = detail::sweep_point_empirical(
                row, spec, op, sw.shots,
                mix64(cfg.seed ^ mix64(rows.size() + 1)), workers, cfg.route);
        }
        rows.push_back(std::move(row));
      }
    }
  } else if (sw.axis == "delta") {
    std::vector<double> grid = sw.delta_grid;
    if (grid.empty())
      for (int i = 0; i <= 8; ++i)
        grid.push_back(max_tunable_delta() * i / 8.0);
    const std::size_t k = sw.k_fixed;
    const std::size_t n = k + (k % 2);
    Covering cov = dimer_chain(n, Parity::Even, false);
    for (double delta : grid) {
      ProtocolSpec spec{cov, BasisFamily::TunablePhase, phi_from_delta(delta)};
      ChannelEigenvalues eigs = protocol_eigenvalues(spec);
      PauliString op = chain_op(n, k);
      ShadowNorm norm = shadow_norm_sq(op, cov, eigs, spec.label());
      SweepRow row;
      row.axis = "delta";
      row.k = static_cast<long long>(k);
      row.delta = delta;
      if (norm.unlearnable) {
        row.status = "UNLEARNABLE";
      } else {
        row.norm_sq = norm.value;
        if (sw.shots > 0)
          row = detail::sweep_point_empirical(
              row, spec, op, sw.shots,
              mix64(cfg.seed ^ mix64(rows.size() + 1)), workers, cfg.route);
      }
      rows.push_back(std::move(row));
    }
  } else if (sw.axis == "n") {
    for (std::size_t n = 1; n <= sw.n_max; ++n) {
      SweepRow row;
      row.axis = "n";
      row.n = static_cast<long long>(n);
      row.k = static_cast<long long>(n);
      row.f_n = scaling_factor(n);
      std::vector<std::uint32_t> all(n);
      for (std::size_t q = 0; q < n; ++q) all[q] = static_cast<std::uint32_t>(q);
      Covering cov(n, {all});
      ProtocolSpec spec{cov,
                        n == 1 ? BasisFamily::PauliLocal : BasisFamily::Ghz};
      ChannelEigenvalues eigs = protocol_eigenvalues(spec);
      PauliString op = chain_op(n, n);
      ShadowNorm norm = shadow_norm_sq(op, cov, eigs, spec.label());
      row.norm_sq = norm.value;
      if (sw.shots > 0)
        row = detail::sweep_point_empirical(
            row, spec, op, sw.shots, mix64(cfg.seed ^ mix64(rows.size() + 1)),
            workers, cfg.route);
      rows.push_back(std::move(row));
    }
  } else {
    throw std::invalid_argument("sweep axis must be k, delta or n");
  }

  if (cfg.epsilon > 0.0) {
    std::size_t learnable = 0;
    for (const auto& r : rows) learnable += r.status == "OK";
    const double ln_m = std::log(static_cast<double>(std::max<std::size_t>(
        learnable, 1)));
    for (auto& r : rows)
      if (r.status == "OK")
        r.budget = std::max(
            1.0, std::ceil(ln_m * r.norm_sq / (cfg.epsilon * cfg.epsilon)));
  }
  return rows;
}

// ---------------------------------------------------------------- estimates

struct EstimateReport {
  std::vector<Estimate> rows;
  std::vector<SnapshotDataset> datasets;
  nlohmann::json summary;
};

// Samples one dataset per protocol (master seed derived from the campaign
// seed and the protocol index) and estimates every operator against the
// first dataset that can learn it.
inline EstimateReport run_estimate(const CampaignConfig& cfg,
                                   std::size_t workers = 1) {
  cfg.validate(true, true);
  QuantumState state =
      prepare_preset(cfg.state_preset, cfg.num_qubits, cfg.state_seed);

  EstimateReport rep;
  for (std::size_t pi = 0; pi < cfg.protocols.size(); ++pi)
    rep.datasets.push_back(
        sample_dataset(cfg.protocols[pi], state, mix64(cfg.seed ^ (pi + 1)),
                       cfg.shots, workers, cfg.state_preset));
  rep.rows = estimate_set(cfg.operators, rep.datasets, cfg.groups, cfg.route,
                          workers);

  detail::CampaignAnalysis an = detail::analyze_campaign(cfg);
  rep.summary = std::move(an.summary);
  nlohmann::json ds_info = nlohmann::json::array();
  for (const auto& ds : rep.datasets)
    ds_info.push_back({{"fingerprint", protocol_fingerprint(ds.protocol)},
                       {"protocol", ds.protocol.label()},
                       {"seed", ds.seed},
                       {"shots", ds.snapshots.size()},
                       {"state", ds.state_label}});
  rep.summary["datasets"] = std::move(ds_info);
  std::size_t ok = 0;
  for (const auto& e : rep.rows) ok += e.learnable();
  rep.summary["estimated"] = ok;
  rep.summary["unlearnable"] = rep.rows.size() - ok;
  return rep;
}

}  // namespace shadows
