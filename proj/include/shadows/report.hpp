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

// Tabular output. CSV files carry a header row, shortest round-trip decimal
// numbers, and the literal UNLEARNABLE in value columns of rows whose
// operator the protocol cannot learn, so runs can be diffed byte-for-byte.

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadows/channel.hpp"
#include "shadows/estimator.hpp"

namespace shadows {

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// numeric cell; NaN renders as the given placeholder (UNLEARNABLE or empty)
inline std::string csv_num(double v, const std::string& placeholder) {
  return std::isnan(v) ? placeholder : format_double(v);
}

inline nlohmann::json json_num(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------- estimates

inline void write_estimates_csv(std::ostream& os,
                                const std::vector<Estimate>& rows) {
  os << "label,mean,std_error,median_of_means,shots,status\n";
  for (const auto& e : rows) {
    const std::string ph = e.learnable() ? "" : "UNLEARNABLE";
    os << detail::csv_field(e.label) << ',' << detail::csv_num(e.mean, ph)
       << ',' << detail::csv_num(e.std_error, ph) << ','
       << detail::csv_num(e.median_of_means, ph) << ',' << e.shots << ','
       << e.status << '\n';
  }
}

inline nlohmann::json estimate_to_json(const Estimate& e) {
  return nlohmann::json{{"group_count", e.group_count},
                        {"hit_frequency", detail::json_num(e.hit_frequency)},
                        {"label", e.label},
                        {"mean", detail::json_num(e.mean)},
                        {"median_of_means", detail::json_num(e.median_of_means)},
                        {"norm_sq", detail::json_num(e.norm_sq)},
                        {"protocol", e.protocol_label},
                        {"second_moment", detail::json_num(e.second_moment)},
                        {"second_moment_std_error",
                         detail::json_num(e.second_moment_std_error)},
                        {"shots", e.shots},
                        {"shots_used", e.shots_used},
                        {"status", e.status},
                        {"std_error", detail::json_num(e.std_error)}};
}

// --------------------------------------------------------------------- norms

struct NormRow {
  std::string label;
  std::string protocol;
  ShadowNorm norm;
  double budget = std::numeric_limits<double>::quiet_NaN();  // shots, if
                                                             // epsilon given
};

inline void write_norms_csv(std::ostream& os,
                            const std::vector<NormRow>& rows) {
  os << "label,protocol,norm_sq,budget,status\n";
  for (const auto& r : rows) {
    const bool un = r.norm.unlearnable;
    const std::string ph = un ? "UNLEARNABLE" : "";
    os << detail::csv_field(r.label) << ',' << detail::csv_field(r.protocol)
       << ',' << (un ? ph : format_double(r.norm.value)) << ','
       << detail::csv_num(r.budget, ph) << ',' << (un ? "UNLEARNABLE" : "OK")
       << '\n';
  }
}

inline nlohmann::json norm_row_to_json(const NormRow& r) {
  return nlohmann::json{
      {"budget", detail::json_num(r.budget)},
      {"label", r.label},
      {"norm_sq", r.norm.unlearnable ? nlohmann::json(nullptr)
                                     : nlohmann::json(r.norm.value)},
      {"protocol", r.protocol},
      {"status", r.norm.unlearnable ? "UNLEARNABLE" : "OK"}};
}

// --------------------------------------------------------------------- sweeps

// Long-format sweep rows; exactly one of k / delta / n is the moving axis
// but all context columns are emitted so curves can be grouped.
struct SweepRow {
  std::string axis;  // "k", "delta" or "n"
  long long k = -1;  // -1 renders blank
  double delta = std::numeric_limits<double>::quiet_NaN();
  long long n = -1;
  double f_n = std::numeric_limits<double>::quiet_NaN();
  double norm_sq = std::numeric_limits<double>::quiet_NaN();
  double second_moment = std::numeric_limits<double>::quiet_NaN();
  double second_moment_std_error = std::numeric_limits<double>::quiet_NaN();
  double hit_frequency = std::numeric_limits<double>::quiet_NaN();
  double budget = std::numeric_limits<double>::quiet_NaN();
  std::string status = "OK";
};

inline void write_sweep_csv(std::ostream& os,
                            const std::vector<SweepRow>& rows) {
  os << "axis,k,delta,n,f_n,norm_sq,second_moment,second_moment_std_error,"
        "hit_frequency,budget,status\n";
  for (const auto& r : rows) {
    const std::string ph = r.status == "UNLEARNABLE" ? "UNLEARNABLE" : "";
    os << r.axis << ',' << (r.k < 0 ? "" : std::to_string(r.k)) << ','
       << detail::csv_num(r.delta, "") << ','
       << (r.n < 0 ? "" : std::to_string(r.n)) << ','
       << detail::csv_num(r.f_n, "") << ',' << detail::csv_num(r.norm_sq, ph)
       << ',' << detail::csv_num(r.second_moment, "") << ','
       << detail::csv_num(r.second_moment_std_error, "") << ','
       << detail::csv_num(r.hit_frequency, "") << ','
       << detail::csv_num(r.budget, ph) << ',' << r.status << '\n';
  }
}

inline nlohmann::json sweep_row_to_json(const SweepRow& r) {
  return nlohmann::json{
      {"axis", r.axis},
      {"budget", detail::json_num(r.budget)},
      {"delta", detail::json_num(r.delta)},
      {"f_n", detail::json_num(r.f_n)},
      {"hit_frequency", detail::json_num(r.hit_frequency)},
      {"k", r.k < 0 ? nlohmann::json(nullptr) : nlohmann::json(r.k)},
      {"n", r.n < 0 ? nlohmann::json(nullptr) : nlohmann::json(r.n)},
      {"norm_sq", detail::json_num(r.norm_sq)},
      {"second_moment", detail::json_num(r.second_moment)},
      {"second_moment_std_error",
       detail::json_num(r.second_moment_std_error)},
      {"status", r.status}};
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace shadows
