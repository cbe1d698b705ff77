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

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadows/protocol.hpp"
#include "shadows/rng.hpp"

namespace shadows {

// One randomized measurement record: the scrambler drawn for every qubit
// (single-qubit Clifford table index; identity for qubits the protocol does
// not scramble) and the readout bit string.
struct Snapshot {
  std::uint64_t index = 0;
  std::vector<std::uint32_t> scramblers;
  std::vector<std::uint64_t> outcome;  // bit q of word q/64

  bool outcome_bit(std::size_t q) const {
    return (outcome[q >> 6] >> (q & 63)) & 1;
  }
};

struct SnapshotDataset {
  ProtocolSpec protocol;
  std::uint64_t seed = 0;
  std::string state_label;
  std::vector<Snapshot> snapshots;

  std::size_t num_qubits() const { return protocol.covering.num_qubits(); }
};

// Stable id of a protocol layout, used to match datasets against configs.
inline std::string protocol_fingerprint(const ProtocolSpec& spec) {
  std::string text = spec.to_json().dump();
  std::uint64_t h = 0x811c9dc5a2ce1d53ULL;
  for (unsigned char c : text) h = mix64(h ^ c);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

inline std::string outcome_to_hex(const std::vector<std::uint64_t>& words,
                                  std::size_t n) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  const std::size_t n_bytes = (n + 7) / 8;
  out.reserve(2 * n_bytes);
  for (std::size_t j = 0; j < n_bytes; ++j) {
    unsigned byte = (words[j >> 3] >> (8 * (j & 7))) & 0xff;
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
  }
  return out;
}

inline std::vector<std::uint64_t> hex_to_outcome(const std::string& hex,
                                                 std::size_t n) {
  const std::size_t n_bytes = (n + 7) / 8;
  if (hex.size() != 2 * n_bytes)
    throw std::invalid_argument("snapshot outcome: bad hex length");
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("snapshot outcome: bad hex digit");
  };
  std::vector<std::uint64_t> words((n + 63) / 64, 0);
  for (std::size_t j = 0; j < n_bytes; ++j) {
    std::uint64_t byte = (nibble(hex[2 * j]) << 4) | nibble(hex[2 * j + 1]);
    words[j >> 3] |= byte << (8 * (j & 7));
  }
  return words;
}

}  // namespace detail

// Line-delimited JSON: a header object, then one object per snapshot with
// keys "b" (readout bits, little-endian bytes in lowercase hex), "i" (shot
// index), "u" (per-qubit scrambler table indices).
inline void write_snapshots(std::ostream& os, const SnapshotDataset& ds) {
  nlohmann::json header{{"fingerprint", protocol_fingerprint(ds.protocol)},
                        {"format", "shadow-snapshots"},
                        {"num_qubits", ds.num_qubits()},
                        {"protocol", ds.protocol.to_json()},
                        {"seed", ds.seed},
                        {"shots", ds.snapshots.size()},
                        {"state", ds.state_label},
                        {"version", 1}};
  os << header.dump() << '\n';
  const std::size_t n = ds.num_qubits();
  for (const auto& s : ds.snapshots) {
    nlohmann::json line{{"b", detail::outcome_to_hex(s.outcome, n)},
                        {"i", s.index},
                        {"u", s.scramblers}};
    os << line.dump() << '\n';
  }
}

inline SnapshotDataset read_snapshots(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("snapshot stream: missing header");
  nlohmann::json header = nlohmann::json::parse(line);
  if (header.value("format", "") != "shadow-snapshots" ||
      header.value("version", 0) != 1)
    throw std::invalid_argument("snapshot stream: unknown format");
  SnapshotDataset ds{ProtocolSpec::from_json(header.at("protocol")),
                     header.value("seed", std::uint64_t{0}),
                     header.value("state", std::string{}),
                     {}};
  const std::size_t n = ds.num_qubits();
  const std::size_t shots = header.at("shots").get<std::size_t>();
  ds.snapshots.reserve(shots);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    Snapshot s;
    s.index = j.at("i").get<std::uint64_t>();
    s.scramblers = j.at("u").get<std::vector<std::uint32_t>>();
    if (s.scramblers.size() != n)
      throw std::invalid_argument("snapshot line: scrambler count mismatch");
    for (auto u : s.scramblers)
      if (u >= kNumCliffords)
        throw std::invalid_argument("snapshot line: scrambler out of range");
    s.outcome = detail::hex_to_outcome(j.at("b").get<std::string>(), n);
    ds.snapshots.push_back(std::move(s));
  }
  if (ds.snapshots.size() != shots)
    throw std::invalid_argument("snapshot stream: shot count mismatch");
  return ds;
}

inline void write_snapshots_file(const std::string& path,
                                 const SnapshotDataset& ds) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_snapshots(os, ds);
  if (!os) throw std::runtime_error("write failed: " + path);
}

inline SnapshotDataset read_snapshots_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_snapshots(is);
}

}  // namespace shadows
