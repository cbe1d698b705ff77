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

#include <charconv>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace shadows {

// Channel eigenvalues below this threshold are treated as exact zeros: the
// corresponding operator direction is not learnable from the protocol.
inline constexpr double kZeroEigenvalueThreshold = 1e-12;

// A requested computation exceeds a resource guard (qubit count, block size).
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An observable touches a vanishing eigenvalue of the measurement channel.
class unlearnable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reduced fraction used to annotate floating values that have an exact form.
// den == 0 marks "no exact form known".
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 0;

  static Fraction of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Fraction{num, den};
  }

  bool valid() const { return den != 0; }
  double value() const {
    if (!valid()) throw std::logic_error("Fraction: no exact form");
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::string str() const {
    if (!valid()) return std::string();
    return std::to_string(num) + "/" + std::to_string(den);
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Shortest round-trip decimal form; locale independent, so reports generated
// with the same inputs are byte-identical.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Deterministic summation: the result depends only on the element order,
// never on chunking or thread count.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

// Runs fn(begin, end) over disjoint chunks of [0, n). Chunk boundaries depend
// only on n and the worker count; callers that write to disjoint
// per-index slots get identical results for any worker count.
inline void parallel_for_chunks(
    std::uint64_t n, unsigned workers,
    const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    fn(0, n);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
    std::uint64_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace shadows
