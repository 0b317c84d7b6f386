// Copyright 2026 The cover Authors
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

#ifndef COVER_GENERATORS_HPP_
#define COVER_GENERATORS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cover/error.hpp"
#include "cover/instance.hpp"
#include "cover/rational.hpp"

namespace cover {

// A greedy sequence s = (s_1, ..., s_l) with m = sum s_k.
struct SequenceSpec {
  std::vector<std::size_t> s;

  std::size_t m() const {
    std::size_t total = 0;
    for (std::size_t x : s) total += x;
    return total;
  }
};

inline const Rational kDefaultEpsilon = Rational(1, 2);

// An instance on which lowest-index greedy produces exactly `spec.s`:
//
//   S_i = {q_i + 1, ..., q_i + s_i}  (q_i = s_1 + ... + s_{i-1}),
//   w(S_i) = s_i for i < l,  w(S_l) = s_l + 1,
//   A = {1, ..., m},  w(A) = m + epsilon,
//
// so greedy pays m + 1 while {A} is the unique optimum at m + epsilon.
// For l = 1 the instance is the single set {1..m} with weight m, unless
// `allow_singleton` is false.
inline Instance GenClassCs(const SequenceSpec& spec,
                           const Rational& epsilon = kDefaultEpsilon,
                           bool allow_singleton = true) {
  if (spec.s.empty()) {
    throw Error(ErrorCode::kInvalidSpec, "sequence is empty");
  }
  for (std::size_t x : spec.s) {
    if (x == 0) throw Error(ErrorCode::kInvalidSpec, "sequence entry is 0");
  }
  if (epsilon <= 0 || epsilon >= 1) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "epsilon must lie in (0, 1), got " + ToString(epsilon));
  }
  const std::size_t m = spec.m();
  const std::size_t l = spec.s.size();
  Instance instance;
  instance.m = m;
  if (l == 1) {
    if (!allow_singleton) {
      throw Error(ErrorCode::kSingletonSequence,
                  "the construction needs at least two blocks");
    }
    SetEntry all;
    for (std::size_t e = 1; e <= m; ++e) {
      all.elements.push_back(static_cast<Element>(e));
    }
    all.weight = Rational(m);
    instance.sets.push_back(std::move(all));
    instance.name = "cs-" + std::to_string(m);
    return instance;
  }
  std::size_t q = 0;
  instance.name = "cs";
  for (std::size_t i = 0; i < l; ++i) {
    SetEntry block;
    for (std::size_t e = q + 1; e <= q + spec.s[i]; ++e) {
      block.elements.push_back(static_cast<Element>(e));
    }
    block.weight = Rational(spec.s[i] + (i + 1 == l ? 1 : 0));
    q += spec.s[i];
    instance.sets.push_back(std::move(block));
    instance.name += "-" + std::to_string(spec.s[i]);
  }
  SetEntry all;
  for (std::size_t e = 1; e <= m; ++e) {
    all.elements.push_back(static_cast<Element>(e));
  }
  all.weight = Rational(m) + epsilon;
  instance.sets.push_back(std::move(all));
  return instance;
}

inline constexpr int kMaxGf2Dimension = 13;

// m = 2^k - 1 nonzero k-bit vectors; element j is in S_i iff the GF(2)
// inner product of the binary forms of i and j is 1. All weights are 1.
// k is capped at 13 (about 6.7e7 incidences).
inline Instance GenGf2(int k) {
  if (k < 2 || k > kMaxGf2Dimension) {
    throw Error(ErrorCode::kKOutOfRange,
                "k must lie in [2, " + std::to_string(kMaxGf2Dimension) +
                    "], got " + std::to_string(k));
  }
  const std::uint32_t m = (std::uint32_t{1} << k) - 1;
  Instance instance;
  instance.m = m;
  instance.name = "gf2-" + std::to_string(k);
  instance.sets.resize(m);
  for (std::uint32_t i = 1; i <= m; ++i) {
    SetEntry& set = instance.sets[i - 1];
    set.weight = 1;
    set.elements.reserve(std::size_t{1} << (k - 1));
    for (std::uint32_t j = 1; j <= m; ++j) {
      if (std::popcount(i & j) & 1) set.elements.push_back(j);
    }
  }
  return instance;
}

struct RandomSpec {
  std::size_t m = 10;
  std::size_t n = 8;
  // Probability that a given element joins a given set.
  double density = 0.3;
  Rational weight_lo = 1;
  Rational weight_hi = 10;
  // Weights are drawn from lo + (hi - lo) * t / weight_grain, t uniform.
  std::uint32_t weight_grain = 100;
  std::uint64_t seed = 1;
};

// Portable random source: std::mt19937_64 has a fully specified output
// sequence, and every draw below is derived from its raw 64-bit words
// (no std::*_distribution, whose algorithms are implementation-defined).
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound), by rejection.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1) with 53 random bits.
  double Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Each element joins each set independently with `density`. Afterwards an
// empty set receives one uniformly chosen element, and an element left in
// no set is added to a uniformly chosen set, so the result always validates.
inline Instance GenRandom(const RandomSpec& spec) {
  if (spec.m == 0 || spec.n == 0) {
    throw Error(ErrorCode::kInvalidSpec, "m and n must be positive");
  }
  if (!(spec.density > 0 && spec.density <= 1)) {
    throw Error(ErrorCode::kInvalidSpec, "density must lie in (0, 1]");
  }
  if (spec.weight_lo <= 0 || spec.weight_hi < spec.weight_lo) {
    throw Error(ErrorCode::kInvalidSpec, "need 0 < weight_lo <= weight_hi");
  }
  if (spec.weight_grain == 0) {
    throw Error(ErrorCode::kInvalidSpec, "weight_grain must be positive");
  }
  PortableRng rng(spec.seed);
  Instance instance;
  instance.m = spec.m;
  instance.name = "random-" + std::to_string(spec.seed);
  instance.sets.resize(spec.n);
  std::vector<bool> seen(spec.m + 1, false);
  for (SetEntry& set : instance.sets) {
    for (std::size_t e = 1; e <= spec.m; ++e) {
      if (spec.density >= 1 || rng.Unit() < spec.density) {
        set.elements.push_back(static_cast<Element>(e));
      }
    }
    if (set.elements.empty()) {
      set.elements.push_back(static_cast<Element>(1 + rng.Below(spec.m)));
    }
    for (Element e : set.elements) seen[e] = true;
  }
  for (std::size_t e = 1; e <= spec.m; ++e) {
    if (seen[e]) continue;
    auto& elements = instance.sets[rng.Below(spec.n)].elements;
    elements.insert(std::upper_bound(elements.begin(), elements.end(),
                                     static_cast<Element>(e)),
                    static_cast<Element>(e));
  }
  const Rational span = spec.weight_hi - spec.weight_lo;
  for (SetEntry& set : instance.sets) {
    const std::uint64_t t = rng.Below(std::uint64_t{spec.weight_grain} + 1);
    set.weight = spec.weight_lo + span * Rational(t, spec.weight_grain);
  }
  return instance;
}

}  // namespace cover

#endif  // COVER_GENERATORS_HPP_
