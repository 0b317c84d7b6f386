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

#ifndef COVER_GREEDY_HPP_
#define COVER_GREEDY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cover/error.hpp"
#include "cover/instance.hpp"
#include "cover/rational.hpp"

namespace cover {

// How to order sets whose charged weights are equal.
enum class TieBreak {
  kLowestIndex,
  // Larger residual first, then lower index.
  kLargestResidual,
};

inline std::string_view TieBreakName(TieBreak tie) {
  return tie == TieBreak::kLowestIndex ? "index" : "max-size";
}

// Everything the greedy run produced that the bounds need.
struct GreedyTrace {
  TieBreak tie = TieBreak::kLowestIndex;
  std::vector<SetIndex> chosen;
  // Newly covered element counts, one per iteration.
  std::vector<std::size_t> s;
  // Uncovered counts m_0 = m, m_1, ..., m_l = 0.
  std::vector<std::size_t> residuals;
  // Charged weight w_k / s_k of the chosen set at each iteration.
  std::vector<Rational> ratios;
  Rational total_weight;

  std::size_t m() const { return residuals.empty() ? 0 : residuals.front(); }
  std::size_t iterations() const { return chosen.size(); }

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

// Charged-weight greedy. Each iteration picks the set minimizing
// weight / (number of its still-uncovered elements) among sets that still
// have an uncovered element, then removes the covered elements from every
// other set. Residual sizes are updated through the element->sets incidence
// lists, so a run costs O(l*n + sum of |S_i| * frequency) comparisons.
inline GreedyTrace Greedy(const Instance& instance,
                          TieBreak tie = TieBreak::kLowestIndex) {
  Validate(instance);
  RequirePositiveWeights(instance);

  const std::size_t n = instance.n();
  std::vector<std::vector<SetIndex>> containing(instance.m + 1);
  std::vector<std::size_t> residual(n);
  for (SetIndex i = 0; i < n; ++i) {
    residual[i] = instance.sets[i].elements.size();
    for (Element e : instance.sets[i].elements) containing[e].push_back(i);
  }

  GreedyTrace trace;
  trace.tie = tie;
  trace.residuals.push_back(instance.m);
  std::vector<bool> covered(instance.m + 1, false);
  std::size_t uncovered = instance.m;
  trace.total_weight = 0;

  while (uncovered > 0) {
    SetIndex best = n;
    for (SetIndex i = 0; i < n; ++i) {
      if (residual[i] == 0) continue;
      if (best == n) {
        best = i;
        continue;
      }
      // w_i / r_i < w_b / r_b  <=>  w_i * r_b < w_b * r_i (all positive).
      const Rational lhs = instance.sets[i].weight * residual[best];
      const Rational rhs = instance.sets[best].weight * residual[i];
      if (lhs < rhs ||
          (lhs == rhs && tie == TieBreak::kLargestResidual &&
           residual[i] > residual[best])) {
        best = i;
      }
    }
    // Validation guarantees some set still holds an uncovered element.
    const std::size_t gained = residual[best];
    trace.chosen.push_back(best);
    trace.s.push_back(gained);
    trace.ratios.push_back(instance.sets[best].weight / gained);
    trace.total_weight += instance.sets[best].weight;
    for (Element e : instance.sets[best].elements) {
      if (covered[e]) continue;
      covered[e] = true;
      for (SetIndex j : containing[e]) --residual[j];
    }
    uncovered -= gained;
    trace.residuals.push_back(uncovered);
  }
  return trace;
}

struct ReplayReport {
  bool ok = true;
  // First divergence, empty when ok.
  std::string message;

  explicit operator bool() const { return ok; }
};

// Re-derives the greedy run from scratch (recounting each set's uncovered
// elements every step) and compares it with `trace` field by field.
inline ReplayReport ReplayCheck(const Instance& instance,
                                const GreedyTrace& trace) {
  auto fail = [](std::string msg) { return ReplayReport{false, std::move(msg)}; };

  if (!IsValid(instance)) return fail("instance is invalid");
  for (const SetEntry& set : instance.sets) {
    if (set.weight <= 0) return fail("instance has a non-positive weight");
  }
  const std::size_t l = trace.chosen.size();
  if (trace.s.size() != l || trace.ratios.size() != l ||
      trace.residuals.size() != l + 1) {
    return fail("trace field lengths disagree");
  }
  if (trace.residuals.front() != instance.m) {
    return fail("m_0 = " + std::to_string(trace.residuals.front()) +
                " but m = " + std::to_string(instance.m));
  }
  for (std::size_t k = 0; k < l; ++k) {
    if (trace.s[k] == 0 || trace.residuals[k] < trace.s[k] ||
        trace.residuals[k + 1] != trace.residuals[k] - trace.s[k]) {
      return fail("residual counts do not telescope at iteration " +
                  std::to_string(k + 1));
    }
  }
  if (trace.residuals.back() != 0) return fail("m_l != 0");

  std::vector<bool> covered(instance.m + 1, false);
  Rational weight = 0;
  for (std::size_t k = 0; k < l; ++k) {
    std::vector<std::size_t> fresh(instance.n(), 0);
    for (SetIndex i = 0; i < instance.n(); ++i) {
      for (Element e : instance.sets[i].elements) {
        if (!covered[e]) ++fresh[i];
      }
    }
    SetIndex expected = instance.n();
    Rational best_ratio;
    for (SetIndex i = 0; i < instance.n(); ++i) {
      if (fresh[i] == 0) continue;
      const Rational ratio = instance.sets[i].weight / fresh[i];
      bool better = expected == instance.n() || ratio < best_ratio;
      if (!better && ratio == best_ratio &&
          trace.tie == TieBreak::kLargestResidual) {
        better = fresh[i] > fresh[expected];
      }
      if (better) {
        expected = i;
        best_ratio = ratio;
      }
    }
    const std::string at = " at iteration " + std::to_string(k + 1);
    if (expected == instance.n()) return fail("no candidate set left" + at);
    if (trace.chosen[k] != expected) {
      return fail("chose set " + std::to_string(trace.chosen[k] + 1) +
                  ", expected set " + std::to_string(expected + 1) + at);
    }
    if (trace.s[k] != fresh[expected]) {
      return fail("s_k = " + std::to_string(trace.s[k]) + ", expected " +
                  std::to_string(fresh[expected]) + at);
    }
    if (trace.ratios[k] != best_ratio) {
      return fail("ratio " + ToString(trace.ratios[k]) + ", expected " +
                  ToString(best_ratio) + at);
    }
    for (Element e : instance.sets[expected].elements) covered[e] = true;
    weight += instance.sets[expected].weight;
  }
  if (weight != trace.total_weight) {
    return fail("total weight " + ToString(trace.total_weight) +
                ", expected " + ToString(weight));
  }
  return {};
}

// One row per iteration: iter,set_index,s_k,m_k,ratio,cumulative_weight.
// set_index is 1-based; rationals are exact "p/q".
inline std::string TraceCsv(const GreedyTrace& trace) {
  std::string out = "iter,set_index,s_k,m_k,ratio,cumulative_weight\n";
  Rational cumulative = 0;
  for (std::size_t k = 0; k < trace.chosen.size(); ++k) {
    cumulative += trace.ratios[k] * trace.s[k];
    out += std::to_string(k + 1) + "," + std::to_string(trace.chosen[k] + 1) +
           "," + std::to_string(trace.s[k]) + "," +
           std::to_string(trace.residuals[k + 1]) + "," +
           ToString(trace.ratios[k]) + "," + ToString(cumulative) + "\n";
  }
  return out;
}

}  // namespace cover

#endif  // COVER_GREEDY_HPP_
