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

// Exact minimum-weight covers at desk scale.
//
// Exhaustive mode walks all 2^n subsets in Gray-code order. Branch and bound
// branches on the lowest-index uncovered element over the sets containing it
// (cheapest first; earlier siblings are excluded from later subtrees) and
// prunes a node when its weight plus a lower bound on the cheapest completion
// reaches the incumbent. The lower bound is w(Gr)/G(s) of a greedy run on the
// residual instance, optionally raised to the LP relaxation value.

#ifndef COVER_EXACT_HPP_
#define COVER_EXACT_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cover/bounds.hpp"
#include "cover/error.hpp"
#include "cover/greedy.hpp"
#include "cover/instance.hpp"
#include "cover/lp.hpp"
#include "cover/rational.hpp"

namespace cover {

enum class SolveMethod { kAuto, kExhaustive, kBranchAndBound };

inline std::string_view SolveMethodName(SolveMethod method) {
  switch (method) {
    case SolveMethod::kAuto: return "auto";
    case SolveMethod::kExhaustive: return "exhaustive";
    case SolveMethod::kBranchAndBound: return "branch-and-bound";
  }
  return "auto";
}

inline constexpr std::size_t kMaxExhaustiveSets = 25;
inline constexpr std::size_t kAutoExhaustiveSets = 18;

struct SolveBudget {
  std::uint64_t node_limit = 10'000'000;
  double time_limit_seconds = 60.0;
  SolveMethod method = SolveMethod::kAuto;
  bool use_lp_bound = false;
};

enum class ExactStatus { kProvenOptimal, kBudgetExceeded };

struct BoundStats {
  std::uint64_t greedy_prunes = 0;
  std::uint64_t lp_prunes = 0;
  std::uint64_t infeasible_prunes = 0;
};

struct ExactResult {
  Cover cover;
  Rational weight;
  ExactStatus status = ExactStatus::kBudgetExceeded;
  SolveMethod method = SolveMethod::kAuto;
  std::uint64_t nodes = 0;
  BoundStats bound_stats;
};

// The subproblem left at a branch-and-bound node: the uncovered elements,
// relabelled 1..m', and the still-allowed sets restricted to them.
struct ResidualProblem {
  Instance instance;
  // Index in the original instance of each residual set.
  std::vector<SetIndex> origin;
};

// Handed to the node observer after the bound is computed.
struct NodeSample {
  const ResidualProblem* residual = nullptr;
  Rational greedy_bound;
};

using NodeObserver = std::function<void(const NodeSample&)>;

// nullopt when some uncovered element lies in no allowed set.
inline std::optional<ResidualProblem> MakeResidual(
    const Instance& instance, const std::vector<bool>& covered,
    const std::vector<bool>& allowed) {
  std::vector<Element> relabel(instance.m + 1, 0);
  std::size_t m = 0;
  for (std::size_t e = 1; e <= instance.m; ++e) {
    if (!covered[e]) relabel[e] = static_cast<Element>(++m);
  }
  ResidualProblem r;
  r.instance.m = m;
  std::vector<bool> reached(m + 1, false);
  for (SetIndex i = 0; i < instance.n(); ++i) {
    if (!allowed[i]) continue;
    SetEntry set;
    for (Element e : instance.sets[i].elements) {
      if (relabel[e] != 0) set.elements.push_back(relabel[e]);
    }
    if (set.elements.empty()) continue;
    for (Element e : set.elements) reached[e] = true;
    set.weight = instance.sets[i].weight;
    r.instance.sets.push_back(std::move(set));
    r.origin.push_back(i);
  }
  for (std::size_t e = 1; e <= m; ++e) {
    if (!reached[e]) return std::nullopt;
  }
  return r;
}

namespace internal {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool Passed() const { return std::chrono::steady_clock::now() >= end_; }

 private:
  std::chrono::steady_clock::time_point end_;
};

inline ExactResult SolveExhaustive(const Instance& instance,
                                   const SolveBudget& budget) {
  const std::size_t n = instance.n();
  ExactResult result;
  result.method = SolveMethod::kExhaustive;
  std::vector<std::size_t> count(instance.m + 1, 0);
  std::size_t uncovered = instance.m;
  std::vector<bool> in(n, false);
  Rational weight = 0;
  std::optional<Rational> best;
  std::vector<SetIndex> best_sets;
  Deadline deadline(budget.time_limit_seconds);

  const std::uint64_t total = std::uint64_t{1} << n;
  result.status = ExactStatus::kProvenOptimal;
  // Gray code: step g flips the set at the lowest set bit of g.
  for (std::uint64_t g = 1; g < total; ++g) {
    if (g > budget.node_limit ||
        ((g & 0xFFFF) == 0 && deadline.Passed())) {
      result.status = ExactStatus::kBudgetExceeded;
      break;
    }
    const auto flip = static_cast<SetIndex>(std::countr_zero(g));
    in[flip] = !in[flip];
    if (in[flip]) {
      weight += instance.sets[flip].weight;
      for (Element e : instance.sets[flip].elements) {
        if (count[e]++ == 0) --uncovered;
      }
    } else {
      weight -= instance.sets[flip].weight;
      for (Element e : instance.sets[flip].elements) {
        if (--count[e] == 0) ++uncovered;
      }
    }
    if (uncovered == 0 && (!best || weight < *best)) {
      best = weight;
      best_sets.clear();
      for (SetIndex i = 0; i < n; ++i) {
        if (in[i]) best_sets.push_back(i);
      }
    }
    result.nodes = g;
  }
  if (!best) {
    // Only reachable when the budget stopped the walk early.
    best_sets = Greedy(instance).chosen;
    best = WeightOf(instance, best_sets);
  }
  std::sort(best_sets.begin(), best_sets.end());
  result.cover.set_indices = std::move(best_sets);
  result.cover.weight = *best;
  result.weight = *best;
  return result;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const SolveBudget& budget,
                 NodeObserver observer)
      : instance_(instance),
        budget_(budget),
        observer_(std::move(observer)),
        deadline_(budget.time_limit_seconds),
        covered_(instance.m + 1, false),
        cover_count_(instance.m + 1, 0),
        allowed_(instance.n(), true) {}

  ExactResult Run() {
    const GreedyTrace start = Greedy(instance_);
    incumbent_ = start.chosen;
    incumbent_weight_ = start.total_weight;
    result_.method = SolveMethod::kBranchAndBound;
    stopped_ = false;
    Rational zero = 0;
    Search(zero);
    std::sort(incumbent_.begin(), incumbent_.end());
    result_.cover.set_indices = incumbent_;
    result_.cover.weight = incumbent_weight_;
    result_.weight = incumbent_weight_;
    result_.status =
        stopped_ ? ExactStatus::kBudgetExceeded : ExactStatus::kProvenOptimal;
    return result_;
  }

 private:
  void Search(const Rational& weight) {
    if (stopped_) return;
    if (result_.nodes >= budget_.node_limit ||
        ((result_.nodes & 0x3FF) == 0 && deadline_.Passed())) {
      stopped_ = true;
      return;
    }
    ++result_.nodes;

    std::size_t first_uncovered = 0;
    for (std::size_t e = 1; e <= instance_.m; ++e) {
      if (!covered_[e]) {
        first_uncovered = e;
        break;
      }
    }
    if (first_uncovered == 0) {
      if (weight < incumbent_weight_) {
        incumbent_weight_ = weight;
        incumbent_ = chosen_;
      }
      return;
    }
    if (weight >= incumbent_weight_) return;

    std::optional<ResidualProblem> residual =
        MakeResidual(instance_, covered_, allowed_);
    if (!residual) {
      ++result_.bound_stats.infeasible_prunes;
      return;
    }
    const GreedyTrace sub = Greedy(residual->instance);
    const Rational greedy_bound = sub.total_weight / GOf(sub);
    if (observer_) observer_(NodeSample{&*residual, greedy_bound});

    // The residual greedy cover completes the node into a full cover.
    if (weight + sub.total_weight < incumbent_weight_) {
      incumbent_weight_ = weight + sub.total_weight;
      incumbent_ = chosen_;
      for (SetIndex k : sub.chosen) incumbent_.push_back(residual->origin[k]);
    }
    if (weight + greedy_bound >= incumbent_weight_) {
      ++result_.bound_stats.greedy_prunes;
      return;
    }
    if (budget_.use_lp_bound) {
      const LpOutcome lp = SolveLp(residual->instance);
      if (lp.status == LpStatus::kOptimal) {
        // Float objectives are shaded down before comparing.
        const bool prune =
            lp.exact_objective
                ? weight + *lp.exact_objective >= incumbent_weight_
                : ToDouble(weight) + lp.objective -
                          1e-7 * (1.0 + std::fabs(lp.objective)) >=
                      ToDouble(incumbent_weight_);
        if (prune) {
          ++result_.bound_stats.lp_prunes;
          return;
        }
      }
    }

    std::vector<SetIndex> candidates;
    for (SetIndex i = 0; i < instance_.n(); ++i) {
      if (!allowed_[i]) continue;
      const auto& el = instance_.sets[i].elements;
      if (std::binary_search(el.begin(), el.end(),
                             static_cast<Element>(first_uncovered))) {
        candidates.push_back(i);
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [this](SetIndex a, SetIndex b) {
                       return instance_.sets[a].weight <
                              instance_.sets[b].weight;
                     });
    for (SetIndex t : candidates) {
      allowed_[t] = false;
      Take(t);
      Search(weight + instance_.sets[t].weight);
      Drop(t);
      if (stopped_) break;
    }
    for (SetIndex t : candidates) allowed_[t] = true;
  }

  void Take(SetIndex t) {
    chosen_.push_back(t);
    for (Element e : instance_.sets[t].elements) {
      if (cover_count_[e]++ == 0) covered_[e] = true;
    }
  }

  void Drop(SetIndex t) {
    chosen_.pop_back();
    for (Element e : instance_.sets[t].elements) {
      if (--cover_count_[e] == 0) covered_[e] = false;
    }
  }

  const Instance& instance_;
  const SolveBudget& budget_;
  NodeObserver observer_;
  Deadline deadline_;
  std::vector<bool> covered_;
  std::vector<std::size_t> cover_count_;
  std::vector<bool> allowed_;
  std::vector<SetIndex> chosen_;
  std::vector<SetIndex> incumbent_;
  Rational incumbent_weight_;
  ExactResult result_;
  bool stopped_ = false;
};

}  // namespace internal

inline ExactResult ExactOpt(const Instance& instance,
                            const SolveBudget& budget = {},
                            NodeObserver observer = {}) {
  Validate(instance);
  RequirePositiveWeights(instance);
  if (budget.node_limit == 0 || !(budget.time_limit_seconds > 0)) {
    throw Error(ErrorCode::kInvalidSpec, "budget limits must be positive");
  }
  SolveMethod method = budget.method;
  if (method == SolveMethod::kAuto) {
    method = instance.n() <= kAutoExhaustiveSets ? SolveMethod::kExhaustive
                                                 : SolveMethod::kBranchAndBound;
  }
  if (method == SolveMethod::kExhaustive) {
    if (instance.n() > kMaxExhaustiveSets) {
      throw Error(ErrorCode::kTooManySets,
                  "exhaustive search needs n <= 25, got " +
                      std::to_string(instance.n()));
    }
    return internal::SolveExhaustive(instance, budget);
  }
  return internal::BranchAndBound(instance, budget, std::move(observer)).Run();
}

// Confirms by plain subset enumeration that no strictly cheaper cover exists
// (and that `cover` is a cover at all).
inline bool VerifyCoverOptimal(const Instance& instance, const Cover& cover) {
  const std::size_t n = instance.n();
  if (n > kMaxExhaustiveSets) {
    throw Error(ErrorCode::kTooManySets,
                "verification needs n <= 25, got " + std::to_string(n));
  }
  if (!IsCover(instance, cover.set_indices)) return false;
  const Rational claimed = WeightOf(instance, cover.set_indices);
  const std::size_t words = (instance.m + 64) / 64;
  std::vector<std::vector<std::uint64_t>> bits(
      n, std::vector<std::uint64_t>(words, 0));
  for (SetIndex i = 0; i < n; ++i) {
    for (Element e : instance.sets[i].elements) {
      bits[i][e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  std::vector<std::uint64_t> full(words, 0);
  for (std::size_t e = 1; e <= instance.m; ++e) {
    full[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  std::vector<std::uint64_t> acc(words);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::fill(acc.begin(), acc.end(), 0);
    Rational weight = 0;
    for (SetIndex i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      weight += instance.sets[i].weight;
      for (std::size_t w = 0; w < words; ++w) acc[w] |= bits[i][w];
    }
    if (acc == full && weight < claimed) return false;
  }
  return true;
}

inline std::string_view ExactStatusName(ExactStatus status) {
  return status == ExactStatus::kProvenOptimal ? "proven-optimal"
                                               : "budget-exceeded";
}

// Same key=value layout as the bound report.
inline std::string ToKeyValue(const ExactResult& r) {
  std::string sets;
  for (SetIndex i : r.cover.set_indices) {
    if (!sets.empty()) sets += " ";
    sets += std::to_string(i + 1);
  }
  std::string out;
  out += "status=" + std::string(ExactStatusName(r.status)) + "\n";
  out += "method=" + std::string(SolveMethodName(r.method)) + "\n";
  out += "opt_weight=" + ToString(r.weight) + "\n";
  out += "opt_weight_approx=" + FormatFixed(ToDouble(r.weight), 6) + "\n";
  out += "cover=" + sets + "\n";
  out += "nodes=" + std::to_string(r.nodes) + "\n";
  out += "greedy_prunes=" + std::to_string(r.bound_stats.greedy_prunes) + "\n";
  out += "lp_prunes=" + std::to_string(r.bound_stats.lp_prunes) + "\n";
  out += "infeasible_prunes=" +
         std::to_string(r.bound_stats.infeasible_prunes) + "\n";
  return out;
}

}  // namespace cover

#endif  // COVER_EXACT_HPP_
