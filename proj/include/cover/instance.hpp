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

#ifndef COVER_INSTANCE_HPP_
#define COVER_INSTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cover/error.hpp"
#include "cover/rational.hpp"

namespace cover {

// Elements are 1-based ids in [1, m]. Set indices are 0-based positions in
// Instance::sets; text output (CSV, reports) prints them 1-based.
using Element = std::uint32_t;
using SetIndex = std::size_t;

struct SetEntry {
  std::vector<Element> elements;  // sorted, duplicate-free
  Rational weight;

  friend bool operator==(const SetEntry&, const SetEntry&) = default;
};

struct Instance {
  std::size_t m = 0;
  std::vector<SetEntry> sets;
  std::string name;

  std::size_t n() const { return sets.size(); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.m == b.m && a.sets == b.sets;
  }
};

struct Cover {
  std::vector<SetIndex> set_indices;
  Rational weight;
};

// Throws the first violated invariant. Checks run set by set in index
// order, so the reported set index is the first offender.
inline void Validate(const Instance& instance) {
  if (instance.m == 0) {
    throw Error(ErrorCode::kEmptyInstance, "universe size must be >= 1");
  }
  if (instance.sets.empty()) {
    throw Error(ErrorCode::kEmptyInstance, "instance has no sets");
  }
  std::vector<bool> seen(instance.m + 1, false);
  for (SetIndex i = 0; i < instance.sets.size(); ++i) {
    const SetEntry& set = instance.sets[i];
    if (set.elements.empty()) {
      throw Error::AtSet(ErrorCode::kEmptySet, i, "set has no elements");
    }
    if (set.weight < 0) {
      throw Error::AtSet(ErrorCode::kNegativeWeight, i,
                         "weight " + ToString(set.weight) + " is negative");
    }
    Element prev = 0;
    for (Element e : set.elements) {
      if (e < 1 || e > instance.m) {
        throw Error::AtSet(ErrorCode::kElementOutOfRange, i,
                           "element " + std::to_string(e) + " outside [1, " +
                               std::to_string(instance.m) + "]");
      }
      if (e <= prev) {
        throw Error::AtSet(ErrorCode::kElementOutOfRange, i,
                           "elements not strictly increasing at " +
                               std::to_string(e));
      }
      prev = e;
      seen[e] = true;
    }
  }
  for (std::size_t e = 1; e <= instance.m; ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::kUnionNotUniverse,
                  "element " + std::to_string(e) + " is in no set");
    }
  }
}

inline bool IsValid(const Instance& instance) {
  try {
    Validate(instance);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline void RequirePositiveWeights(const Instance& instance) {
  for (SetIndex i = 0; i < instance.sets.size(); ++i) {
    if (instance.sets[i].weight <= 0) {
      throw Error::AtSet(ErrorCode::kNonPositiveWeight, i,
                         "weight must be > 0");
    }
  }
}

inline bool IsCover(const Instance& instance,
                    std::span<const SetIndex> set_indices) {
  std::vector<bool> covered(instance.m + 1, false);
  std::size_t count = 0;
  for (SetIndex i : set_indices) {
    if (i >= instance.sets.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "set index " + std::to_string(i) + " >= n = " +
                      std::to_string(instance.sets.size()));
    }
    for (Element e : instance.sets[i].elements) {
      if (!covered[e]) {
        covered[e] = true;
        ++count;
      }
    }
  }
  return count == instance.m;
}

inline Rational WeightOf(const Instance& instance,
                         std::span<const SetIndex> set_indices) {
  Rational total = 0;
  for (SetIndex i : set_indices) {
    if (i >= instance.sets.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "set index " + std::to_string(i) + " out of range");
    }
    total += instance.sets[i].weight;
  }
  return total;
}

// Builds a Cover from indices; throws kUnionNotUniverse if they do not cover.
inline Cover MakeCover(const Instance& instance,
                       std::vector<SetIndex> set_indices) {
  if (!IsCover(instance, set_indices)) {
    throw Error(ErrorCode::kUnionNotUniverse,
                "selected sets do not cover the universe");
  }
  Cover c;
  c.weight = WeightOf(instance, set_indices);
  c.set_indices = std::move(set_indices);
  return c;
}

// Largest set cardinality over the whole collection.
inline std::size_t MaxSetSize(const Instance& instance) {
  std::size_t best = 0;
  for (const SetEntry& s : instance.sets) {
    best = std::max(best, s.elements.size());
  }
  return best;
}

inline std::size_t MaxSetSize(const Instance& instance,
                              std::span<const SetIndex> set_indices) {
  std::size_t best = 0;
  for (SetIndex i : set_indices) {
    best = std::max(best, instance.sets.at(i).elements.size());
  }
  return best;
}

}  // namespace cover

#endif  // COVER_INSTANCE_HPP_
