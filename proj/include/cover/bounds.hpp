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

// Accuracy estimates for a greedy cover.
//
// For a greedy run covering s_k new elements at iteration k, with m_k
// elements left uncovered afterwards (m_0 = m), the instance-wise bound is
//
//   w(Gr) / w(Opt) <= G(s) = sum_k s_k / m_{k-1} = H(m) - Delta(P),
//
// where H is the harmonic number and Delta(P) >= 0, with equality exactly
// when every s_k is 1. Rearranged, w(Gr) / G(s) is a lower bound on w(Opt).
// The classical guarantees H(m), H(max |S_i|) and, when an optimum is known,
// H(max |S_i| over Opt) are reported alongside, plus the worst-case
// unweighted range ln m - ln ln m + {-0.31, +0.78}.

#ifndef COVER_BOUNDS_HPP_
#define COVER_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cover/error.hpp"
#include "cover/greedy.hpp"
#include "cover/instance.hpp"
#include "cover/rational.hpp"

namespace cover {

inline Rational Harmonic(std::size_t j) {
  if (j == 0) {
    throw Error(ErrorCode::kNonPositiveArgument, "harmonic(0) is undefined");
  }
  // Sum over a common denominator: numerator/denominator stay integral.
  Integer num = 0, den = 1;
  for (std::size_t k = 1; k <= j; ++k) {
    num = num * k + den;
    den *= k;
  }
  return Rational(num, den);
}

// Throws kInvalidTrace unless s_k >= 1, m_k = m_{k-1} - s_k and m_l = 0.
inline void CheckTrace(const GreedyTrace& trace) {
  const std::size_t l = trace.s.size();
  if (l == 0 || trace.residuals.size() != l + 1) {
    throw Error(ErrorCode::kInvalidTrace, "trace is empty or malformed");
  }
  for (std::size_t k = 0; k < l; ++k) {
    if (trace.s[k] == 0 || trace.s[k] > trace.residuals[k] ||
        trace.residuals[k + 1] != trace.residuals[k] - trace.s[k]) {
      throw Error(ErrorCode::kInvalidTrace,
                  "residuals do not telescope at iteration " +
                      std::to_string(k + 1));
    }
  }
  if (trace.residuals.back() != 0) {
    throw Error(ErrorCode::kInvalidTrace, "trace does not end covered");
  }
}

inline Rational GOfSequence(std::span<const std::size_t> s) {
  std::size_t remaining = 0;
  for (std::size_t x : s) remaining += x;
  Rational g = 0;
  for (std::size_t x : s) {
    g += Rational(x, remaining);
    remaining -= x;
  }
  return g;
}

inline Rational GOf(const GreedyTrace& trace) {
  CheckTrace(trace);
  Rational g = 0;
  for (std::size_t k = 0; k < trace.s.size(); ++k) {
    g += Rational(trace.s[k], trace.residuals[k]);
  }
  return g;
}

// Delta(P) via the per-iteration double sum
//   sum_k sum_{i = m_k + 1}^{m_{k-1}} (1/i - 1/m_{k-1}),
// which never touches H(m) or G(s).
inline Rational DeltaOf(const GreedyTrace& trace) {
  CheckTrace(trace);
  Rational delta = 0;
  for (std::size_t k = 0; k < trace.s.size(); ++k) {
    const std::size_t top = trace.residuals[k];
    for (std::size_t i = trace.residuals[k + 1] + 1; i <= top; ++i) {
      delta += Rational(1, i) - Rational(1, top);
    }
  }
  return delta;
}

struct LogBounds {
  double lower = 0;
  double upper = 0;
};

inline LogBounds LogRatioBounds(std::size_t m) {
  if (m < 3) {
    throw Error(ErrorCode::kArgumentTooSmall,
                "ln ln m requires m >= 3, got " + std::to_string(m));
  }
  const double base = std::log(static_cast<double>(m)) -
                      std::log(std::log(static_cast<double>(m)));
  return {base - 0.31, base + 0.78};
}

// w(Gr) / G(s) <= w(Opt).
inline Rational OptLowerBound(const GreedyTrace& trace) {
  return trace.total_weight / GOf(trace);
}

struct BoundReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t iterations = 0;
  std::size_t m_bar = 0;
  std::optional<std::size_t> m_tilde;
  std::size_t m_of_s = 0;
  Rational greedy_weight;
  Rational H_m;
  Rational H_m_bar;
  std::optional<Rational> H_m_tilde;
  Rational G;
  Rational Delta;
  // Absent for m < 3.
  std::optional<LogBounds> log_bounds;
  Rational opt_lower;
  std::optional<Rational> opt_weight;
  // w(Gr) / w(Opt), only with a known optimum.
  std::optional<Rational> ratio;
};

// `opt` must be an optimal cover when supplied; it populates m_tilde and
// the true ratio.
inline BoundReport MakeBoundReport(const Instance& instance,
                                   const GreedyTrace& trace,
                                   const std::optional<Cover>& opt = {}) {
  CheckTrace(trace);
  if (trace.m() != instance.m) {
    throw Error(ErrorCode::kTraceMismatch,
                "trace covers m = " + std::to_string(trace.m()) +
                    ", instance has m = " + std::to_string(instance.m));
  }
  for (SetIndex i : trace.chosen) {
    if (i >= instance.n()) {
      throw Error(ErrorCode::kTraceMismatch, "trace names a missing set");
    }
  }
  if (!IsCover(instance, trace.chosen) ||
      WeightOf(instance, trace.chosen) != trace.total_weight) {
    throw Error(ErrorCode::kTraceMismatch,
                "trace sets or weight disagree with the instance");
  }
  RequirePositiveWeights(instance);

  BoundReport r;
  r.m = instance.m;
  r.n = instance.n();
  r.iterations = trace.iterations();
  r.m_bar = MaxSetSize(instance);
  r.m_of_s = *std::max_element(trace.s.begin(), trace.s.end());
  r.greedy_weight = trace.total_weight;
  r.H_m = Harmonic(r.m);
  r.H_m_bar = Harmonic(r.m_bar);
  r.G = GOf(trace);
  r.Delta = r.H_m - r.G;
  if (r.m >= 3) r.log_bounds = LogRatioBounds(r.m);
  r.opt_lower = r.greedy_weight / r.G;
  if (opt) {
    if (!IsCover(instance, opt->set_indices)) {
      throw Error(ErrorCode::kTraceMismatch, "optimum is not a cover");
    }
    r.m_tilde = MaxSetSize(instance, opt->set_indices);
    r.H_m_tilde = Harmonic(*r.m_tilde);
    r.opt_weight = WeightOf(instance, opt->set_indices);
    r.ratio = r.greedy_weight / *r.opt_weight;
  }
  return r;
}

namespace internal {

// Ordered (key, value) pairs shared by the kv and CSV renderings. Each
// rational contributes "key" (exact p/q) and "key_approx" (6 decimals).
inline std::vector<std::pair<std::string, std::string>> ReportFields(
    const BoundReport& r) {
  std::vector<std::pair<std::string, std::string>> f;
  auto rational = [&f](const std::string& key,
                       const std::optional<Rational>& value) {
    f.emplace_back(key, value ? ToString(*value) : "");
    f.emplace_back(key + "_approx",
                   value ? FormatFixed(ToDouble(*value), 6) : "");
  };
  auto count = [&f](const std::string& key,
                    const std::optional<std::size_t>& value) {
    f.emplace_back(key, value ? std::to_string(*value) : "");
  };
  count("m", r.m);
  count("n", r.n);
  count("iterations", r.iterations);
  count("m_bar", r.m_bar);
  count("m_tilde", r.m_tilde);
  count("m_of_s", r.m_of_s);
  rational("greedy_weight", r.greedy_weight);
  rational("H_m", r.H_m);
  rational("H_m_bar", r.H_m_bar);
  rational("H_m_tilde", r.H_m_tilde);
  rational("G", r.G);
  rational("Delta", r.Delta);
  f.emplace_back("T_l", r.log_bounds ? FormatFixed(r.log_bounds->lower, 6) : "");
  f.emplace_back("T_u", r.log_bounds ? FormatFixed(r.log_bounds->upper, 6) : "");
  rational("opt_lower", r.opt_lower);
  rational("opt_weight", r.opt_weight);
  rational("ratio", r.ratio);
  return f;
}

}  // namespace internal

// key=value lines; fields without a value are omitted.
inline std::string ToKeyValue(const BoundReport& report) {
  std::string out;
  for (const auto& [key, value] : internal::ReportFields(report)) {
    if (value.empty()) continue;
    out += key + "=" + value + "\n";
  }
  return out;
}

// Header plus one row; missing values are empty cells.
inline std::string ToCsv(const BoundReport& report) {
  std::string header, row;
  for (const auto& [key, value] : internal::ReportFields(report)) {
    if (!header.empty()) {
      header += ",";
      row += ",";
    }
    header += key;
    row += value;
  }
  return header + "\n" + row + "\n";
}

}  // namespace cover

#endif  // COVER_BOUNDS_HPP_
