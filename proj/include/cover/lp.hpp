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

// LP relaxation of weighted set cover:
//
//   min sum_i w_i x_i   s.t.  sum_{i : j in S_i} x_i >= 1 for every j,  x >= 0.
//
// Solved through its dual packing program
//
//   max sum_j y_j       s.t.  sum_{j in S_i} y_j <= w_i for every i,    y >= 0,
//
// whose slack basis is feasible from the start (w >= 0), so a single-phase
// dense tableau simplex suffices. The covering solution x is read off the
// reduced costs of the slack columns.

#ifndef COVER_LP_HPP_
#define COVER_LP_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cover/error.hpp"
#include "cover/greedy.hpp"
#include "cover/instance.hpp"
#include "cover/rational.hpp"

namespace cover {

struct FractionalCover {
  std::vector<double> x;
  double weight = 0;
  // Present when the solution was certified in exact arithmetic.
  std::optional<std::vector<Rational>> exact_x;
  std::optional<Rational> exact_weight;
};

enum class LpStatus { kOptimal, kIterationLimit };

struct LpOutcome {
  FractionalCover cover;
  double objective = 0;
  // Exact LP optimum, proven by a matching rational primal/dual pair.
  std::optional<Rational> exact_objective;
  // Packing duals y_j (one per element); a lower-bound witness.
  std::vector<double> duals;
  LpStatus status = LpStatus::kIterationLimit;
  std::size_t iterations = 0;
  double tol = 1e-9;
};

struct LpOptions {
  double tol = 1e-9;
  // 0 selects 50 * (m + n).
  std::size_t max_iterations = 0;
  // Pivots with zero step before switching to Bland's rule.
  std::size_t degeneracy_streak = 50;
  // Tableau entries n * (m + n) above this are refused (iteration-limit).
  std::size_t max_tableau_entries = std::size_t{60} * 1000 * 1000;
  // Certification is attempted when m * n is at most this.
  std::size_t certify_limit = 1000 * 1000;
  std::int64_t certify_max_denominator = 1000 * 1000;
};

// Exact check: sum_{i : j in S_i} x_i >= 1 for all j and x >= 0.
inline bool CheckFractionalCover(const Instance& instance,
                                 std::span<const Rational> x) {
  if (x.size() != instance.n()) {
    throw Error(ErrorCode::kLengthMismatch,
                "got " + std::to_string(x.size()) + " coefficients for " +
                    std::to_string(instance.n()) + " sets");
  }
  std::vector<Rational> load(instance.m + 1, Rational(0));
  for (SetIndex i = 0; i < instance.n(); ++i) {
    if (x[i] < 0) return false;
    if (x[i] == 0) continue;
    for (Element e : instance.sets[i].elements) load[e] += x[i];
  }
  for (std::size_t e = 1; e <= instance.m; ++e) {
    if (load[e] < 1) return false;
  }
  return true;
}

inline bool CheckFractionalCover(const Instance& instance,
                                 std::span<const double> x, double tol) {
  if (x.size() != instance.n()) {
    throw Error(ErrorCode::kLengthMismatch,
                "got " + std::to_string(x.size()) + " coefficients for " +
                    std::to_string(instance.n()) + " sets");
  }
  std::vector<double> load(instance.m + 1, 0.0);
  for (SetIndex i = 0; i < instance.n(); ++i) {
    if (x[i] < -tol) return false;
    for (Element e : instance.sets[i].elements) load[e] += x[i];
  }
  for (std::size_t e = 1; e <= instance.m; ++e) {
    if (load[e] < 1.0 - tol) return false;
  }
  return true;
}

namespace internal {

// Rounds the float primal/dual pair to nearby rationals and checks exact
// primal feasibility, dual feasibility and equal objectives. Success proves
// optimality by weak duality.
inline void CertifyLp(const Instance& instance, LpOutcome& out,
                      std::int64_t max_denominator) {
  std::vector<Rational> x(instance.n());
  for (SetIndex i = 0; i < instance.n(); ++i) {
    x[i] = ApproximateRational(std::max(0.0, out.cover.x[i]), max_denominator);
  }
  std::vector<Rational> y(instance.m + 1, Rational(0));
  for (std::size_t j = 1; j <= instance.m; ++j) {
    y[j] = ApproximateRational(std::max(0.0, out.duals[j - 1]), max_denominator);
  }
  if (!CheckFractionalCover(instance, x)) return;
  Rational primal = 0;
  for (SetIndex i = 0; i < instance.n(); ++i) {
    const SetEntry& set = instance.sets[i];
    Rational load = 0;
    for (Element e : set.elements) load += y[e];
    if (load > set.weight) return;
    primal += set.weight * x[i];
  }
  Rational dual = 0;
  for (std::size_t j = 1; j <= instance.m; ++j) dual += y[j];
  if (primal != dual) return;
  out.exact_objective = primal;
  out.cover.exact_weight = primal;
  out.cover.exact_x = std::move(x);
}

}  // namespace internal

inline LpOutcome SolveLp(const Instance& instance,
                         const LpOptions& options = {}) {
  Validate(instance);
  RequirePositiveWeights(instance);
  if (!(options.tol > 0)) {
    throw Error(ErrorCode::kInvalidSpec, "tolerance must be positive");
  }
  const std::size_t m = instance.m;
  const std::size_t rows = instance.n();
  const std::size_t cols = m + rows;

  LpOutcome out;
  out.tol = options.tol;
  if (rows * cols > options.max_tableau_entries) {
    out.status = LpStatus::kIterationLimit;
    return out;
  }
  const std::size_t max_iterations =
      options.max_iterations ? options.max_iterations : 50 * (m + rows);
  const double tol = options.tol;

  // Row-major tableau B^{-1} [A | I], right-hand side B^{-1} w, and reduced
  // costs c_B B^{-1} A_j - c_j for the maximization.
  std::vector<double> tab(rows * cols, 0.0);
  std::vector<double> rhs(rows);
  std::vector<double> reduced(cols, 0.0);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (Element e : instance.sets[i].elements) tab[i * cols + (e - 1)] = 1.0;
    tab[i * cols + m + i] = 1.0;
    rhs[i] = ToDouble(instance.sets[i].weight);
    basis[i] = m + i;
  }
  for (std::size_t j = 0; j < m; ++j) reduced[j] = -1.0;
  double objective = 0.0;

  std::size_t degenerate = 0;
  bool bland = false;
  out.status = LpStatus::kIterationLimit;
  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    std::size_t enter = cols;
    if (bland) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (reduced[j] < -tol) {
          enter = j;
          break;
        }
      }
    } else {
      double most = -tol;
      for (std::size_t j = 0; j < cols; ++j) {
        if (reduced[j] < most) {
          most = reduced[j];
          enter = j;
        }
      }
    }
    if (enter == cols) {
      out.status = LpStatus::kOptimal;
      break;
    }

    std::size_t leave = rows;
    double best = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double a = tab[r * cols + enter];
      if (a <= tol) continue;
      const double ratio = std::max(0.0, rhs[r]) / a;
      if (leave == rows || ratio < best - tol ||
          (ratio <= best + tol && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) {
      // The packing program is bounded whenever every element is covered.
      throw Error(ErrorCode::kNumericalFailure, "unbounded pivot column");
    }

    if (best <= tol) {
      if (++degenerate >= options.degeneracy_streak) bland = true;
    } else {
      degenerate = 0;
      bland = false;
    }

    double* prow = &tab[leave * cols];
    const double pivot = prow[enter];
    for (std::size_t j = 0; j < cols; ++j) prow[j] /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      double* row = &tab[r * cols];
      const double factor = row[enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) row[j] -= factor * prow[j];
      row[enter] = 0.0;
      rhs[r] -= factor * rhs[leave];
    }
    const double factor = reduced[enter];
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= factor * prow[j];
    reduced[enter] = 0.0;
    objective -= factor * rhs[leave];
    basis[leave] = enter;
  }

  out.duals.assign(m, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < m) out.duals[basis[r]] = std::max(0.0, rhs[r]);
  }
  out.cover.x.resize(rows);
  double weight = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    out.cover.x[i] = std::max(0.0, reduced[m + i]);
    weight += ToDouble(instance.sets[i].weight) * out.cover.x[i];
  }
  out.cover.weight = weight;
  out.objective = objective;

  if (out.status == LpStatus::kOptimal) {
    if (!CheckFractionalCover(instance, out.cover.x, tol * 10)) {
      throw Error(ErrorCode::kNumericalFailure,
                  "final covering solution is infeasible beyond tolerance");
    }
    if (m * rows <= options.certify_limit) {
      internal::CertifyLp(instance, out, options.certify_max_denominator);
    }
    if (out.exact_objective) out.objective = ToDouble(*out.exact_objective);
  }
  return out;
}

inline LpOutcome SolveLp(const Instance& instance, double tol) {
  LpOptions options;
  options.tol = tol;
  return SolveLp(instance, options);
}

// Ratio with the exact value when the LP optimum was certified.
struct Estimate {
  double value = 0;
  std::optional<Rational> exact;
};

// R(P) = w(Gr) / w(Opt_LP), an upper bound on w(Gr) / w(Opt).
inline Estimate REstimate(const GreedyTrace& trace, const LpOutcome& lp) {
  if (lp.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNonOptimalLp, "LP did not reach optimality");
  }
  Estimate e;
  if (lp.exact_objective) {
    e.exact = trace.total_weight / *lp.exact_objective;
    e.value = ToDouble(*e.exact);
  } else {
    e.value = ToDouble(trace.total_weight) / lp.objective;
  }
  return e;
}

// IG(P) = w(Opt) / w(Opt_LP).
inline Estimate IntegralityGap(const Rational& opt_weight,
                               const LpOutcome& lp) {
  if (lp.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNonOptimalLp, "LP did not reach optimality");
  }
  Estimate e;
  if (lp.exact_objective) {
    e.exact = opt_weight / *lp.exact_objective;
    e.value = ToDouble(*e.exact);
  } else {
    e.value = ToDouble(opt_weight) / lp.objective;
  }
  return e;
}

// set_index (1-based), x_i.
inline std::string LpSolutionCsv(const LpOutcome& lp) {
  std::string out = "set_index,x\n";
  for (std::size_t i = 0; i < lp.cover.x.size(); ++i) {
    out += std::to_string(i + 1) + ",";
    out += lp.cover.exact_x ? ToString((*lp.cover.exact_x)[i])
                            : FormatFixed(lp.cover.x[i], 12);
    out += "\n";
  }
  return out;
}

// The covering program in CPLEX LP text format, for external solvers.
inline std::string ToLpFormat(const Instance& instance) {
  auto number = [](const Rational& r) {
    if (Denominator(r) == 1) return Numerator(r).str();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", ToDouble(r));
    return std::string(buf);
  };
  std::string out = "\\ weighted set cover LP relaxation\nMinimize\n obj:";
  for (SetIndex i = 0; i < instance.n(); ++i) {
    out += (i == 0 ? " " : " + ") + number(instance.sets[i].weight) + " x" +
           std::to_string(i + 1);
  }
  out += "\nSubject To\n";
  std::vector<std::vector<SetIndex>> containing(instance.m + 1);
  for (SetIndex i = 0; i < instance.n(); ++i) {
    for (Element e : instance.sets[i].elements) containing[e].push_back(i);
  }
  for (std::size_t e = 1; e <= instance.m; ++e) {
    out += " e" + std::to_string(e) + ":";
    for (std::size_t t = 0; t < containing[e].size(); ++t) {
      out += (t == 0 ? " x" : " + x") + std::to_string(containing[e][t] + 1);
    }
    out += " >= 1\n";
  }
  out += "Bounds\n";
  for (SetIndex i = 0; i < instance.n(); ++i) {
    out += " x" + std::to_string(i + 1) + " >= 0\n";
  }
  out += "End\n";
  return out;
}

}  // namespace cover

#endif  // COVER_LP_HPP_
