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

// Enumeration experiments over greedy sequences s.
//
// Every sequence s of positive integers summing to m is produced by greedy on
// some instance, and G(s) depends on s alone, so the experiments work on the
// sequences directly. For each s, with m(s) = max s_k and mu = m(s) / m:
//
//   - the sequence "qualifies" when G(s) < H(m(s));
//   - its improvement is 100 * (H(m(s)) - G(s)) / H(m(s)).
//
// Sequences are bucketed by mu into (0,.2], (.2,.4], (.4,.6], (.6,.8], (.8,1].
//
// All comparisons are exact: G(s) and H(j) are kept as integers scaled by
// L = lcm(1..m), which fits in 128 bits for the supported m.

#ifndef COVER_EXPERIMENTS_HPP_
#define COVER_EXPERIMENTS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cover/bounds.hpp"
#include "cover/error.hpp"
#include "cover/generators.hpp"
#include "cover/greedy.hpp"
#include "cover/lp.hpp"
#include "cover/rational.hpp"

namespace cover {

enum class SequenceMode {
  kAuto,
  // All ordered tuples (2^(m-1) of them).
  kCompositions,
  // Nonincreasing tuples only (p(m) of them).
  kPartitions,
};

inline std::string_view SequenceModeName(SequenceMode mode) {
  switch (mode) {
    case SequenceMode::kAuto: return "auto";
    case SequenceMode::kCompositions: return "compositions";
    case SequenceMode::kPartitions: return "partitions";
  }
  return "auto";
}

inline constexpr std::size_t kMaxCompositionsM = 28;
inline constexpr std::size_t kMaxPartitionsM = 60;
inline constexpr std::size_t kBucketCount = 5;

inline std::size_t MaxEnumerableM(SequenceMode mode) {
  return mode == SequenceMode::kPartitions ? kMaxPartitionsM
                                           : kMaxCompositionsM;
}

using SequenceVisitor = std::function<void(std::span<const std::size_t>)>;

namespace internal {

inline void CheckEnumerable(std::size_t m, SequenceMode mode) {
  if (m == 0) {
    throw Error(ErrorCode::kNonPositiveArgument, "m must be >= 1");
  }
  if (m > MaxEnumerableM(mode)) {
    throw Error(ErrorCode::kMTooLargeForMode,
                std::string(SequenceModeName(mode)) + " mode supports m <= " +
                    std::to_string(MaxEnumerableM(mode)) + ", got " +
                    std::to_string(m));
  }
}

inline void EnumerateFrom(std::vector<std::size_t>& prefix,
                          std::size_t remaining, std::size_t cap,
                          const SequenceVisitor& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (std::size_t f = 1; f <= std::min(remaining, cap); ++f) {
    prefix.push_back(f);
    EnumerateFrom(prefix, remaining - f, cap == SIZE_MAX ? cap : f, visit);
    prefix.pop_back();
  }
}

}  // namespace internal

// Visits every sequence once, in lexicographic order. `mode` must be
// explicit (compositions or partitions).
inline void EnumerateSequences(std::size_t m, SequenceMode mode,
                               const SequenceVisitor& visit) {
  if (mode == SequenceMode::kAuto) {
    throw Error(ErrorCode::kInvalidSpec, "enumeration needs an explicit mode");
  }
  internal::CheckEnumerable(m, mode);
  std::vector<std::size_t> prefix;
  prefix.reserve(m);
  // Partitions: each part is at most the previous one. The first part is
  // unconstrained, which the cap m already expresses.
  internal::EnumerateFrom(prefix, m,
                          mode == SequenceMode::kCompositions ? SIZE_MAX : m,
                          visit);
}

struct BucketStats {
  // mu in (lower, upper].
  Rational lower;
  Rational upper;
  std::uint64_t total = 0;
  std::uint64_t qualifying = 0;
  double share_pct = 0;
  double mean_improvement_pct = 0;
  double max_improvement_pct = 0;
};

struct SequenceStats {
  std::size_t m = 0;
  SequenceMode mode = SequenceMode::kCompositions;
  std::uint64_t sequences = 0;
  std::array<BucketStats, kBucketCount> buckets;
};

// 0-based bucket of mu = max_part / m: the smallest b with mu <= (b+1)/5.
inline std::size_t BucketOf(std::size_t max_part, std::size_t m) {
  return (kBucketCount * max_part + m - 1) / m - 1;
}

namespace internal {

using Wide = __int128;

// Harmonic numbers and reciprocals scaled by lcm(1..m).
struct ScaledArithmetic {
  explicit ScaledArithmetic(std::size_t m) : inv(m + 1, 0), harmonic(m + 1, 0) {
    Wide lcm = 1;
    for (std::size_t j = 2; j <= m; ++j) {
      Wide a = lcm, b = static_cast<Wide>(j);
      while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
      }
      lcm = lcm / a * static_cast<Wide>(j);
    }
    for (std::size_t j = 1; j <= m; ++j) {
      inv[j] = lcm / static_cast<Wide>(j);
      harmonic[j] = harmonic[j - 1] + inv[j];
    }
  }
  std::vector<Wide> inv;       // L / j
  std::vector<Wide> harmonic;  // L * H(j)
};

// Per-m(s) accumulator; merging is exact, so results do not depend on how
// the work was split.
struct PartAccumulator {
  std::uint64_t total = 0;
  std::uint64_t qualifying = 0;
  Wide gap_sum = 0;                       // sum of L*(H(m(s)) - G(s))
  std::optional<Wide> min_g;              // smallest qualifying L*G(s)

  void Merge(const PartAccumulator& o) {
    total += o.total;
    qualifying += o.qualifying;
    gap_sum += o.gap_sum;
    if (o.min_g && (!min_g || *o.min_g < *min_g)) min_g = o.min_g;
  }
};

class StatsWalker {
 public:
  StatsWalker(const ScaledArithmetic& arith, std::size_t m, bool partitions)
      : arith_(arith), partitions_(partitions), acc_(m + 1) {}

  // Walks all completions of a prefix whose scaled G is `g`, largest part
  // `max_part`, `remaining` elements left, next part at most `cap`.
  void Walk(std::size_t remaining, Wide g, std::size_t max_part,
            std::size_t cap) {
    if (remaining == 0) {
      Leaf(g, max_part);
      return;
    }
    const std::size_t top = std::min(remaining, cap);
    const Wide step = arith_.inv[remaining];
    for (std::size_t f = 1; f <= top; ++f) {
      Walk(remaining - f, g + static_cast<Wide>(f) * step,
           std::max(max_part, f), partitions_ ? f : cap);
    }
  }

  std::vector<PartAccumulator>& acc() { return acc_; }

 private:
  void Leaf(Wide g, std::size_t max_part) {
    PartAccumulator& a = acc_[max_part];
    ++a.total;
    const Wide h = arith_.harmonic[max_part];
    if (g < h) {
      ++a.qualifying;
      a.gap_sum += h - g;
      if (!a.min_g || g < *a.min_g) a.min_g = g;
    }
  }

  const ScaledArithmetic& arith_;
  bool partitions_;
  std::vector<PartAccumulator> acc_;
};

struct WorkItem {
  std::size_t remaining;
  Wide g;
  std::size_t max_part;
  std::size_t cap;
};

inline void SplitWork(const ScaledArithmetic& arith, bool partitions,
                      std::size_t depth, std::size_t remaining, Wide g,
                      std::size_t max_part, std::size_t cap,
                      std::vector<WorkItem>& out) {
  if (depth == 0 || remaining == 0) {
    out.push_back({remaining, g, max_part, cap});
    return;
  }
  const std::size_t top = std::min(remaining, cap);
  for (std::size_t f = 1; f <= top; ++f) {
    SplitWork(arith, partitions, depth - 1, remaining - f,
              g + static_cast<Wide>(f) * arith.inv[remaining],
              std::max(max_part, f), partitions ? f : cap, out);
  }
}

inline long double ToLongDouble(Wide v) {
  // Split to avoid relying on __int128 -> long double conversions.
  const bool negative = v < 0;
  if (negative) v = -v;
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  const long double r =
      static_cast<long double>(hi) * 18446744073709551616.0L +
      static_cast<long double>(lo);
  return negative ? -r : r;
}

}  // namespace internal

// Worker count from COVER_THREADS, else the hardware concurrency.
inline std::size_t DefaultWorkerCount() {
  if (const char* env = std::getenv("COVER_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline SequenceMode ResolveMode(SequenceMode mode, std::size_t m);

// Exact bucket statistics over all sequences of `m`. `workers` = 0 uses
// DefaultWorkerCount().
inline SequenceStats ComputeSequenceStats(std::size_t m, SequenceMode mode,
                                          std::size_t workers = 0) {
  mode = ResolveMode(mode, m);
  internal::CheckEnumerable(m, mode);
  const bool partitions = mode == SequenceMode::kPartitions;
  const internal::ScaledArithmetic arith(m);

  std::vector<internal::WorkItem> items;
  internal::SplitWork(arith, partitions, std::min<std::size_t>(m, 6), m, 0, 0,
                      m, items);
  if (workers == 0) workers = DefaultWorkerCount();
  workers = std::max<std::size_t>(1, std::min(workers, items.size()));

  std::vector<internal::StatsWalker> walkers;
  walkers.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    walkers.emplace_back(arith, m, partitions);
  }
  std::atomic<std::size_t> next{0};
  auto run = [&](std::size_t w) {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& it = items[i];
      walkers[w].Walk(it.remaining, it.g, it.max_part, it.cap);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  std::vector<internal::PartAccumulator> parts(m + 1);
  for (auto& walker : walkers) {
    for (std::size_t j = 1; j <= m; ++j) parts[j].Merge(walker.acc()[j]);
  }

  SequenceStats stats;
  stats.m = m;
  stats.mode = mode;
  std::array<long double, kBucketCount> improvement_sum{};
  for (std::size_t b = 0; b < kBucketCount; ++b) {
    stats.buckets[b].lower = Rational(b, kBucketCount);
    stats.buckets[b].upper = Rational(b + 1, kBucketCount);
  }
  for (std::size_t j = 1; j <= m; ++j) {
    const auto& p = parts[j];
    BucketStats& bucket = stats.buckets[BucketOf(j, m)];
    bucket.total += p.total;
    bucket.qualifying += p.qualifying;
    stats.sequences += p.total;
    if (p.qualifying == 0) continue;
    const long double h = internal::ToLongDouble(arith.harmonic[j]);
    improvement_sum[BucketOf(j, m)] +=
        100.0L * internal::ToLongDouble(p.gap_sum) / h;
    const long double best =
        100.0L * internal::ToLongDouble(arith.harmonic[j] - *p.min_g) / h;
    bucket.max_improvement_pct =
        std::max(bucket.max_improvement_pct, static_cast<double>(best));
  }
  for (std::size_t b = 0; b < kBucketCount; ++b) {
    BucketStats& bucket = stats.buckets[b];
    if (bucket.total > 0) {
      bucket.share_pct =
          100.0 * static_cast<double>(bucket.qualifying) / bucket.total;
    }
    if (bucket.qualifying > 0) {
      bucket.mean_improvement_pct =
          static_cast<double>(improvement_sum[b] / bucket.qualifying);
    }
  }
  return stats;
}

// Reference share row for m = 10, used to pick the enumeration
// universe (the row does not say whether compositions or partitions were
// counted).
inline constexpr std::array<double, kBucketCount> kReferenceShareRow10 = {
    0.0, 13.5, 64.8, 100.0, 100.0};

struct ModeCalibration {
  std::optional<SequenceMode> selected;
  std::array<double, kBucketCount> compositions{};
  std::array<double, kBucketCount> partitions{};
};

inline bool SharesMatch(const std::array<double, kBucketCount>& got,
                        const std::array<double, kBucketCount>& want,
                        double tol) {
  for (std::size_t b = 0; b < kBucketCount; ++b) {
    if (std::fabs(got[b] - want[b]) > tol) return false;
  }
  return true;
}

inline std::array<double, kBucketCount> Shares(const SequenceStats& stats) {
  std::array<double, kBucketCount> out{};
  for (std::size_t b = 0; b < kBucketCount; ++b) {
    out[b] = stats.buckets[b].share_pct;
  }
  return out;
}

// Runs both universes at m = 10 and keeps the one whose shares match the
// reference row within 0.05 points. Compositions win on a double match.
inline ModeCalibration CalibrateSequenceMode() {
  ModeCalibration c;
  c.compositions =
      Shares(ComputeSequenceStats(10, SequenceMode::kCompositions, 1));
  c.partitions = Shares(ComputeSequenceStats(10, SequenceMode::kPartitions, 1));
  if (SharesMatch(c.compositions, kReferenceShareRow10, 0.05)) {
    c.selected = SequenceMode::kCompositions;
  } else if (SharesMatch(c.partitions, kReferenceShareRow10, 0.05)) {
    c.selected = SequenceMode::kPartitions;
  }
  return c;
}

// kAuto resolves to the calibrated universe, falling back to partitions
// beyond the compositions cap.
inline SequenceMode ResolveMode(SequenceMode mode, std::size_t m) {
  if (mode != SequenceMode::kAuto) return mode;
  static const ModeCalibration calibration = CalibrateSequenceMode();
  if (!calibration.selected) {
    throw Error(ErrorCode::kInvalidSpec,
                "neither enumeration universe reproduces the reference row");
  }
  if (m > MaxEnumerableM(*calibration.selected)) {
    return SequenceMode::kPartitions;
  }
  return *calibration.selected;
}

inline SequenceStats Table1(std::size_t m, SequenceMode mode = SequenceMode::kAuto,
                            std::size_t workers = 0) {
  return ComputeSequenceStats(m, mode, workers);
}

inline SequenceStats Table2(std::size_t m, SequenceMode mode = SequenceMode::kAuto,
                            std::size_t workers = 0) {
  return ComputeSequenceStats(m, mode, workers);
}

// GF(2) family rows.

inline constexpr int kTable3MinK = 2;
inline constexpr int kTable3MaxK = 12;

// Reference G values for the GF(2) rows, k = 5..10.
inline std::optional<double> ReferenceGf2G(int k) {
  switch (k) {
    case 5: return 1.29;
    case 6:
    case 7:
    case 8:
    case 9:
    case 10: return 1.30;
    default: return std::nullopt;
  }
}

struct Gf2Row {
  int k = 0;
  std::size_t m = 0;
  std::vector<std::size_t> s;
  Rational greedy_weight;
  Rational G;
  bool replay_ok = false;
  std::string replay_message;
  // 0.5 * log2(m).
  double ig_lower = 0;
  // w(Gr) * (m + 1) / (2m), from w(Opt_LP) <= 2m / (m + 1).
  Rational r_lower;
  std::optional<double> reference_G;
  // |G - reference| > 0.005.
  bool G_discrepancy = false;
  std::optional<double> lp_objective;
  std::optional<Rational> lp_exact_objective;
  std::optional<double> r_lp;
};

struct Table3Options {
  // The LP is solved only when m * n is at most this.
  std::size_t lp_limit = 300'000;
  double tol = 1e-9;
};

inline std::vector<Gf2Row> Table3(int k_lo, int k_hi,
                                  const Table3Options& options = {}) {
  if (k_lo < kTable3MinK || k_hi > kTable3MaxK || k_lo > k_hi) {
    throw Error(ErrorCode::kKOutOfRange,
                "need 2 <= k_lo <= k_hi <= 12, got " + std::to_string(k_lo) +
                    ".." + std::to_string(k_hi));
  }
  std::vector<Gf2Row> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    const Instance instance = GenGf2(k);
    const GreedyTrace trace = Greedy(instance);
    Gf2Row row;
    row.k = k;
    row.m = instance.m;
    row.s = trace.s;
    row.greedy_weight = trace.total_weight;
    row.G = GOf(trace);
    const ReplayReport replay = ReplayCheck(instance, trace);
    row.replay_ok = replay.ok;
    row.replay_message = replay.message;
    row.ig_lower = 0.5 * std::log2(static_cast<double>(row.m));
    row.r_lower = trace.total_weight * Rational(row.m + 1, 2 * row.m);
    row.reference_G = ReferenceGf2G(k);
    if (row.reference_G) {
      row.G_discrepancy = std::fabs(ToDouble(row.G) - *row.reference_G) > 0.005;
    }
    if (instance.m * instance.n() <= options.lp_limit) {
      const LpOutcome lp = SolveLp(instance, options.tol);
      if (lp.status == LpStatus::kOptimal) {
        row.lp_objective = lp.objective;
        row.lp_exact_objective = lp.exact_objective;
        row.r_lp = REstimate(trace, lp).value;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Rendering. Percentages carry one decimal.

inline std::string Table1Csv(std::span<const SequenceStats> rows) {
  std::string out = "m,b1,b2,b3,b4,b5\n";
  for (const SequenceStats& r : rows) {
    out += std::to_string(r.m);
    for (const BucketStats& b : r.buckets) out += "," + FormatFixed(b.share_pct, 1);
    out += "\n";
  }
  return out;
}

inline std::string Table2Csv(std::span<const SequenceStats> rows) {
  std::string out = "m";
  for (std::size_t b = 1; b <= kBucketCount; ++b) {
    out += ",b" + std::to_string(b) + "_mean,b" + std::to_string(b) + "_max";
  }
  out += "\n";
  for (const SequenceStats& r : rows) {
    out += std::to_string(r.m);
    for (const BucketStats& b : r.buckets) {
      out += "," + FormatFixed(b.mean_improvement_pct, 1) + "," +
             FormatFixed(b.max_improvement_pct, 1);
    }
    out += "\n";
  }
  return out;
}

namespace internal {

inline std::string BucketLabel(std::size_t b) {
  static constexpr std::array<const char*, kBucketCount> kLabels = {
      "(0,0.2]", "(0.2,0.4]", "(0.4,0.6]", "(0.6,0.8]", "(0.8,1]"};
  return kLabels[b];
}

inline std::string MarkdownRow(std::span<const std::string> cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

inline std::string MarkdownRule(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += "---|";
  return out + "\n";
}

}  // namespace internal

inline std::string Table1Markdown(std::span<const SequenceStats> rows) {
  std::vector<std::string> header = {"m"};
  for (std::size_t b = 0; b < kBucketCount; ++b) {
    header.push_back("mu in " + internal::BucketLabel(b));
  }
  std::string out = internal::MarkdownRow(header) +
                    internal::MarkdownRule(header.size());
  for (const SequenceStats& r : rows) {
    std::vector<std::string> cells = {std::to_string(r.m)};
    for (const BucketStats& b : r.buckets) {
      cells.push_back(FormatFixed(b.share_pct, 1));
    }
    out += internal::MarkdownRow(cells);
  }
  return out;
}

inline std::string Table2Markdown(std::span<const SequenceStats> rows) {
  std::vector<std::string> header = {"m"};
  for (std::size_t b = 0; b < kBucketCount; ++b) {
    header.push_back("mean " + internal::BucketLabel(b));
    header.push_back("max " + internal::BucketLabel(b));
  }
  std::string out = internal::MarkdownRow(header) +
                    internal::MarkdownRule(header.size());
  for (const SequenceStats& r : rows) {
    std::vector<std::string> cells = {std::to_string(r.m)};
    for (const BucketStats& b : r.buckets) {
      cells.push_back(FormatFixed(b.mean_improvement_pct, 1));
      cells.push_back(FormatFixed(b.max_improvement_pct, 1));
    }
    out += internal::MarkdownRow(cells);
  }
  return out;
}

namespace internal {

inline std::vector<std::string> Gf2Cells(const Gf2Row& r) {
  std::string seq;
  for (std::size_t x : r.s) {
    if (!seq.empty()) seq += " ";
    seq += std::to_string(x);
  }
  std::string note = "-";
  if (r.reference_G) note = r.G_discrepancy ? "discrepancy" : "match";
  return {std::to_string(r.k),
          std::to_string(r.m),
          FormatFixed(r.ig_lower, 2),
          FormatApprox(r.r_lower),
          ToString(r.greedy_weight),
          seq,
          FormatApprox(r.G),
          r.reference_G ? FormatFixed(*r.reference_G, 2) : "-",
          note,
          r.replay_ok ? "ok" : "FAILED",
          r.lp_exact_objective ? FormatApprox(*r.lp_exact_objective)
          : r.lp_objective     ? FormatFixed(*r.lp_objective, 6)
                               : "-",
          r.r_lp ? FormatFixed(*r.r_lp, 4) : "-"};
}

inline const std::vector<std::string>& Gf2Header() {
  static const std::vector<std::string> kHeader = {
      "k",  "m",           "ig_lower",   "r_lower", "greedy_weight",
      "s",  "G",           "G_reference", "G_check", "replay",
      "lp_objective", "r_lp"};
  return kHeader;
}

inline std::string CsvCell(const std::string& cell) {
  if (cell.find_first_of(",\"") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace internal

inline std::string Table3Csv(std::span<const Gf2Row> rows) {
  std::string out;
  const auto& header = internal::Gf2Header();
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += (i ? "," : "") + header[i];
  }
  out += "\n";
  for (const Gf2Row& r : rows) {
    const auto cells = internal::Gf2Cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += (i ? "," : "") + internal::CsvCell(cells[i]);
    }
    out += "\n";
  }
  return out;
}

inline std::string Table3Markdown(std::span<const Gf2Row> rows) {
  const auto& header = internal::Gf2Header();
  std::string out = internal::MarkdownRow(header) +
                    internal::MarkdownRule(header.size());
  for (const Gf2Row& r : rows) out += internal::MarkdownRow(internal::Gf2Cells(r));
  return out;
}

}  // namespace cover

#endif  // COVER_EXPERIMENTS_HPP_
