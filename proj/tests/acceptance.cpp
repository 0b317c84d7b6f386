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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values are checked against the independent
// oracles in oracles.hpp or against the reference tables.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cover/bounds.hpp"
#include "cover/exact.hpp"
#include "cover/experiments.hpp"
#include "cover/generators.hpp"
#include "cover/greedy.hpp"
#include "cover/lp.hpp"
#include "oracles.hpp"

namespace {

using namespace cover;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void Criterion(int id, const char* name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.Fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.Fail("took " + FormatFixed(secs, 2) + " s, limit " +
           FormatFixed(limit_seconds, 0) + " s");
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d (%s) [%.2f s]%s%s\n", o.pass ? "PASS" : "FAIL",
              id, name, secs, o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

// Seeded random corpus: m in [1, 12], n in [1, 10], rational weights.
std::vector<Instance> Corpus(std::size_t count) {
  std::vector<Instance> out;
  PortableRng pick(2026);
  for (std::uint64_t i = 0; i < count; ++i) {
    RandomSpec spec;
    spec.m = 1 + pick.Below(12);
    spec.n = 1 + pick.Below(10);
    spec.density = 0.1 + 0.6 * pick.Unit();
    spec.weight_lo = Rational(1, 7);
    spec.weight_hi = Rational(9, 2);
    spec.weight_grain = 60;
    spec.seed = 1000 + i;
    out.push_back(GenRandom(spec));
  }
  return out;
}

GreedyTrace TraceOf(const std::vector<std::size_t>& s) {
  GreedyTrace t;
  std::size_t rest = 0;
  for (auto x : s) rest += x;
  t.residuals.push_back(rest);
  for (std::size_t k = 0; k < s.size(); ++k) {
    rest -= s[k];
    t.residuals.push_back(rest);
    t.chosen.push_back(k);
    t.ratios.push_back(1);
  }
  t.s = s;
  t.total_weight = static_cast<long long>(s.size());
  return t;
}

std::string Pct(double v) { return FormatFixed(v, 1); }

}  // namespace

int main() {
  const std::vector<Instance> corpus = Corpus(1200);

  Criterion(1, "greedy ratio <= G(s) on 1200 random instances", 60, [&] {
    Outcome o;
    for (const Instance& inst : corpus) {
      const GreedyTrace t = Greedy(inst);
      const Rational opt = oracle::MinCover(inst).weight;
      if (t.total_weight / opt > GOf(t)) {
        o.Fail("violated on " + inst.name);
      }
    }
    return o;
  });

  Criterion(2, "Delta double sum = H(m) - G, Delta >= 0, zero iff all ones", 0,
            [&] {
    Outcome o;
    auto check = [&](const GreedyTrace& t, const std::string& what) {
      const Rational delta = DeltaOf(t);
      if (delta != oracle::Harmonic(t.m()) - oracle::G(t.s)) {
        o.Fail("identity fails on " + what);
      }
      if (delta < 0) o.Fail("negative on " + what);
      if ((delta == 0) != (t.iterations() == t.m())) {
        o.Fail("zero set mismatch on " + what);
      }
    };
    for (const Instance& inst : corpus) check(Greedy(inst), inst.name);
    for (std::size_t m = 1; m <= 12; ++m) {
      oracle::Compositions(m, false, [&](const std::vector<std::size_t>& s) {
        check(TraceOf(s), "composition of " + std::to_string(m));
      });
    }
    return o;
  });

  Criterion(3, "ratio <= H(m~) <= H(m-bar) <= H(m)", 0, [&] {
    Outcome o;
    for (const Instance& inst : corpus) {
      const oracle::OptResult opt = oracle::MinCover(inst);
      std::vector<SetIndex> idx;
      for (std::size_t i = 0; i < inst.n(); ++i) {
        if (opt.subset >> i & 1) idx.push_back(i);
      }
      const BoundReport r = MakeBoundReport(inst, Greedy(inst), MakeCover(inst, idx));
      if (!(*r.ratio <= *r.H_m_tilde && *r.H_m_tilde <= r.H_m_bar &&
            r.H_m_bar <= r.H_m)) {
        o.Fail("chain broken on " + inst.name);
      }
    }
    return o;
  });

  Criterion(4, "share table rows 10 and 15", 10, [&] {
    Outcome o;
    const ModeCalibration c = CalibrateSequenceMode();
    if (!c.selected) {
      std::string report = "no universe matches; compositions";
      for (double v : c.compositions) report += " " + Pct(v);
      report += ", partitions";
      for (double v : c.partitions) report += " " + Pct(v);
      o.Fail(report);
      return o;
    }
    const std::array<std::pair<std::size_t, std::array<double, 5>>, 2> want = {{
        {10, {0.0, 13.5, 64.8, 100.0, 100.0}},
        {15, {0.0, 14.5, 69.6, 99.0, 100.0}},
    }};
    for (const auto& [m, row] : want) {
      const auto got = Shares(Table1(m, *c.selected));
      if (!SharesMatch(got, row, 0.05)) {
        std::string msg = "m=" + std::to_string(m) + " got";
        for (double v : got) msg += " " + Pct(v);
        o.Fail(msg);
      }
    }
    o.detail = o.pass ? "mode " + std::string(SequenceModeName(*c.selected))
                      : o.detail;
    return o;
  });

  Criterion(5, "improvement table row 10 (mean/max)", 10, [&] {
    Outcome o;
    const std::array<std::pair<double, double>, 5> want = {
        {{0, 0}, {12.3, 18.4}, {21.3, 42.9}, {30.9, 55.8}, {53.3, 65.9}}};
    const SequenceStats s = Table2(10);
    std::string got;
    std::string off;
    for (std::size_t b = 0; b < kBucketCount; ++b) {
      const double mean = s.buckets[b].mean_improvement_pct;
      const double max = s.buckets[b].max_improvement_pct;
      got += " " + Pct(mean) + "/" + Pct(max);
      if (std::fabs(mean - want[b].first) > 0.1 + 1e-9) {
        off += " b" + std::to_string(b + 1) + " mean " + FormatFixed(mean, 3) +
               " vs " + Pct(want[b].first) + ";";
      }
      if (std::fabs(max - want[b].second) > 0.1 + 1e-9) {
        off += " b" + std::to_string(b + 1) + " max " + FormatFixed(max, 3) +
               " vs " + Pct(want[b].second) + ";";
      }
    }
    if (!off.empty()) o.Fail("got" + got + " |" + off);
    return o;
  });

  std::vector<Gf2Row> rows;
  Criterion(6, "GF(2) IG and R lower bounds, w(Gr) = k, k = 5..10", 30, [&] {
    Outcome o;
    rows = Table3(5, 10);
    const std::array<double, 6> ig = {2.48, 2.99, 3.49, 4.00, 4.50, 5.00};
    const std::array<double, 6> r = {2.58, 3.05, 3.53, 4.02, 4.51, 5.01};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Gf2Row& row = rows[i];
      const std::string k = "k=" + std::to_string(row.k);
      if (std::fabs(row.ig_lower - ig[i]) > 0.01) o.Fail(k + " IG bound");
      if (std::fabs(ToDouble(row.r_lower) - r[i]) > 0.01) o.Fail(k + " R bound");
      if (row.greedy_weight != Rational(row.k)) o.Fail(k + " w(Gr)");
    }
    if (rows.size() != 6) o.Fail("expected 6 rows");
    return o;
  });

  Criterion(7, "GF(2) G from replayed trace, discrepancy reported", 0, [&] {
    Outcome o;
    const std::string report = Table3Markdown(rows);
    std::string seen;
    for (const Gf2Row& row : rows) {
      const Instance inst = GenGf2(row.k);
      GreedyTrace t = Greedy(inst);
      const std::string k = "k=" + std::to_string(row.k);
      if (!row.replay_ok || !ReplayCheck(inst, t)) o.Fail(k + " replay");
      if (t.s != row.s || row.G != oracle::G(row.s)) o.Fail(k + " G mismatch");
      if (row.reference_G && row.G_discrepancy &&
          report.find("discrepancy") == std::string::npos) {
        o.Fail(k + " discrepancy not in report");
      }
      seen += " " + k + " G=" + FormatFixed(ToDouble(row.G), 4);
    }
    if (o.pass) o.detail = "reference 1.29-1.30, computed" + seen;
    return o;
  });

  Criterion(8, "LP: GF(2) objective and uniform cover; LP <= Opt", 120, [&] {
    Outcome o;
    for (int k = 2; k <= 8; ++k) {
      const Instance inst = GenGf2(k);
      const LpOutcome lp = SolveLp(inst, 1e-9);
      const double m = static_cast<double>(inst.m);
      if (lp.status != LpStatus::kOptimal || lp.objective > 2 * m / (m + 1) + 1e-9) {
        o.Fail("k=" + std::to_string(k) + " objective " + FormatFixed(lp.objective, 9));
      }
      const std::vector<Rational> uniform(inst.n(), Rational(2, inst.m + 1));
      if (!CheckFractionalCover(inst, uniform)) {
        o.Fail("k=" + std::to_string(k) + " uniform cover rejected");
      }
    }
    for (std::size_t i = 0; i < 200; ++i) {
      const Instance& inst = corpus[i];
      const LpOutcome lp = SolveLp(inst, 1e-9);
      const double opt = ToDouble(oracle::MinCover(inst).weight);
      if (lp.status != LpStatus::kOptimal || lp.objective > opt + 1e-9) {
        o.Fail("LP above optimum on " + inst.name);
      }
    }
    return o;
  });

  Criterion(9, "class construction round trip, all compositions m <= 12", 120,
            [&] {
    Outcome o;
    const Rational eps(1, 2);
    std::size_t count = 0;
    for (std::size_t m = 1; m <= 12; ++m) {
      oracle::Compositions(m, false, [&](const std::vector<std::size_t>& s) {
        ++count;
        const Instance inst = GenClassCs(SequenceSpec{s}, eps);
        const GreedyTrace t = Greedy(inst);
        const Rational opt = oracle::MinCover(inst).weight;
        // s = (m) is the single set {1..m} of weight m.
        const bool single = s.size() == 1;
        const Rational want_greedy = single ? Rational(m) : Rational(m + 1);
        const Rational want_opt = single ? Rational(m) : Rational(m) + eps;
        if (t.s != s || t.total_weight != want_greedy || opt != want_opt) {
          o.Fail("mismatch at m=" + std::to_string(m));
        }
      });
    }
    if (o.pass) o.detail = std::to_string(count) + " sequences";
    return o;
  });

  Criterion(10, "branch-and-bound = exhaustive, node bound <= node optimum", 0,
            [&] {
    Outcome o;
    std::size_t samples = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      RandomSpec spec;
      spec.m = 8 + seed % 9;
      spec.n = 6 + seed % 10;
      spec.density = 0.15 + 0.05 * static_cast<double>(seed % 5);
      spec.weight_lo = Rational(1, 3);
      spec.seed = seed;
      const Instance inst = GenRandom(spec);
      SolveBudget ex;
      ex.method = SolveMethod::kExhaustive;
      SolveBudget bnb;
      bnb.method = SolveMethod::kBranchAndBound;
      bnb.use_lp_bound = seed % 2 == 0;
      const ExactResult a = ExactOpt(inst, ex);
      const ExactResult b = ExactOpt(inst, bnb, [&](const NodeSample& n) {
        ++samples;
        if (n.greedy_bound > oracle::MinCover(n.residual->instance).weight) {
          o.Fail("node bound above node optimum, seed " + std::to_string(seed));
        }
      });
      if (a.weight != b.weight || b.status != ExactStatus::kProvenOptimal) {
        o.Fail("weights differ, seed " + std::to_string(seed));
      }
    }
    if (o.pass) o.detail = std::to_string(samples) + " node samples";
    return o;
  });

  Criterion(11, "performance floor", 0, [&] {
    Outcome o;
    auto time = [](const std::function<void()>& f) {
      const auto start = std::chrono::steady_clock::now();
      f();
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
    };
    SequenceStats t20;
    const double table_secs =
        time([&] { t20 = Table1(20, SequenceMode::kCompositions); });
    if (t20.sequences != 524288) o.Fail("table1(20) saw wrong sequence count");
    if (table_secs >= 60) o.Fail("table1(20) took " + FormatFixed(table_secs, 2) + " s");
    const Instance g10 = GenGf2(10);
    GreedyTrace t;
    const double greedy_secs = time([&] { t = Greedy(g10); });
    if (t.total_weight != 10) o.Fail("gf2(10) greedy weight");
    if (greedy_secs >= 5) o.Fail("gf2(10) greedy took " + FormatFixed(greedy_secs, 2) + " s");
    if (o.pass) {
      o.detail = "table1(20) " + FormatFixed(table_secs, 2) + " s, greedy gf2(10) " +
                 FormatFixed(greedy_secs, 3) + " s";
    }
    return o;
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
