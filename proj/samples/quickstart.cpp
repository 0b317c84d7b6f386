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

// Loads an instance (argument, or the built-in C_s(2,1) example), runs
// greedy, prints the accuracy bounds, the LP relaxation and the optimum.
//
//   quickstart samples/random_m12.scp

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "cover/bounds.hpp"
#include "cover/exact.hpp"
#include "cover/generators.hpp"
#include "cover/greedy.hpp"
#include "cover/io.hpp"
#include "cover/lp.hpp"

int main(int argc, char** argv) {
  try {
    cover::Instance instance;
    if (argc > 1) {
      std::ifstream in(argv[1]);
      if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
      }
      instance = cover::ParseInstance(
          std::string(std::istreambuf_iterator<char>(in), {}));
    } else {
      instance = cover::GenClassCs(cover::SequenceSpec{{2, 1}});
    }

    const cover::GreedyTrace trace = cover::Greedy(instance);
    const cover::ExactResult opt = cover::ExactOpt(instance);
    const cover::BoundReport report =
        cover::MakeBoundReport(instance, trace, opt.cover);
    std::cout << cover::ToKeyValue(report);

    const cover::LpOutcome lp = cover::SolveLp(instance, 1e-9);
    if (lp.status == cover::LpStatus::kOptimal) {
      std::cout << "lp_objective=" << cover::FormatFixed(lp.objective, 6) << "\n"
                << "R=" << cover::FormatFixed(cover::REstimate(trace, lp).value, 6)
                << "\n";
    }
  } catch (const cover::Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}
