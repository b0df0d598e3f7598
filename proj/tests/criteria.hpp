#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace etest {

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

// sweeps A1..A4 over their step-one range without branching solves, with timing
struct SweepRun {
  std::vector<nlohmann::json> reports;  // one per algebra, A1 first
  double seconds = 0;
};

SweepRun sweep_a_series();

Outcome criterion1();
Outcome criterion2(const SweepRun& run);
Outcome criterion3();
Outcome criterion4();
Outcome criterion5(const SweepRun& run);
Outcome criterion6();
Outcome criterion7();
Outcome criterion8();
Outcome criterion9(int max_k = 8);
Outcome criterion10();
Outcome criterion11();

}  // namespace etest
