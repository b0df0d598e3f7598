#include <cstdio>
#include <functional>
#include <iostream>

#include "criteria.hpp"

int main() {
  using namespace etest;
  int failures = 0;
  auto report = [&](int n, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2d: %s  %s  [%.1fs]\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str(), o.seconds);
    std::fflush(stdout);
    failures += !o.pass;
  };
  report(1, criterion1);
  SweepRun sweep;
  try {
    sweep = sweep_a_series();
  } catch (const std::exception& e) {
    std::printf("sweep failed: %s\n", e.what());
  }
  report(2, [&] { return criterion2(sweep); });
  report(3, criterion3);
  report(4, criterion4);
  report(5, [&] { return criterion5(sweep); });
  report(6, criterion6);
  report(7, criterion7);
  report(8, criterion8);
  report(9, [] { return criterion9(); });
  report(10, criterion10);
  report(11, criterion11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
