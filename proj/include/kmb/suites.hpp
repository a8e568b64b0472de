#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kmb {

// Options shared by all verification suites. An empty type list selects the
// suite's default data; requesting a datum a suite does not cover fails with
// BadInput. The seed drives every randomized check, so a fixed seed makes a
// run exactly reproducible; draws are keyed per check item, independent of
// the thread count.
struct SuiteOptions {
  std::vector<std::string> types;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::string detail;
  double seconds = 0.0;
};

// Suite names, in reporting order: pittie, dual, demazure, characters,
// bsbim, twist, cosets, schur, kacmoody.
const std::vector<std::string>& suite_names();

// Supported datum names for one suite (also its default selection).
const std::vector<std::string>& suite_default_types(const std::string& name);

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace kmb
