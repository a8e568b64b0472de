// Acceptance gate: one line per criterion, pass only when the suite's checks
// all hold and the run fits its pinned budget. Exact arithmetic throughout,
// so there are no numeric tolerances; the budgets are wall-clock seconds.
// The G2 extension of the first criterion runs separately behind --g2.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "kmb/suites.hpp"

namespace {

struct Criterion {
  const char* tag;
  const char* suite;
  std::vector<std::string> types;
  double budget_seconds;
  const char* what;
};

const std::vector<Criterion> kCriteria = {
    {"1", "pittie", {"A1", "A2", "B2", "A1xA1"}, 60.0,
     "relative invariant bases: full size and unit Gram determinant"},
    {"2", "dual", {"A1", "A2", "B2", "A1xA1"}, 120.0,
     "dual bases: delta pairing and reproducing expansion of random invariants"},
    {"3", "demazure", {"A1xA1", "A2", "B2", "G2"}, 60.0,
     "operator laws: idempotence, invariance, braid relations, word independence"},
    {"4", "characters", {"A2", "B2"}, 30.0,
     "characters at 1 equal the dimension formula for small dominant weights"},
    {"5", "bsbim", {"A2"}, 300.0,
     "bimodules: rank law and action laws over all short untwisted chains"},
    {"6", "twist", {"A2"}, 10.0,
     "twists: double swap acts as the identity and gradings multiply"},
    {"7", "cosets", {"A1", "A2", "B2", "A3"}, 60.0,
     "double cosets: partition, minimality, stabilizers, intersections"},
    {"8", "schur", {"A2", "A3"}, 60.0,
     "convolution matches the group algebra; rank oracle matches the modules"},
    {"9", "kacmoody", {"affineA1"}, 30.0,
     "infinite regime: growth, finite-type detection, coset brute force"},
};

const Criterion kG2Extension = {
    "1-g2", "pittie", {"G2"}, 600.0,
    "relative invariant bases over G2 (12x12 Gram), slow extension"};

bool run_criterion(const Criterion& c) {
  kmb::SuiteOptions opts;
  opts.types = c.types;
  opts.seed = 0;
  opts.threads = 1;
  kmb::SuiteResult r;
  bool threw = false;
  std::string thrown;
  try {
    r = kmb::run_suite(c.suite, opts);
  } catch (const std::exception& e) {
    threw = true;
    thrown = e.what();
  }
  const bool in_budget = !threw && r.seconds < c.budget_seconds;
  const bool pass = !threw && r.passed && in_budget;
  if (threw) {
    std::printf("criterion %-4s FAIL  threw: %s\n", c.tag, thrown.c_str());
  } else {
    std::string note;
    if (!r.passed) note += "; " + r.detail;
    if (r.passed && !in_budget) note += "; over budget";
    std::printf("criterion %-4s %s  %8.2fs of %6.0fs  %7lld checks  %s%s\n", c.tag,
                pass ? "PASS" : "FAIL", r.seconds, c.budget_seconds,
                static_cast<long long>(r.checks), c.what, note.c_str());
  }
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool g2 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--g2") == 0) g2 = true;

  if (g2) {
    const bool ok = run_criterion(kG2Extension);
    std::printf("acceptance: %s (G2 extension)\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
  }

  int passed = 0;
  for (const Criterion& c : kCriteria) passed += run_criterion(c) ? 1 : 0;
  std::printf("acceptance: %d/%d criteria passed\n", passed,
              static_cast<int>(kCriteria.size()));
  return passed == static_cast<int>(kCriteria.size()) ? 0 : 1;
}
