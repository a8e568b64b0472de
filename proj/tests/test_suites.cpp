#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "kmb/error.hpp"
#include "kmb/suites.hpp"

using namespace kmb;

namespace {

bool fails_with(Err want, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("suite registry lists every suite once") {
  auto names = suite_names();
  CHECK(names.size() == 9);
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (const auto& n : names) CHECK(!suite_default_types(n).empty());
}

TEST_CASE("unknown names and unsupported types are rejected") {
  CHECK(fails_with(Err::BadInput, [] { run_suite("nope"); }));
  CHECK(fails_with(Err::BadInput, [] { (void)suite_default_types("nope"); }));
  SuiteOptions o;
  o.types = {"E8"};
  CHECK(fails_with(Err::BadInput, [&] { run_suite("pittie", o); }));
}

TEST_CASE("cheap suites pass and fill in the result fields") {
  for (const char* name : {"pittie", "characters", "twist", "kacmoody"}) {
    SuiteResult r = run_suite(name);
    CHECK(r.name == name);
    CHECK(r.passed);
    CHECK(r.checks > 0);
    CHECK(!r.detail.empty());
    CHECK(r.seconds >= 0.0);
  }
}

TEST_CASE("check counts do not depend on the thread count") {
  SuiteOptions one;
  SuiteOptions four;
  four.threads = 4;
  for (const char* name : {"characters", "kacmoody"}) {
    SuiteResult a = run_suite(name, one);
    SuiteResult b = run_suite(name, four);
    CHECK(a.passed);
    CHECK(b.passed);
    CHECK(a.checks == b.checks);
    CHECK(a.detail == b.detail);
  }
}

TEST_CASE("type restriction narrows the work") {
  SuiteOptions narrow;
  narrow.types = {"A1"};
  SuiteResult small = run_suite("pittie", narrow);
  SuiteResult full = run_suite("pittie");
  CHECK(small.passed);
  CHECK(small.checks < full.checks);
  CHECK(small.detail.find("A1") != std::string::npos);
  CHECK(small.detail.find("A2") == std::string::npos);
}
