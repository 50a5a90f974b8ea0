#include "skewdyck/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace skewdyck;

TEST_CASE("full run for t = 2, 3 passes and adjudicates") {
  VerifyOptions options;
  options.order = 32;
  options.t_values = {2, 3};
  const auto report = run_verification(options);
  for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  CHECK(report.adjudication.find("DP count = 563") != std::string::npos);
  std::size_t s6_notes = 0;
  for (const auto& n : report.notes) s6_notes += n.rfind("s6 coefficient", 0) == 0;
  CHECK(s6_notes == 2);
  std::ostringstream out;
  report.print(out);
  CHECK(out.str().find("PASS: ") != std::string::npos);
}

TEST_CASE("general t") {
  VerifyOptions options;
  options.t_values = {4};
  const auto report = run_verification(options);
  CHECK(report.passed());
  CHECK(report.adjudication.empty());
}

TEST_CASE("minimum order notes reduced coverage") {
  VerifyOptions options;
  options.order = 8;
  const auto report = run_verification(options);
  CHECK(report.passed());
  CHECK(report.notes.front().find("reduced coverage") != std::string::npos);
  options.order = 7;
  CHECK_THROWS_AS(run_verification(options), std::invalid_argument);
}
