#include <doctest.h>

#include "errors.hpp"
#include "rocom/bundled.hpp"
#include "rocom/scenario.hpp"

using namespace rocom;

namespace {

const char* kPrelude =
    "[schema.classes]\n"
    "alarm parent=event\n"
    "respond parent=activity\n"
    "[individuals]\n"
    "alarm1 class=alarm createdat=2013-09-18T08:00:00\n"
    "ann class=person createdat=2013-09-18T08:00:00\n"
    "ben class=person createdat=2013-09-18T08:00:00\n"
    "crew class=accessgroup createdat=2013-09-18T08:00:00\n"
    "[groups]\n"
    "crew members=[ann] privileges=[respond]\n";

ScenarioReport run(const std::string& steps, Engine& e) {
  auto doc = parse_document(std::string(kPrelude) + "[scenario]\n" + steps);
  apply_document(doc, e);
  return run_scenario(doc.scenario, e);
}

ScenarioReport run(const std::string& steps) {
  auto e = Engine::with_builtins();
  return run(steps, e);
}

Error run_error(const std::string& steps) {
  try {
    run(steps);
  } catch (const Error& e) {
    return e;
  }
  FAIL("scenario ran");
  return Error(Errc::InvalidArgument, "");
}

const std::string kSetup =
    "trigger situation=s event=alarm1 goal=done at=2013-09-18T09:00:00\n"
    "add-activity situation=s activity=act class=respond goal=done performers=[ann]\n";

}  // namespace

TEST_CASE("the bundled fire scenario passes every expectation") {
  auto e = Engine::with_builtins();
  auto doc = parse_document(*bundled_document("fire-incident.rcm"));
  apply_document(doc, e);
  auto report = run_scenario(doc.scenario, e);
  CHECK(report.ok());
  CHECK(report.expectations.size() == 20);
  CHECK(report.render().find("expectations: 20 passed, 0 failed") != std::string::npos);
}

TEST_CASE("scenario output is deterministic") {
  auto once = [] {
    auto e = Engine::with_builtins();
    auto doc = parse_document(*bundled_document("fire-incident.rcm"));
    apply_document(doc, e);
    return run_scenario(doc.scenario, e).render();
  };
  CHECK(once() == once());
}

TEST_CASE("an unexpected step failure stops the run with StepError") {
  auto err = run_error(kSetup +
                       "add-activity situation=s activity=later class=respond goal=done pre=[done]\n"
                       "start situation=s activity=later at=2013-09-18T09:01:00\n");
  CHECK(err.code() == Errc::StepError);
  CHECK(err.detail() == "step 4 (start): PreconditionNotMet: later waits on done");
  REQUIRE(err.where());
  CHECK(err.where()->line == 15);
}

TEST_CASE("a performer without the privilege is denied") {
  auto err = run_error(
      "trigger situation=s event=alarm1 goal=done at=2013-09-18T09:00:00\n"
      "add-activity situation=s activity=act class=respond goal=done performers=[ben]\n"
      "start situation=s activity=act at=2013-09-18T09:01:00\n");
  CHECK(err.code() == Errc::StepError);
  CHECK(err.detail().find("AccessDenied") != std::string::npos);
}

TEST_CASE("expect-error turns a failure into a passing expectation") {
  auto report = run(kSetup +
                    "start situation=s activity=act at=2013-09-18T09:01:00\n"
                    "start situation=s activity=act at=2013-09-18T09:01:30 expect-error=InvalidTransition\n"
                    "abort situation=s activity=act at=2013-09-18T09:02:00 expect-error=NotRunning\n");
  REQUIRE(report.expectations.size() == 2);
  CHECK(report.expectations[0].passed);
  CHECK_FALSE(report.expectations[1].passed);
  CHECK(report.expectations[1].detail == "succeeded");
  CHECK(report.failures() == 1);
}

TEST_CASE("failed expectations report what was observed") {
  auto report = run(kSetup +
                    "expect-activity situation=s activity=act state=running\n"
                    "expect-goal situation=s goal=done status=achieved\n"
                    "expect-access entity=ben class=respond result=allowed\n"
                    "expect-terminal situation=s value=false\n");
  REQUIRE(report.expectations.size() == 4);
  CHECK_FALSE(report.expectations[0].passed);
  CHECK(report.expectations[0].detail.find("eligible") != std::string::npos);
  CHECK_FALSE(report.expectations[1].passed);
  CHECK_FALSE(report.expectations[2].passed);
  CHECK(report.expectations[3].passed);
  CHECK(report.render().find("EXPECT FAIL step 3") != std::string::npos);
}

TEST_CASE("data steps and value expectations") {
  auto report = run(
      "assert-data subject=crew property=person#height value=1.0 at=2013-09-18T09:00:00 expect-error=DomainViolation\n"
      "assert-data subject=ann property=height value=6 unit=feet at=2013-09-18T09:00:00\n"
      "expect-value subject=ann property=height equals=6.0 unit=feet\n"
      "assert-relation subject=ann property=person#father object=ben at=2013-09-18T09:01:00\n"
      "expect-value subject=ben property=person#daughter equals=ann\n"
      "expect-value subject=ann property=person#weight none=true\n");
  CHECK(report.ok());
  CHECK(report.expectations.size() == 4);
}

TEST_CASE("malformed steps are syntax errors at their position") {
  auto verb = error_code([] { parse_document("[scenario]\nexplode situation=s\n"); });
  CHECK(verb == Errc::SyntaxError);

  auto field = run_error(kSetup + "start situation=s activity=act at=2013-09-18T09:01:00 speed=fast\n");
  CHECK(field.code() == Errc::SyntaxError);
  CHECK(field.where()->line == 14);
  CHECK(field.where()->column == 55);

  auto code = run_error(kSetup + "start situation=s activity=act at=2013-09-18T09:01:00 expect-error=Oops\n");
  CHECK(code.code() == Errc::SyntaxError);

  auto backwards = error_code([] {
    parse_document("[scenario]\nstart situation=s activity=a at=2013-09-18T10:00:00\n"
                   "start situation=s activity=b at=2013-09-18T09:00:00\n");
  });
  CHECK(backwards == Errc::SyntaxError);
}
