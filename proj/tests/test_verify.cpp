#include "doctest.h"

#include "bsnet/verify.hpp"

using namespace bsnet;

TEST_SUITE("verify") {

TEST_CASE("reports pass exactly when expected equals observed") {
  const auto r = detail::make_report("demo", "n=1", "cycle=8", "cycle=8", 0.1);
  CHECK(r.pass);
  const auto bad = detail::make_report("demo", "n=1", "cycle=8", "cycle=9", 0.1);
  CHECK_FALSE(bad.pass);
  CHECK(all_pass({r}));
  CHECK_FALSE(all_pass({r, bad}));
}

TEST_CASE("golden trace suite passes") {
  const auto reports = verify_table2();
  REQUIRE(reports.size() == 1);
  CHECK(reports.front().pass);
}

TEST_CASE("cycle-length suite passes on a small sweep") {
  const auto reports = verify_theorem1(3, 6);
  CHECK(reports.size() == 4);
  CHECK(all_pass(reports));
}

TEST_CASE("worker pool does not change results") {
  const auto solo = verify_theorem1(3, 8, 1);
  const auto pooled = verify_theorem1(3, 8, 4);
  REQUIRE(solo.size() == pooled.size());
  for (std::size_t i = 0; i < solo.size(); ++i) {
    CHECK(solo[i].check == pooled[i].check);
    CHECK(solo[i].params == pooled[i].params);
    CHECK(solo[i].observed == pooled[i].observed);
    CHECK(solo[i].pass == pooled[i].pass);
  }
}

TEST_CASE("memory-net cycle suite passes on small points") {
  const auto reports = verify_corollary1({{3, 1}, {3, 2}});
  CHECK(all_pass(reports));
  CHECK(reports[0].expected == "transient=0 cycle=8");
  CHECK(reports[1].expected == "transient=0 cycle=128");
}

TEST_CASE("sequence suites pass on a small range") {
  CHECK(all_pass(verify_lemmas(3, 6)));
  CHECK(all_pass(verify_prop1(3, 5)));
}

TEST_CASE("random campaign passes with a small budget") {
  prop2_options opt;
  opt.cases = 10;
  const auto reports = verify_prop2(opt);
  CHECK(reports.size() >= 10);
  CHECK(all_pass(reports));
}

TEST_CASE("campaign is reproducible for a fixed seed") {
  prop2_options opt;
  opt.cases = 5;
  const auto a = verify_prop2(opt);
  const auto b = verify_prop2(opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].observed == b[i].observed);
  }
}

TEST_CASE("increment oracle and cell identity suites pass") {
  CHECK(all_pass(verify_increment(6)));
  CHECK(all_pass(verify_table1()));
}

}  // TEST_SUITE
