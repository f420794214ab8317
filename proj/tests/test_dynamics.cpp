#include "doctest.h"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bsnet/dynamics.hpp"
#include "bsnet/threshold_net.hpp"

using namespace bsnet;

namespace {

const auto int_canon = [](int v) { return std::to_string(v); };

const auto config_canon = [](const configuration& c) { return c.packed(); };

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("counter nets are pure cycles") {
  for (const std::size_t n : {std::size_t{3}, std::size_t{10}}) {
    const net_with_state built = build_theorem1_net(n);
    const auto orbit = detect_orbit(
        [&](const configuration& c) { return mcp_step(built.net, c); },
        built.init, std::size_t{1} << (n + 1), config_canon);
    CHECK(orbit.transient == 0);
    CHECK(orbit.cycle == (std::size_t{1} << n));
  }
}

TEST_CASE("constant maps") {
  const auto to_zero = [](int) { return 0; };
  const auto fixed = detect_orbit(to_zero, 0, 10, int_canon);
  CHECK(fixed.transient == 0);
  CHECK(fixed.cycle == 1);
  const auto falls_in = detect_orbit(to_zero, 5, 10, int_canon);
  CHECK(falls_in.transient == 1);
  CHECK(falls_in.cycle == 1);
}

TEST_CASE("budget exhaustion carries the step count") {
  const auto inc = [](int v) { return v + 1; };
  try {
    detect_orbit(inc, 0, 25, int_canon);
    FAIL("expected orbit_limit_error");
  } catch (const orbit_limit_error& e) {
    CHECK(e.steps == 25);
  }
}

TEST_CASE("trace capture records states 0..T+L") {
  const auto built = build_theorem1_net(3);
  const auto orbit = detect_orbit(
      [&](const configuration& c) { return mcp_step(built.net, c); },
      built.init, 1 << 6, config_canon, orbit_options{true, false});
  REQUIRE(orbit.trace.size() == 9);
  CHECK(orbit.trace.front() == orbit.trace.back());
}

TEST_CASE("hashed and two-pointer modes agree on random functional graphs") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> node(0, 63);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> table(64);
    for (int& v : table) v = node(rng);
    const auto step = [&table](int v) { return table[static_cast<std::size_t>(v)]; };
    const int start = node(rng);

    const auto plain = detect_orbit(step, start, 1 << 12, int_canon);
    const auto brent = detect_orbit(step, start, 1 << 12, int_canon,
                                    orbit_options{false, true});
    CHECK(plain.transient == brent.transient);
    CHECK(plain.cycle == brent.cycle);

    const auto traced = detect_orbit(step, start, 1 << 12, int_canon,
                                     orbit_options{true, true});
    REQUIRE(traced.trace.size() == plain.transient + plain.cycle + 1);
    CHECK(traced.trace[plain.transient] == traced.trace.back());
  }
}

TEST_CASE("detection is deterministic") {
  const auto built = build_theorem1_net(5);
  const auto step = [&](const configuration& c) {
    return mcp_step(built.net, c);
  };
  const auto a = detect_orbit(step, built.init, 1 << 8, config_canon);
  const auto b = detect_orbit(step, built.init, 1 << 8, config_canon);
  CHECK(a.transient == b.transient);
  CHECK(a.cycle == b.cycle);
  CHECK(a.steps == b.steps);
}

TEST_CASE("sequence_period frozen examples") {
  // Rows 0..8 of the golden 8-neuron trace, as an orbit trace with closure.
  const auto built = build_theorem1_net(3);
  const auto rows = iterate_map(
      [&](const configuration& c) { return mcp_step(built.net, c); },
      built.init, 9);
  CHECK(sequence_period(rows, config_canon) ==
        std::pair<std::size_t, std::size_t>{0, 8});

  const std::vector<int> flat(6, 42);
  CHECK(sequence_period(flat, int_canon) ==
        std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("sequence_period needs evidence") {
  CHECK_THROWS_AS(sequence_period(std::vector<int>{}, int_canon),
                  evidence_error);
  CHECK_THROWS_AS(sequence_period(std::vector<int>{7}, int_canon),
                  evidence_error);
  CHECK_THROWS_AS(sequence_period(std::vector<int>{1, 2, 3, 4}, int_canon),
                  evidence_error);
}

TEST_CASE("a tail coincidence is not accepted as a period") {
  // True period 4 pattern cut mid-way: the last three entries alone would
  // suggest period 2.
  const std::vector<int> cut = {1, 2, 1, 3, 1, 2, 1, 3, 1, 2, 1};
  CHECK(sequence_period(cut, int_canon) ==
        std::pair<std::size_t, std::size_t>{0, 4});

  const std::vector<int> preperiodic = {9, 9, 7, 1, 2, 1, 2, 1, 2, 1, 2};
  CHECK(sequence_period(preperiodic, int_canon) ==
        std::pair<std::size_t, std::size_t>{3, 2});
}

TEST_CASE("replayed orbits give identical measures") {
  std::mt19937_64 rng(131);
  std::uniform_int_distribution<int> node(0, 31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> table(32);
    for (int& v : table) v = node(rng);
    const auto step = [&table](int v) { return table[static_cast<std::size_t>(v)]; };
    const int start = node(rng);

    const auto orbit = detect_orbit(step, start, 1 << 10, int_canon);
    const auto trace =
        iterate_map(step, start, orbit.transient + 2 * orbit.cycle);
    const auto [t, l] = sequence_period(trace, int_canon);
    CHECK(t == orbit.transient);
    CHECK(l == orbit.cycle);
  }
}

TEST_CASE("iterate_map returns init first") {
  const auto inc = [](int v) { return v + 1; };
  const auto out = iterate_map(inc, 5, 4);
  CHECK(out == std::vector<int>{5, 6, 7, 8});
  CHECK(iterate_map(inc, 5, 0).empty());
}

}  // TEST_SUITE
