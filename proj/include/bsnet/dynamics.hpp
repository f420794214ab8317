#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bsnet/errors.hpp"

// Orbit analysis for deterministic maps over finite state spaces: minimal
// transient length T and cycle length L, with optional trace capture, plus
// the eventual period of a recorded sequence.

namespace bsnet {

template <class State>
struct orbit_summary {
  std::size_t transient = 0;  // T: minimal index whose state recurs
  std::size_t cycle = 1;      // L: minimal period, state(T+L) = state(T)
  std::size_t steps = 0;      // step-function evaluations spent
  std::vector<State> trace;   // when requested: states 0..T+L inclusive
};

struct orbit_options {
  bool keep_trace = false;
  // Two-pointer mode: keeps O(1) states instead of a hash map of all visited
  // states, at the price of re-running the map. Intended for sweeps whose
  // state count would not fit in memory.
  bool low_memory = false;
};

namespace detail {

template <class State, class Step, class Canon>
orbit_summary<State> detect_orbit_hashed(Step step, State init,
                                         std::size_t max_steps, Canon canon,
                                         bool keep_trace) {
  std::unordered_map<std::string, std::size_t> first_seen;
  orbit_summary<State> out;
  State cur = std::move(init);
  std::size_t t = 0;
  for (;;) {
    auto [it, fresh] = first_seen.emplace(canon(cur), t);
    if (!fresh) {
      out.transient = it->second;
      out.cycle = t - it->second;
      out.steps = t;
      if (keep_trace) out.trace.push_back(std::move(cur));
      return out;
    }
    if (keep_trace) out.trace.push_back(cur);
    if (t == max_steps) throw orbit_limit_error(t);
    cur = step(cur);
    ++t;
  }
}

template <class State, class Step, class Canon>
orbit_summary<State> detect_orbit_brent(Step step, State init,
                                        std::size_t max_steps, Canon canon,
                                        bool keep_trace) {
  std::size_t calls = 0;
  const auto bounded_step = [&](const State& s) {
    ++calls;
    return step(s);
  };

  // Cycle length first: the hare runs within power-of-two windows.
  std::size_t power = 1, cycle = 1;
  State tortoise = init;
  std::string tortoise_key = canon(tortoise);
  State hare = bounded_step(init);
  std::string hare_key = canon(hare);
  while (tortoise_key != hare_key) {
    if (power == cycle) {
      tortoise = hare;
      tortoise_key = hare_key;
      power *= 2;
      cycle = 0;
    }
    hare = bounded_step(hare);
    hare_key = canon(hare);
    ++cycle;
    if (cycle > max_steps || power > 2 * max_steps + 2)
      throw orbit_limit_error(calls);
  }

  // Transient: two pointers a cycle apart, walked from the start.
  State front = init;
  for (std::size_t i = 0; i < cycle; ++i) front = bounded_step(front);
  State back = init;
  std::size_t transient = 0;
  while (canon(back) != canon(front)) {
    back = bounded_step(back);
    front = bounded_step(front);
    ++transient;
    if (transient > max_steps) throw orbit_limit_error(calls);
  }

  orbit_summary<State> out;
  out.transient = transient;
  out.cycle = cycle;
  out.steps = calls;
  if (keep_trace) {
    out.trace.reserve(transient + cycle + 1);
    State cur = std::move(init);
    for (std::size_t i = 0; i < transient + cycle; ++i) {
      out.trace.push_back(cur);
      cur = step(cur);
    }
    out.trace.push_back(std::move(cur));
  }
  return out;
}

}  // namespace detail

// First-repeat search from `init` under `step`. `canon` maps a state to its
// canonical packed-byte key; states compare equal iff their keys do. Throws
// orbit_limit_error if no repeat shows up within max_steps applications.
template <class State, class Step, class Canon>
orbit_summary<State> detect_orbit(Step step, State init, std::size_t max_steps,
                                  Canon canon, orbit_options opt = {}) {
  if (opt.low_memory)
    return detail::detect_orbit_brent(std::move(step), std::move(init),
                                      max_steps, std::move(canon),
                                      opt.keep_trace);
  return detail::detect_orbit_hashed(std::move(step), std::move(init),
                                     max_steps, std::move(canon),
                                     opt.keep_trace);
}

// Minimal eventual period (T, L) of a recorded sequence. A candidate period
// L with earliest consistent start T is accepted when the trace shows two
// full periods past T (length - T >= 2L), or when the whole trace is
// L-periodic from its first entry and extends at least one entry past the
// first period (T = 0, length >= L+1). Anything weaker is refused with an
// evidence_error: a tail-only coincidence must not pass for a period.
template <class State, class Canon>
std::pair<std::size_t, std::size_t> sequence_period(
    const std::vector<State>& trace, Canon canon) {
  const std::size_t m = trace.size();
  if (m < 2)
    throw evidence_error("a trace of " + std::to_string(m) +
                         " states cannot confirm any period");

  std::vector<std::size_t> ids(m);
  {
    std::unordered_map<std::string, std::size_t> dict;
    for (std::size_t i = 0; i < m; ++i)
      ids[i] = dict.emplace(canon(trace[i]), dict.size()).first->second;
  }
  std::vector<std::size_t> rev(ids.rbegin(), ids.rend());

  // Z-array over the reversed id sequence: z[L] = length of the match
  // between rev and rev shifted by L, i.e. how far back from the end the
  // trace agrees with itself at distance L.
  std::vector<std::size_t> z(m, 0);
  for (std::size_t i = 1, l = 0, r = 0; i < m; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < m && rev[z[i]] == rev[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }

  for (std::size_t period = 1; period < m; ++period) {
    const std::size_t match = z[period];
    const std::size_t start = (match >= m - period) ? 0 : m - period - match;
    const bool two_full_periods = (m - start) >= 2 * period;
    const bool whole_trace = (start == 0) && (m >= period + 1);
    if (two_full_periods || whole_trace) return {start, period};
  }
  throw evidence_error("no eventual period confirmed twice in a trace of " +
                       std::to_string(m) + " states");
}

// Convenience: the first `count` states of the orbit (init included).
template <class State, class Step>
std::vector<State> iterate_map(Step step, State init, std::size_t count) {
  std::vector<State> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(std::move(init));
  for (std::size_t i = 1; i < count; ++i) out.push_back(step(out.back()));
  return out;
}

}  // namespace bsnet
