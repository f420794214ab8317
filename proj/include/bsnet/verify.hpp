#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bsnet/bs_arith.hpp"
#include "bsnet/counter_seq.hpp"
#include "bsnet/dynamics.hpp"
#include "bsnet/memory_net.hpp"
#include "bsnet/threshold_net.hpp"

// The named verification suites behind `verify ...` in the CLI and behind the
// acceptance run. Every check is exact-integer: a report passes iff its
// expected and observed strings are equal.

namespace bsnet {

struct verification_report {
  std::string check;
  std::string params;
  std::string expected;
  std::string observed;
  bool pass = false;
  double millis = 0.0;
};

inline bool all_pass(const std::vector<verification_report>& reports) {
  for (const verification_report& r : reports)
    if (!r.pass) return false;
  return true;
}

namespace detail {

class stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline verification_report make_report(std::string check, std::string params,
                                       std::string expected,
                                       std::string observed, double millis) {
  verification_report r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  r.pass = r.expected == r.observed;
  r.millis = millis;
  return r;
}

inline std::uint64_t pow2(std::size_t n) { return std::uint64_t{1} << n; }

// Runs fn(0..count-1), in order when workers <= 1, else on a small pool.
// Results land in index order either way.
template <class Fn>
auto run_indexed(std::size_t count, unsigned workers, Fn fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using result_type = decltype(fn(std::size_t{0}));
  std::vector<result_type> out(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> cursor{0};
  std::vector<std::exception_ptr> failures(nthreads);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned w = 0; w < nthreads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= count) return;
          out[i] = fn(i);
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : failures)
    if (e) std::rethrow_exception(e);
  return out;
}

inline const std::array<const char*, 9>& golden_cycle_rows() {
  // The 8-neuron orbit of build_theorem1_net(3), neurons 8..1, rows t = 0..8.
  static const std::array<const char*, 9> rows = {
      "0 0 0 0 0 0 1 0", "0 0 0 0 1 0 1 0", "0 0 1 0 0 0 1 0",
      "1 0 0 0 1 1 1 0", "0 0 0 1 0 0 1 0", "0 0 0 1 1 0 1 0",
      "0 0 1 1 0 0 1 0", "0 0 0 0 1 1 1 0", "0 0 0 0 0 0 1 0"};
  return rows;
}

inline std::string trace_row(const configuration& c) {
  std::string out;
  for (std::size_t i = c.size(); i >= 1; --i) {
    if (!out.empty()) out += ' ';
    out += c.get(i) ? '1' : '0';
  }
  return out;
}

}  // namespace detail

// The 9-row golden trace: rows t = 0..8 of the n = 3 net, bit-exact, with
// row 8 equal to row 0.
inline std::vector<verification_report> verify_table2() {
  detail::stopwatch clock;
  const net_with_state built = build_theorem1_net(3);
  configuration x = built.init;
  std::string observed = "9 golden rows, row 8 = row 0";
  for (std::size_t t = 0; t < 9; ++t) {
    if (detail::trace_row(x) != detail::golden_cycle_rows()[t]) {
      observed = "row " + std::to_string(t) + " is " + detail::trace_row(x);
      break;
    }
    x = mcp_step(built.net, x);
  }
  return {detail::make_report("table2", "n=3", "9 golden rows, row 8 = row 0",
                              observed, clock.ms())};
}

// Pure cycle of length exactly 2^n from the standard initial state.
inline std::vector<verification_report> verify_theorem1(std::size_t n_lo,
                                                        std::size_t n_hi,
                                                        unsigned workers = 1) {
  if (n_lo < 3 || n_hi < n_lo)
    throw domain_error("theorem1 range must satisfy 3 <= lo <= hi");
  return detail::run_indexed(n_hi - n_lo + 1, workers, [&](std::size_t idx) {
    const std::size_t n = n_lo + idx;
    detail::stopwatch clock;
    const std::uint64_t want = detail::pow2(n);
    const std::string expected = "transient=0 cycle=" + std::to_string(want);
    std::string observed;
    try {
      const net_with_state built = build_theorem1_net(n);
      const auto summary = detect_orbit(
          [&](const configuration& c) { return mcp_step(built.net, c); },
          built.init, static_cast<std::size_t>(want) + 2,
          [](const configuration& c) { return c.packed(); });
      observed = "transient=" + std::to_string(summary.transient) +
                 " cycle=" + std::to_string(summary.cycle);
    } catch (const error& e) {
      observed = std::string("error: ") + e.what();
    }
    return detail::make_report("theorem1",
                               "n=" + std::to_string(n) + " (cycle 2^n)",
                               expected, observed, clock.ms());
  });
}

struct corollary_point {
  std::size_t n;
  std::size_t k;
};

inline std::vector<corollary_point> default_corollary_grid() {
  return {{3, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {3, 4}, {5, 2}};
}

// Memory net with the counter parameter set: transient 0 and cycle exactly
// k * 2^(nk), measured both on window states and on the flat state sequence.
inline std::vector<verification_report> verify_corollary1(
    const std::vector<corollary_point>& points, unsigned workers = 1) {
  return detail::run_indexed(points.size(), workers, [&](std::size_t idx) {
    const auto [n, k] = points[idx];
    detail::stopwatch clock;
    const std::uint64_t want = k * detail::pow2(n * k);
    const std::string expected = "transient=0 cycle=" + std::to_string(want);
    std::string observed;
    try {
      const memory_net net = build_simulating_net(n, k, counter_params());
      const memory_window start =
          build_initial_memory(n, k, counter_initial_state(n * k));
      const auto windows = detect_orbit(
          [&](const memory_window& w) {
            memory_window next = w;
            next.push(caianiello_step(net, w));
            return next;
          },
          start, static_cast<std::size_t>(want) + 2 * k + 2,
          [](const memory_window& w) { return w.packed(); });
      const auto trace = y_sequence(
          net, start, windows.transient + 2 * windows.cycle + k + 1);
      const auto [seq_t, seq_l] = sequence_period(
          trace, [](const configuration& c) { return c.packed(); });
      if (seq_t != windows.transient || seq_l != windows.cycle)
        observed = "window orbit (" + std::to_string(windows.transient) + "," +
                   std::to_string(windows.cycle) + ") != sequence (" +
                   std::to_string(seq_t) + "," + std::to_string(seq_l) + ")";
      else
        observed = "transient=" + std::to_string(seq_t) +
                   " cycle=" + std::to_string(seq_l);
    } catch (const error& e) {
      observed = std::string("error: ") + e.what();
    }
    return detail::make_report(
        "corollary1",
        "n=" + std::to_string(n) + " k=" + std::to_string(k) +
            " (cycle k*2^(nk))",
        expected, observed, clock.ms());
  });
}

// Width-extension identity: the (n+1)-wide counter term is assembled from
// the n-wide terms at the same and next index plus the (n+1)-wide term.
inline std::vector<verification_report> verify_lemma1(std::size_t n_lo,
                                                      std::size_t n_hi) {
  std::vector<verification_report> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    detail::stopwatch clock;
    const std::uint64_t span = detail::pow2(n);
    std::string observed = "assembled terms identical for all i";
    bs_code a = u_initial(n);          // term i, width n
    bs_code b = u_next(a);             // term i+1, width n
    bs_code c = u_initial(n + 1);      // term i, width n+1
    for (std::uint64_t i = 0; i < span; ++i) {
      const bs_code next_wide = u_next(c);  // term i+1, width n+1
      bs_code assembled(n + 1);
      assembled.set_digit(0, bs_digit(true, b.digit(0).minus()));
      for (std::size_t j = 1; j < n; ++j) assembled.set_digit(j, b.digit(j));
      assembled.set_digit(
          n, bs_digit(a.digit(n - 1).plus() && !a.digit(n - 1).minus(),
                      c.digit(n).plus() != c.digit(n).minus()));
      if (!codes_identical(assembled, next_wide)) {
        observed = "mismatch at i=" + std::to_string(i) + ": assembled " +
                   to_pair_string(assembled) + " vs " +
                   to_pair_string(next_wide);
        break;
      }
      a = b;
      b = u_next(b);
      c = next_wide;
    }
    out.push_back(detail::make_report("lemma1", "n=" + std::to_string(n),
                                      "assembled terms identical for all i",
                                      observed, clock.ms()));
  }
  return out;
}

// Decoded counter value is congruent to the step count modulo 2^n,
// cross-checked against a plain integer counter.
inline std::vector<verification_report> verify_lemma2(std::size_t n_lo,
                                                      std::size_t n_hi) {
  std::vector<verification_report> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    detail::stopwatch clock;
    const std::uint64_t modulus = detail::pow2(n);
    const std::uint64_t span = detail::pow2(n + 1);
    std::string observed = "value congruent to j mod 2^n for all j";
    bs_code code = u_initial(n);
    for (std::uint64_t j = 0; j < span; ++j) {
      const std::int64_t value = code_value(code);
      const std::uint64_t residue =
          static_cast<std::uint64_t>(((value % static_cast<std::int64_t>(modulus)) +
                                      static_cast<std::int64_t>(modulus))) %
          modulus;
      if (residue != j % modulus) {
        observed = "mismatch at j=" + std::to_string(j) + ": value " +
                   std::to_string(value);
        break;
      }
      code = u_next(code);
    }
    out.push_back(detail::make_report("lemma2", "n=" + std::to_string(n),
                                      "value congruent to j mod 2^n for all j",
                                      observed, clock.ms()));
  }
  return out;
}

// The first 2^n counter terms are pairwise non-identical (lemma4) and the
// 2^n-th term is identical to the start (lemma3).
inline std::vector<verification_report> verify_lemma34(std::size_t n_lo,
                                                       std::size_t n_hi) {
  std::vector<verification_report> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    detail::stopwatch clock;
    const std::uint64_t span = detail::pow2(n);
    std::unordered_set<std::string> seen;
    seen.reserve(static_cast<std::size_t>(span) * 2);
    bs_code code = u_initial(n);
    for (std::uint64_t i = 0; i < span; ++i) {
      seen.insert(code.packed());
      code = u_next(code);
    }
    const bool wraps = codes_identical(code, u_initial(n));
    out.push_back(detail::make_report(
        "lemma3", "n=" + std::to_string(n), "term 2^n identical to term 0",
        wraps ? "term 2^n identical to term 0"
              : "term 2^n differs: " + to_pair_string(code),
        clock.ms()));
    out.push_back(detail::make_report(
        "lemma4", "n=" + std::to_string(n), std::to_string(span) + " distinct terms",
        std::to_string(seen.size()) + " distinct terms", clock.ms()));
  }
  return out;
}

// Decoding a v word recovers the counter term it encodes.
inline std::vector<verification_report> verify_lemma5(std::size_t n_lo,
                                                      std::size_t n_hi) {
  std::vector<verification_report> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    detail::stopwatch clock;
    const std::uint64_t span = detail::pow2(n);
    std::string observed = "u_from_v(v_from_u(u(i))) = u(i+1) for all i";
    bs_code code = u_initial(n);
    for (std::uint64_t i = 0; i < span; ++i) {
      const bs_code next = u_next(code);
      if (!codes_identical(u_from_v(v_from_u(code)), next)) {
        observed = "mismatch at i=" + std::to_string(i);
        break;
      }
      code = next;
    }
    out.push_back(detail::make_report("lemma5", "n=" + std::to_string(n),
                                      "u_from_v(v_from_u(u(i))) = u(i+1) for all i",
                                      observed, clock.ms()));
  }
  return out;
}

// No reachable v word carries a forbidden (1,1) pair, over the whole orbit.
inline std::vector<verification_report> verify_lemma6(std::size_t n_lo,
                                                      std::size_t n_hi) {
  std::vector<verification_report> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    detail::stopwatch clock;
    const std::uint64_t span = detail::pow2(n);
    std::string observed = "no forbidden pair on the whole orbit";
    v_word v = v_from_u(u_initial(n));
    for (std::uint64_t i = 0; i <= span; ++i) {
      if (!v_forbidden_ok(v)) {
        observed = "forbidden pair at step " + std::to_string(i);
        break;
      }
      if (i < span) v = v_successor(v);
    }
    out.push_back(detail::make_report("lemma6", "n=" + std::to_string(n),
                                      "no forbidden pair on the whole orbit",
                                      observed, clock.ms()));
  }
  return out;
}

// The net transition applied to an encoded v word yields the next v word.
inline std::vector<verification_report> verify_lemma7(std::size_t n_lo,
                                                      std::size_t n_hi) {
  std::vector<verification_report> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    detail::stopwatch clock;
    const std::uint64_t span = detail::pow2(n);
    std::string observed = "net step matches the v successor for all p";
    const net_with_state built = build_theorem1_net(n);
    bs_code code = u_initial(n);
    configuration x = to_configuration(v_from_u(code));
    for (std::uint64_t p = 0; p < span; ++p) {
      code = u_next(code);
      x = mcp_step(built.net, x);
      if (x != to_configuration(v_from_u(code))) {
        observed = "mismatch at p=" + std::to_string(p);
        break;
      }
    }
    out.push_back(detail::make_report("lemma7", "n=" + std::to_string(n),
                                      "net step matches the v successor for all p",
                                      observed, clock.ms()));
  }
  return out;
}

// All code-sequence and word-sequence checks bundled, each over the widest
// range that stays desk-sized.
inline std::vector<verification_report> verify_lemmas(std::size_t n_lo,
                                                      std::size_t n_hi) {
  std::vector<verification_report> out;
  const auto cap = [&](std::size_t hi) { return std::min(n_hi, hi); };
  const auto append = [&out](std::vector<verification_report> part) {
    out.insert(out.end(), part.begin(), part.end());
  };
  if (n_lo <= cap(7)) append(verify_lemma1(n_lo, cap(7)));
  if (n_lo <= cap(8)) append(verify_lemma2(n_lo, cap(8)));
  append(verify_lemma34(n_lo, n_hi));
  if (n_lo <= cap(8)) append(verify_lemma5(n_lo, cap(8)));
  if (n_lo <= cap(10)) append(verify_lemma6(n_lo, cap(10)));
  if (n_lo <= cap(8)) append(verify_lemma7(n_lo, cap(8)));
  return out;
}

// The direct successor relation equals the route through the counter codes,
// exhaustively over the reachable orbit, with closure back to the start.
// Two equivalent renderings of that route are checked: decode then re-encode
// (the re-encoding lands one step further by construction), and the
// commuting square with the counter step, successor(encode(u)) =
// encode(u_next(u)).
inline std::vector<verification_report> verify_prop1(std::size_t n_lo,
                                                     std::size_t n_hi) {
  std::vector<verification_report> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    detail::stopwatch clock;
    const std::uint64_t span = detail::pow2(n);
    std::string observed = "both routes agree on the whole orbit";
    const v_word start = v_from_u(u_initial(n));
    v_word v = start;
    bs_code u = u_initial(n);
    for (std::uint64_t i = 0; i < span; ++i) {
      const v_word direct = v_successor(v);
      const bs_code u_next_term = u_next(u);
      if (!(direct == v_from_u(u_from_v(v))) ||
          !(direct == v_from_u(u_next_term))) {
        observed = "routes disagree at step " + std::to_string(i);
        break;
      }
      v = direct;
      u = u_next_term;
    }
    if (observed == "both routes agree on the whole orbit" && !(v == start))
      observed = "orbit did not close after 2^n steps";
    out.push_back(detail::make_report("prop1", "n=" + std::to_string(n),
                                      "both routes agree on the whole orbit",
                                      observed, clock.ms()));
  }
  return out;
}

struct prop2_options {
  std::uint64_t seed = 12345;
  std::size_t cases = 100;
  std::size_t n_min = 3, n_max = 4;
  std::size_t k_min = 1, k_max = 4;
  std::size_t max_orbit_steps = std::size_t{1} << 20;
  unsigned workers = 1;
};

namespace detail {

struct prop2_instance {
  std::size_t n, k;
  family_params p;
  std::vector<std::uint8_t> x0_bits;
};

inline std::vector<prop2_instance> draw_prop2_instances(
    const prop2_options& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_n(opt.n_min, opt.n_max);
  std::uniform_int_distribution<std::size_t> pick_k(opt.k_min, opt.k_max);
  std::uniform_int_distribution<std::int64_t> pick_w(-2, 2);
  std::uniform_int_distribution<std::int64_t> pick_t(0, 2);
  std::uniform_int_distribution<int> pick_bit(0, 1);

  std::vector<prop2_instance> out;
  out.reserve(opt.cases);
  for (std::size_t c = 0; c < opt.cases; ++c) {
    prop2_instance inst;
    inst.n = pick_n(rng);
    inst.k = pick_k(rng);
    inst.p = family_params{pick_w(rng), pick_w(rng), pick_w(rng), pick_t(rng),
                           pick_w(rng), pick_w(rng), pick_w(rng), pick_t(rng)};
    const std::size_t m = 2 * inst.n * inst.k + 2;
    inst.x0_bits.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      inst.x0_bits[i] = static_cast<std::uint8_t>(pick_bit(rng));
    inst.x0_bits[1] = 1;      // neuron 2 on
    inst.x0_bits[m - 2] = 0;  // neuron 2nk+1 off
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::string render_params(const family_params& p) {
  return "a=(" + std::to_string(p.a1) + "," + std::to_string(p.a2) + "," +
         std::to_string(p.a3) + ";" + std::to_string(p.theta1) + ") b=(" +
         std::to_string(p.b1) + "," + std::to_string(p.b2) + "," +
         std::to_string(p.b3) + ";" + std::to_string(p.theta2) + ")";
}

}  // namespace detail

// Seeded random campaign: the memory net must replay the fast net slice by
// slice over a horizon of T+2L epochs, and its own orbit must measure
// (k*T, k*L). A strictly shorter minimal transient with the exact cycle is a
// logged finding (extra "prop2-finding" report), not a failure: the sequence
// is still periodic with period k*L from k*T onward.
inline std::vector<verification_report> verify_prop2(
    const prop2_options& opt = {}) {
  const auto instances = detail::draw_prop2_instances(opt);
  auto nested = detail::run_indexed(
      instances.size(), opt.workers,
      [&](std::size_t idx) -> std::vector<verification_report> {
        const detail::prop2_instance& inst = instances[idx];
        detail::stopwatch clock;
        const std::string params =
            "case=" + std::to_string(idx) + " n=" + std::to_string(inst.n) +
            " k=" + std::to_string(inst.k) + " " +
            detail::render_params(inst.p);
        std::vector<verification_report> reports;
        std::string expected = "align=ok";
        std::string observed;
        try {
          const configuration x0 = configuration::from_bits(inst.x0_bits);
          const net_with_state fast =
              build_family_net(inst.n, inst.k, inst.p, x0);
          const auto fast_orbit = detect_orbit(
              [&](const configuration& c) { return mcp_step(fast.net, c); },
              fast.init, opt.max_orbit_steps,
              [](const configuration& c) { return c.packed(); });
          const std::uint64_t kT = inst.k * fast_orbit.transient;
          const std::uint64_t kL = inst.k * fast_orbit.cycle;
          expected = "align=ok cycle=" + std::to_string(kL) +
                     " transient<=" + std::to_string(kT);

          const std::uint64_t horizon =
              fast_orbit.transient + 2 * fast_orbit.cycle;
          const alignment_report align =
              alignment_check(inst.n, inst.k, inst.p, x0, horizon);
          if (!align.ok) {
            const alignment_mismatch& m = *align.mismatch;
            observed = "align=mismatch(t=" + std::to_string(m.t) +
                       ",i=" + std::to_string(m.i) +
                       ",j=" + std::to_string(m.j) +
                       ",fast=" + std::to_string(m.mcp_value) +
                       ",memory=" + std::to_string(m.memory_value) + ")";
          } else {
            const memory_net slow =
                build_simulating_net(inst.n, inst.k, inst.p);
            const auto slow_orbit = detect_orbit(
                [&](const memory_window& w) {
                  memory_window next = w;
                  next.push(caianiello_step(slow, w));
                  return next;
                },
                build_initial_memory(inst.n, inst.k, x0),
                inst.k * (fast_orbit.transient + fast_orbit.cycle) + 2,
                [](const memory_window& w) { return w.packed(); });
            const std::uint64_t t_slow = slow_orbit.transient;
            const std::uint64_t l_slow = slow_orbit.cycle;
            observed = "align=ok cycle=" + std::to_string(l_slow) +
                       " transient<=" +
                       std::to_string(t_slow <= kT ? kT : t_slow);
            if (l_slow == kL && t_slow < kT) {
              verification_report finding;
              finding.check = "prop2-finding";
              finding.params = params;
              finding.expected = "degenerate transient";
              finding.observed = "degenerate transient";
              finding.pass = true;
              finding.millis = 0.0;
              finding.params += " minimal transient " +
                                std::to_string(t_slow) + " < k*T " +
                                std::to_string(kT) + ", cycle exact";
              reports.push_back(std::move(finding));
            }
          }
        } catch (const error& e) {
          observed = std::string("error: ") + e.what();
        }
        reports.insert(reports.begin(),
                       detail::make_report("prop2", params, expected, observed,
                                           clock.ms()));
        return reports;
      });
  std::vector<verification_report> out;
  for (auto& group : nested)
    for (auto& r : group) out.push_back(std::move(r));
  return out;
}

// Exhaustive increment oracle over every code of width <= max_width:
// decoded value grows by one and the staged route agrees with the direct one.
inline std::vector<verification_report> verify_increment(
    std::size_t max_width = 8) {
  detail::stopwatch clock;
  const std::string want = "value(increment(c)) = value(c)+1 for all codes";
  std::string observed = want;
  for (std::size_t w = 1; w <= max_width && observed == want; ++w) {
    const std::uint64_t count = std::uint64_t{1} << (2 * w);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      bs_code code(w);
      for (std::size_t i = 0; i < w; ++i) {
        const std::uint64_t pair = (bits >> (2 * i)) & 3u;
        code.set_digit(i, bs_digit((pair & 1u) != 0, (pair & 2u) != 0));
      }
      const bs_code inc = bs_increment(code);
      if (code_value(inc) != code_value(code) + 1) {
        observed = "value mismatch at width " + std::to_string(w) + " code " +
                   to_pair_string(code);
        break;
      }
      if (!codes_identical(inc, stage_two(stage_one(code)))) {
        observed = "staged route differs at width " + std::to_string(w) +
                   " code " + to_pair_string(code);
        break;
      }
    }
  }
  return {detail::make_report("increment-oracle",
                              "widths 1.." + std::to_string(max_width), want,
                              observed, clock.ms())};
}

// Threshold/Boolean equivalence of the elementary cell on its six admissible
// input triples (b and d never are both 1):
//   H(-a+b+d-1) = NOT a AND (b OR d)     H(a-b-d-1) = a AND NOT (b OR d)
inline std::vector<verification_report> verify_table1() {
  detail::stopwatch clock;
  std::string observed = "both identities hold on all six triples";
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int d = 0; d <= 1; ++d) {
        if (b == 1 && d == 1) continue;
        const int lhs1 = heaviside(-a + b + d - 1);
        const int rhs1 = (!a && (b || d)) ? 1 : 0;
        const int lhs2 = heaviside(a - b - d - 1);
        const int rhs2 = (a && !(b || d)) ? 1 : 0;
        if (lhs1 != rhs1 || lhs2 != rhs2) {
          observed = "mismatch at (a,b,d)=(" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(d) + ")";
        }
      }
  return {detail::make_report("table1", "6 admissible triples",
                              "both identities hold on all six triples",
                              observed, clock.ms())};
}

}  // namespace bsnet
