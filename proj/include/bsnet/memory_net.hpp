#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsnet/errors.hpp"
#include "bsnet/threshold_net.hpp"

// Threshold networks with memory depth k: the potential of neuron i at time
// t+1 sums delay-indexed taps w * y_j(t+1-s) over delays s = 1..k. The taps
// are stored sparsely since the nets built here have O(size) of them.

namespace bsnet {

// The last k configurations of a memory net, newest last. Backed by a ring
// buffer so a slide costs one configuration move, no reallocation.
class memory_window {
 public:
  memory_window(std::size_t size, std::size_t memory)
      : ring_(checked_memory(memory), configuration(size)) {}

  // Configurations oldest first; they must all have the same size.
  static memory_window from_configs(std::vector<configuration> configs) {
    if (configs.empty())
      throw domain_error("a memory window needs at least one configuration");
    for (const configuration& c : configs)
      if (c.size() != configs.front().size())
        throw dimension_error("window configurations differ in size");
    memory_window w(configs.front().size(), configs.size());
    w.ring_ = std::move(configs);
    w.head_ = 0;
    return w;
  }

  std::size_t size() const { return ring_.front().size(); }
  std::size_t memory() const { return ring_.size(); }

  // y(t+1-s): s = 1 is the newest entry, s = memory() the oldest.
  const configuration& recent(std::size_t s) const {
    if (s < 1 || s > ring_.size())
      throw dimension_error("delay " + std::to_string(s) +
                            " out of range 1.." + std::to_string(ring_.size()));
    return ring_[(head_ + ring_.size() - s) % ring_.size()];
  }

  // Entry by age: 0 is the oldest, memory()-1 the newest.
  const configuration& at_offset(std::size_t i) const {
    if (i >= ring_.size())
      throw dimension_error("window offset " + std::to_string(i) +
                            " out of range");
    return ring_[(head_ + i) % ring_.size()];
  }

  // Slides the window: drops the oldest entry, appends the new one.
  void push(configuration next) {
    if (next.size() != size())
      throw dimension_error("pushed configuration has the wrong size");
    ring_[head_] = std::move(next);
    head_ = (head_ + 1) % ring_.size();
  }

  // Canonical key: all configurations oldest first, bit-packed as one stream.
  std::string packed() const {
    const std::size_t bits = size() * memory();
    std::string key((bits + 7) / 8, '\0');
    std::size_t pos = 0;
    for (std::size_t i = 0; i < memory(); ++i) {
      const configuration& c = at_offset(i);
      for (std::size_t neuron = 1; neuron <= c.size(); ++neuron, ++pos)
        if (c.get(neuron)) key[pos / 8] |= static_cast<char>(1 << (pos % 8));
    }
    return key;
  }

  friend bool operator==(const memory_window& a, const memory_window& b) {
    if (a.memory() != b.memory() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.memory(); ++i)
      if (a.at_offset(i) != b.at_offset(i)) return false;
    return true;
  }

 private:
  static std::size_t checked_memory(std::size_t memory) {
    if (memory < 1) throw domain_error("memory depth must be >= 1");
    return memory;
  }

  std::vector<configuration> ring_;
  std::size_t head_ = 0;  // index of the oldest entry
};

class memory_net {
 public:
  struct tap {
    std::size_t target;   // neuron i
    std::size_t source;   // neuron j
    std::size_t delay;    // s in 1..memory
    std::int64_t weight;

    friend bool operator==(const tap&, const tap&) = default;
  };

  memory_net(std::size_t size, std::size_t memory)
      : size_(size), memory_(memory), by_target_(size), thresholds_(size, 0) {
    if (size == 0) throw domain_error("a net needs at least one neuron");
    if (memory < 1) throw domain_error("memory depth must be >= 1");
  }

  std::size_t size() const { return size_; }
  std::size_t memory() const { return memory_; }

  // Appends a tap; repeated (i, j, s) entries accumulate.
  void add_tap(std::size_t i, std::size_t j, std::size_t s, std::int64_t w) {
    check_neuron(i);
    check_neuron(j);
    if (s < 1 || s > memory_)
      throw dimension_error("tap delay " + std::to_string(s) +
                            " out of range 1.." + std::to_string(memory_));
    by_target_[i - 1].push_back(tap{i, j, s, w});
  }

  // Effective weight of (i, j, s); zero when no tap is present.
  std::int64_t tap_weight(std::size_t i, std::size_t j, std::size_t s) const {
    check_neuron(i);
    std::int64_t sum = 0;
    for (const tap& t : by_target_[i - 1])
      if (t.source == j && t.delay == s) sum += t.weight;
    return sum;
  }

  const std::vector<tap>& taps_of(std::size_t i) const {
    check_neuron(i);
    return by_target_[i - 1];
  }

  std::vector<tap> all_taps() const {
    std::vector<tap> out;
    for (const auto& row : by_target_) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  std::int64_t threshold(std::size_t i) const {
    check_neuron(i);
    return thresholds_[i - 1];
  }

  void set_threshold(std::size_t i, std::int64_t t) {
    check_neuron(i);
    thresholds_[i - 1] = t;
  }

 private:
  void check_neuron(std::size_t i) const {
    if (i < 1 || i > size_)
      throw dimension_error("neuron index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(size_));
  }

  std::size_t size_;
  std::size_t memory_;
  std::vector<std::vector<tap>> by_target_;
  std::vector<std::int64_t> thresholds_;
};

// One step: y_i(t+1) = H(sum of taps w * y_j(t+1-s) - threshold_i).
// The caller slides the window with the returned configuration.
inline configuration caianiello_step(const memory_net& net,
                                     const memory_window& w) {
  if (w.size() != net.size())
    throw dimension_error("window of size " + std::to_string(w.size()) +
                          " fed to a net of size " + std::to_string(net.size()));
  if (w.memory() != net.memory())
    throw dimension_error("window of depth " + std::to_string(w.memory()) +
                          " fed to a net of memory " +
                          std::to_string(net.memory()));
  configuration next(net.size());
  for (std::size_t i = 1; i <= net.size(); ++i) {
    std::int64_t potential = -net.threshold(i);
    for (const memory_net::tap& t : net.taps_of(i))
      potential += t.weight * w.recent(t.delay).get(t.source);
    next.set(i, heaviside(potential));
  }
  return next;
}

// Memory net of size 2n+2 and depth k that replays the size-2nk+2 family net
// at a k-fold slower epoch rhythm:
//   neuron 2     <- H(y_{2n+1}(t+1-k) + y_{2n+2}(t) - 1)
//   neuron 2i+2  <- H(a1 y_{2i-1} + a2 y_{2i} + a3 y_{2i+2} - theta1) at delay k
//   neuron 2n+1  <- H(y_{2n+1}(t+1-k) - 1)
//   neuron 2i-1  <- H(b1 y_{2i-1} + b2 y_{2i} + b3 y_{2i+2} - theta2) at delay k
// Only neuron 2 carries a delay-1 tap.
inline memory_net build_simulating_net(std::size_t n, std::size_t k,
                                       const family_params& p) {
  check_counter_width(n);
  if (k < 1) throw domain_error("memory depth k must be >= 1");
  memory_net net(2 * n + 2, k);
  net.add_tap(2, 2 * n + 1, k, 1);
  net.add_tap(2, 2 * n + 2, 1, 1);
  net.set_threshold(2, 1);
  net.add_tap(2 * n + 1, 2 * n + 1, k, 1);
  net.set_threshold(2 * n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t even = 2 * i + 2;
    net.add_tap(even, 2 * i - 1, k, p.a1);
    net.add_tap(even, 2 * i, k, p.a2);
    net.add_tap(even, even, k, p.a3);
    net.set_threshold(even, p.theta1);

    const std::size_t odd = 2 * i - 1;
    net.add_tap(odd, odd, k, p.b1);
    net.add_tap(odd, 2 * i, k, p.b2);
    net.add_tap(odd, even, k, p.b3);
    net.set_threshold(odd, p.theta2);
  }
  return net;
}

// Packs the size-2nk+2 initial state into the k starting configurations of
// the memory net (oldest first):
//   y_j(i)    = x0_{2ni+j}          1 <= j <= 2n, 0 <= i <= k-1
//   y_{2n+1}  = 1 at i = 0, else 0
//   y_{2n+2}(i) = x0_{2n(i+1)+2}    0 <= i <= k-1
inline memory_window build_initial_memory(std::size_t n, std::size_t k,
                                          const configuration& x0) {
  check_counter_width(n);
  if (k < 1) throw domain_error("memory depth k must be >= 1");
  if (x0.size() != 2 * n * k + 2)
    throw constraint_error("initial state must have 2nk+2 = " +
                           std::to_string(2 * n * k + 2) + " neurons, got " +
                           std::to_string(x0.size()));
  if (x0.get(2) != 1)
    throw constraint_error(
        "initial state constraint violated: neuron 2 must be 1");
  if (x0.get(2 * n * k + 1) != 0)
    throw constraint_error(
        "initial state constraint violated: neuron 2nk+1 must be 0");

  std::vector<configuration> configs;
  configs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    configuration y(2 * n + 2);
    for (std::size_t j = 1; j <= 2 * n; ++j) y.set(j, x0.get(2 * n * i + j));
    y.set(2 * n + 1, i == 0 ? 1 : 0);
    y.set(2 * n + 2, x0.get(2 * n * (i + 1) + 2));
    configs.push_back(std::move(y));
  }
  return memory_window::from_configs(std::move(configs));
}

// The first `length` states of the memory net's flat state sequence,
// starting with the window contents (oldest first).
inline std::vector<configuration> y_sequence(const memory_net& net,
                                             memory_window window,
                                             std::size_t length) {
  std::vector<configuration> out;
  out.reserve(length);
  for (std::size_t i = 0; i < window.memory() && out.size() < length; ++i)
    out.push_back(window.at_offset(i));
  while (out.size() < length) {
    configuration next = caianiello_step(net, window);
    window.push(next);
    out.push_back(std::move(next));
  }
  return out;
}

struct alignment_mismatch {
  std::uint64_t t;   // epoch of the fast net
  std::size_t i;     // sub-step within the epoch, 0..k-1
  std::size_t j;     // neuron of the memory net
  int mcp_value;     // what the fast net prescribes
  int memory_value;  // what the memory net produced
};

struct alignment_report {
  bool ok = false;
  std::uint64_t horizon = 0;
  std::optional<alignment_mismatch> mismatch;
};

namespace detail {

// Compares one epoch block of memory-net configurations (oldest first,
// block[i] = y(tk+i)) against the fast-net state x(t).
inline std::optional<alignment_mismatch> compare_epoch(
    std::uint64_t t, std::size_t n, std::size_t k,
    const std::vector<configuration>& block, const configuration& x) {
  for (std::size_t i = 0; i < k; ++i) {
    const configuration& y = block[i];
    for (std::size_t j = 1; j <= 2 * n; ++j)
      if (y.get(j) != x.get(2 * n * i + j))
        return alignment_mismatch{t, i, j, x.get(2 * n * i + j), y.get(j)};
    const int expected_top = x.get(2 * n * (i + 1) + 2);
    if (y.get(2 * n + 2) != expected_top)
      return alignment_mismatch{t, i, 2 * n + 2, expected_top,
                                y.get(2 * n + 2)};
    const int expected_rhythm = (i == 0) ? 1 : 0;
    if (y.get(2 * n + 1) != expected_rhythm)
      return alignment_mismatch{t, i, 2 * n + 1, expected_rhythm,
                                y.get(2 * n + 1)};
  }
  return std::nullopt;
}

// Core of alignment_check, reusable with a hand-built (possibly wrong)
// memory net so the mismatch path can be exercised.
inline alignment_report run_alignment(std::size_t n, std::size_t k,
                                      const net_with_state& fast,
                                      const memory_net& slow,
                                      memory_window window,
                                      std::uint64_t horizon) {
  alignment_report report;
  report.horizon = horizon;

  configuration x = fast.init;
  std::vector<configuration> block;
  block.reserve(k);
  for (std::size_t i = 0; i < k; ++i) block.push_back(window.at_offset(i));

  for (std::uint64_t t = 0;; ++t) {
    if (auto m = detail::compare_epoch(t, n, k, block, x)) {
      report.mismatch = *m;
      return report;
    }
    if (t == horizon) break;
    x = mcp_step(fast.net, x);
    block.clear();
    for (std::size_t i = 0; i < k; ++i) {
      configuration next = caianiello_step(slow, window);
      window.push(next);
      block.push_back(std::move(next));
    }
  }
  report.ok = true;
  return report;
}

}  // namespace detail

// Runs the size-2nk+2 family net for `horizon` epochs and the size-2n+2
// memory net for k*horizon steps, then checks that every memory-net state
// equals the prescribed slice of the fast-net state. Returns the first
// mismatch, with its (epoch, sub-step, neuron) coordinates, or success.
inline alignment_report alignment_check(std::size_t n, std::size_t k,
                                        const family_params& p,
                                        const configuration& x0,
                                        std::uint64_t horizon) {
  const net_with_state fast = build_family_net(n, k, p, x0);
  const memory_net slow = build_simulating_net(n, k, p);
  memory_window window = build_initial_memory(n, k, x0);
  return detail::run_alignment(n, k, fast, slow, std::move(window), horizon);
}

}  // namespace bsnet
