#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bsnet/counter_seq.hpp"
#include "bsnet/errors.hpp"

// Synchronous threshold networks: integer weights, integer thresholds,
// Heaviside activation with value 1 at zero. Neuron indices are 1-based in
// the public interface; storage is 0-based.

namespace bsnet {

// 0 for negative inputs, 1 otherwise (including zero).
inline int heaviside(std::int64_t x) { return x < 0 ? 0 : 1; }

// Bit vector indexed by neuron number 1..size.
class configuration {
 public:
  configuration() = default;
  explicit configuration(std::size_t size) : bits_(size, 0) {}

  static configuration from_bits(const std::vector<std::uint8_t>& bits) {
    configuration c(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) c.bits_[i] = bits[i] ? 1 : 0;
    return c;
  }

  std::size_t size() const { return bits_.size(); }

  int get(std::size_t neuron) const {
    check_neuron(neuron);
    return bits_[neuron - 1];
  }

  void set(std::size_t neuron, int value) {
    check_neuron(neuron);
    bits_[neuron - 1] = value ? 1 : 0;
  }

  const std::vector<std::uint8_t>& raw() const { return bits_; }

  // Bits packed eight per byte, neuron 1 in the low bit of byte 0.
  std::string packed() const {
    std::string key((bits_.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) key[i / 8] |= static_cast<char>(1 << (i % 8));
    return key;
  }

  friend bool operator==(const configuration&, const configuration&) = default;

 private:
  void check_neuron(std::size_t i) const {
    if (i < 1 || i > bits_.size())
      throw dimension_error("neuron index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(bits_.size()));
  }

  std::vector<std::uint8_t> bits_;
};

// Dense integer weight matrix plus a threshold per neuron.
class threshold_net {
 public:
  explicit threshold_net(std::size_t size)
      : size_(size), weights_(size * size, 0), thresholds_(size, 0) {
    if (size == 0) throw domain_error("a net needs at least one neuron");
  }

  std::size_t size() const { return size_; }

  std::int64_t weight(std::size_t i, std::size_t j) const {
    return weights_[index(i, j)];
  }

  void set_weight(std::size_t i, std::size_t j, std::int64_t w) {
    weights_[index(i, j)] = w;
  }

  std::int64_t threshold(std::size_t i) const {
    check_neuron(i);
    return thresholds_[i - 1];
  }

  void set_threshold(std::size_t i, std::int64_t t) {
    check_neuron(i);
    thresholds_[i - 1] = t;
  }

  bool symmetric() const {
    for (std::size_t i = 1; i <= size_; ++i)
      for (std::size_t j = i + 1; j <= size_; ++j)
        if (weight(i, j) != weight(j, i)) return false;
    return true;
  }

  friend bool operator==(const threshold_net&, const threshold_net&) = default;

 private:
  void check_neuron(std::size_t i) const {
    if (i < 1 || i > size_)
      throw dimension_error("neuron index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(size_));
  }

  std::size_t index(std::size_t i, std::size_t j) const {
    check_neuron(i);
    check_neuron(j);
    return (i - 1) * size_ + (j - 1);
  }

  std::size_t size_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> thresholds_;
};

// One synchronous step: every neuron reads the old configuration.
inline configuration mcp_step(const threshold_net& net,
                              const configuration& x) {
  if (x.size() != net.size())
    throw dimension_error("configuration of size " + std::to_string(x.size()) +
                          " fed to a net of size " +
                          std::to_string(net.size()));
  // Potentials are summed over active neurons only.
  std::vector<std::size_t> active;
  active.reserve(x.size());
  for (std::size_t j = 1; j <= x.size(); ++j)
    if (x.get(j)) active.push_back(j);

  configuration next(net.size());
  for (std::size_t i = 1; i <= net.size(); ++i) {
    std::int64_t potential = -net.threshold(i);
    for (const std::size_t j : active) potential += net.weight(i, j);
    next.set(i, heaviside(potential));
  }
  return next;
}

struct net_with_state {
  threshold_net net;
  configuration init;
};

// Initial state used by the counter networks: neuron 2 on, everything else
// off, over 2m+2 neurons.
inline configuration counter_initial_state(std::size_t m) {
  configuration x(2 * m + 2);
  x.set(2, 1);
  return x;
}

// Net of size 2n+2 that steps the v-word encoding of the counter:
//   neuron 2       <- H(x_2)
//   neuron 2i+2    <- H(-x_{2i-1} + x_{2i} - x_{2i+2} - 1)     1 <= i <= n
//   neuron 2n+1    <- H(x_{2n+1} - 1)
//   neuron 2i-1    <- H(x_{2i-1} - x_{2i} + x_{2i+2} - 1)      1 <= i <= n
// Unmentioned weights are zero. Starting from counter_initial_state(n) the
// orbit is a pure cycle of length 2^n.
inline net_with_state build_theorem1_net(std::size_t n) {
  check_counter_width(n);
  threshold_net net(2 * n + 2);
  net.set_weight(2, 2, 1);
  net.set_threshold(2, 0);
  net.set_weight(2 * n + 1, 2 * n + 1, 1);
  net.set_threshold(2 * n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t even = 2 * i + 2;
    net.set_weight(even, 2 * i - 1, -1);
    net.set_weight(even, 2 * i, 1);
    net.set_weight(even, even, -1);
    net.set_threshold(even, 1);

    const std::size_t odd = 2 * i - 1;
    net.set_weight(odd, odd, 1);
    net.set_weight(odd, 2 * i, -1);
    net.set_weight(odd, even, 1);
    net.set_threshold(odd, 1);
  }
  return {std::move(net), counter_initial_state(n)};
}

// The eight integers parametrising the regular family of transition rules.
struct family_params {
  std::int64_t a1, a2, a3, theta1;
  std::int64_t b1, b2, b3, theta2;

  friend bool operator==(const family_params&, const family_params&) = default;
};

// Parameter set under which the family net reproduces build_theorem1_net.
inline family_params counter_params() {
  return family_params{-1, 1, -1, 1, 1, -1, 1, 1};
}

// Family net of size 2nk+2 (m = n * k_scale):
//   neuron 2       <- H(x_2)
//   neuron 2i+2    <- H(a1 x_{2i-1} + a2 x_{2i} + a3 x_{2i+2} - theta1)
//   neuron 2m+1    <- H(x_{2m+1} - 1)
//   neuron 2i-1    <- H(b1 x_{2i-1} + b2 x_{2i} + b3 x_{2i+2} - theta2)
// The initial state must have neuron 2 on and neuron 2m+1 off; nothing else
// about the parameters is policed.
inline net_with_state build_family_net(std::size_t n, std::size_t k_scale,
                                       const family_params& p,
                                       const configuration& x0) {
  check_counter_width(n);
  if (k_scale < 1) throw domain_error("k_scale must be >= 1");
  const std::size_t m = n * k_scale;
  if (x0.size() != 2 * m + 2)
    throw constraint_error("initial state must have 2nk+2 = " +
                           std::to_string(2 * m + 2) + " neurons, got " +
                           std::to_string(x0.size()));
  if (x0.get(2) != 1)
    throw constraint_error(
        "initial state constraint violated: neuron 2 must be 1");
  if (x0.get(2 * m + 1) != 0)
    throw constraint_error(
        "initial state constraint violated: neuron 2nk+1 must be 0");

  threshold_net net(2 * m + 2);
  net.set_weight(2, 2, 1);
  net.set_threshold(2, 0);
  net.set_weight(2 * m + 1, 2 * m + 1, 1);
  net.set_threshold(2 * m + 1, 1);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t even = 2 * i + 2;
    net.set_weight(even, 2 * i - 1, p.a1);
    net.set_weight(even, 2 * i, p.a2);
    net.set_weight(even, even, p.a3);
    net.set_threshold(even, p.theta1);

    const std::size_t odd = 2 * i - 1;
    net.set_weight(odd, odd, p.b1);
    net.set_weight(odd, 2 * i, p.b2);
    net.set_weight(odd, even, p.b3);
    net.set_threshold(odd, p.theta2);
  }
  return {std::move(net), x0};
}

// v_word <-> configuration bridges (same neuron numbering).
inline configuration to_configuration(const v_word& v) {
  return configuration::from_bits(v.neuron_bits());
}

inline v_word to_v_word(const configuration& c) {
  return v_word::from_neuron_bits(c.raw());
}

}  // namespace bsnet
