#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bsnet/bs_arith.hpp"
#include "bsnet/errors.hpp"

// The modulo-2^n counter sequence u(.) built on the carry-free incrementer,
// and the associated 2n+2-bit words v(.) made of first-stage outputs plus two
// constant positions. Only widths n >= 3 are supported.

namespace bsnet {

inline std::size_t check_counter_width(std::size_t n) {
  if (n < 3)
    throw domain_error("counter width must be >= 3, got " + std::to_string(n));
  return n;
}

// Start word of the counter: digits 0 and 1 hold (1,1), all others (0,0).
// Value 0, but deliberately not the all-zero encoding.
inline bs_code u_initial(std::size_t n) {
  check_counter_width(n);
  bs_code code(n);
  code.set_digit(0, bs_digit(true, true));
  code.set_digit(1, bs_digit(true, true));
  return code;
}

// One counter step: increment, then drop the extra top digit.
inline bs_code u_next(const bs_code& code) { return truncate(bs_increment(code)); }

// j-fold counter step from u_initial(n). Decoded value is j mod 2^n.
inline bs_code u_term(std::size_t n, std::uint64_t j) {
  bs_code code = u_initial(n);
  for (std::uint64_t s = 0; s < j; ++s) code = u_next(code);
  return code;
}

// Word of 2n+2 bits with two addressings:
//   neuron index 1..2n+2 (as laid out in network traces), and
//   component index: c_prime(i) = neuron 2i+2, c_second(i) = neuron 2i+1,
//   for 0 <= i <= n.
// Words reachable from the counter satisfy c_prime(0) = 1, c_second(n) = 0
// and the forbidden-pair rule checked by v_forbidden_ok; raw words may
// violate all three, so validity is checked by the operations that need it.
class v_word {
 public:
  explicit v_word(std::size_t n)
      : n_(check_counter_width(n)), bits_(2 * n + 2, 0) {}

  static v_word from_neuron_bits(const std::vector<std::uint8_t>& bits) {
    if (bits.size() < 8 || bits.size() % 2 != 0)
      throw domain_error("a v_word needs an even bit count 2n+2 with n >= 3");
    v_word v((bits.size() - 2) / 2);
    for (std::size_t i = 0; i < bits.size(); ++i)
      v.bits_[i] = bits[i] ? 1 : 0;
    return v;
  }

  std::size_t n() const { return n_; }
  std::size_t neurons() const { return 2 * n_ + 2; }

  int neuron(std::size_t i) const {
    check_neuron(i);
    return bits_[i - 1];
  }

  void set_neuron(std::size_t i, int value) {
    check_neuron(i);
    bits_[i - 1] = value ? 1 : 0;
  }

  int c_prime(std::size_t i) const { return neuron(2 * i + 2); }
  int c_second(std::size_t i) const { return neuron(2 * i + 1); }
  void set_c_prime(std::size_t i, int value) { set_neuron(2 * i + 2, value); }
  void set_c_second(std::size_t i, int value) { set_neuron(2 * i + 1, value); }

  // Bits indexed from neuron 1 upward.
  const std::vector<std::uint8_t>& neuron_bits() const { return bits_; }

  friend bool operator==(const v_word&, const v_word&) = default;

 private:
  void check_neuron(std::size_t i) const {
    if (i < 1 || i > bits_.size())
      throw dimension_error("neuron index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(bits_.size()));
  }

  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

// True iff no pair (c_prime(j), c_second(j-1)) with 1 <= j <= n equals (1,1).
inline bool v_forbidden_ok(const v_word& v) {
  for (std::size_t j = 1; j <= v.n(); ++j)
    if (v.c_prime(j) && v.c_second(j - 1)) return false;
  return true;
}

inline bool v_word_valid(const v_word& v) {
  return v.c_prime(0) == 1 && v.c_second(v.n()) == 0 && v_forbidden_ok(v);
}

namespace detail {

inline void require_valid_v(const v_word& v, const char* op) {
  if (v.c_prime(0) != 1)
    throw constraint_error(std::string(op) +
                           ": word rejected, neuron 2 (c_prime(0)) must be 1");
  if (v.c_second(v.n()) != 0)
    throw constraint_error(std::string(op) +
                           ": word rejected, neuron 2n+1 (c_second(n)) must be 0");
  if (!v_forbidden_ok(v))
    throw constraint_error(std::string(op) +
                           ": word rejected, it contains a forbidden "
                           "(c_prime(j), c_second(j-1)) = (1,1) pair");
}

}  // namespace detail

// Builds the v word of the NEXT counter term from the current code:
// v_from_u(u(i)) encodes step i+1 of the counter.
inline v_word v_from_u(const bs_code& code) {
  const std::size_t n = check_counter_width(code.width());
  const stage_outputs st = stage_one(code);
  v_word v(n);
  v.set_c_prime(0, 1);
  for (std::size_t j = 0; j < n; ++j) {
    v.set_c_prime(j + 1, st.d_prime[j]);
    v.set_c_second(j, st.d_second[j]);
  }
  return v;
}

// Direct successor relation on v words:
//   next.c_prime(i+1) = c_prime(i) AND NOT (c_prime(i+1) OR c_second(i))
//   next.c_second(i)  = NOT c_prime(i) AND (c_prime(i+1) OR c_second(i))
// with next.c_prime(0) = 1 and next.c_second(n) = 0. The relation is only
// guaranteed on words satisfying the v_word invariants, so v_successor
// rejects anything else.
inline v_word v_successor(const v_word& v) {
  detail::require_valid_v(v, "v_successor");
  const std::size_t n = v.n();
  v_word w(n);
  w.set_c_prime(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const bool joined = v.c_prime(i + 1) || v.c_second(i);
    w.set_c_prime(i + 1, v.c_prime(i) && !joined);
    w.set_c_second(i, !v.c_prime(i) && joined);
  }
  return w;
}

// Decodes the counter term encoded by a v word:
//   digit 0        = (1, c_prime(1) OR c_second(0))
//   digit i        = (c_prime(i), c_prime(i+1) OR c_second(i))   1 <= i <= n-1
inline bs_code u_from_v(const v_word& v) {
  detail::require_valid_v(v, "u_from_v");
  const std::size_t n = v.n();
  bs_code code(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool plus = (i == 0) ? true : v.c_prime(i) != 0;
    const bool minus = v.c_prime(i + 1) || v.c_second(i);
    code.set_digit(i, bs_digit(plus, minus));
  }
  return code;
}

// Trace line: bits from neuron 2n+2 down to 1, space separated.
inline std::string v_trace_line(const v_word& v) {
  std::string out;
  for (std::size_t i = v.neurons(); i >= 1; --i) {
    if (!out.empty()) out += ' ';
    out += v.neuron(i) ? '1' : '0';
  }
  return out;
}

}  // namespace bsnet
