#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsnet/errors.hpp"

// Borrow-save arithmetic: radix-2 words whose digits take values in
// {-1, 0, 1}, each digit stored as a bit pair (plus, minus) with
// value = plus - minus. The encoding is redundant: (0,0) and (1,1) both
// stand for zero, which is what makes the carry-free incrementer possible.

namespace bsnet {

// One signed digit as a (plus, minus) bit pair. All four pairs are legal.
class bs_digit {
 public:
  constexpr bs_digit() = default;
  constexpr bs_digit(bool plus, bool minus)
      : bits_(static_cast<std::uint8_t>((plus ? 1u : 0u) | (minus ? 2u : 0u))) {}

  constexpr bool plus() const { return (bits_ & 1u) != 0; }
  constexpr bool minus() const { return (bits_ & 2u) != 0; }
  constexpr int value() const { return (plus() ? 1 : 0) - (minus() ? 1 : 0); }

  friend constexpr bool operator==(bs_digit, bs_digit) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Fixed-width borrow-save word. Digit 0 is the least significant.
// Width is capped at 63 so the decoded value always fits a 64-bit signed
// integer; wider codes are rejected outright.
class bs_code {
 public:
  static constexpr std::size_t max_width = 63;

  explicit bs_code(std::size_t width) : digits_(checked_width(width)) {}

  std::size_t width() const { return digits_.size(); }

  bs_digit digit(std::size_t i) const {
    check_index(i);
    return digits_[i];
  }

  void set_digit(std::size_t i, bs_digit d) {
    check_index(i);
    digits_[i] = d;
  }

  // Bit planes (bit i = digit i), handy for hashing and packed traces.
  std::uint64_t plus_plane() const {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i)
      if (digits_[i].plus()) p |= std::uint64_t{1} << i;
    return p;
  }

  std::uint64_t minus_plane() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i)
      if (digits_[i].minus()) m |= std::uint64_t{1} << i;
    return m;
  }

  // Canonical key: width byte, then the two planes little-endian.
  std::string packed() const {
    std::string key(17, '\0');
    key[0] = static_cast<char>(width());
    std::uint64_t p = plus_plane(), m = minus_plane();
    for (int b = 0; b < 8; ++b) {
      key[1 + b] = static_cast<char>((p >> (8 * b)) & 0xff);
      key[9 + b] = static_cast<char>((m >> (8 * b)) & 0xff);
    }
    return key;
  }

  // Positional bit-pair equality (code identity), not value equality.
  friend bool operator==(const bs_code&, const bs_code&) = default;

 private:
  static std::size_t checked_width(std::size_t w) {
    if (w == 0 || w > max_width)
      throw domain_error("bs_code width must be in [1, " +
                         std::to_string(max_width) + "], got " +
                         std::to_string(w));
    return w;
  }

  void check_index(std::size_t i) const {
    if (i >= digits_.size())
      throw dimension_error("digit index " + std::to_string(i) +
                            " out of range for width " +
                            std::to_string(digits_.size()));
  }

  std::vector<bs_digit> digits_;
};

// Decoded integer value: sum of digit_i * 2^i.
inline std::int64_t code_value(const bs_code& code) {
  std::int64_t v = 0;
  for (std::size_t i = code.width(); i-- > 0;)
    v = 2 * v + code.digit(i).value();
  return v;
}

// Positional identity of two codes of equal width. Strictly stronger than
// value equality: ((1,1)) and ((0,0)) are equal (both zero) but not identical.
inline bool codes_identical(const bs_code& a, const bs_code& b) {
  if (a.width() != b.width())
    throw dimension_error("codes of width " + std::to_string(a.width()) +
                          " and " + std::to_string(b.width()) +
                          " are incomparable");
  return a == b;
}

// First-stage outputs of the two-stage incrementer. For every position,
// (d_prime, d_second) = (1,1) is impossible by construction.
struct stage_outputs {
  std::vector<std::uint8_t> d_prime;   // plus AND NOT minus, per digit
  std::vector<std::uint8_t> d_second;  // NOT plus AND minus, per digit
};

inline stage_outputs stage_one(const bs_code& code) {
  stage_outputs out;
  out.d_prime.resize(code.width());
  out.d_second.resize(code.width());
  for (std::size_t i = 0; i < code.width(); ++i) {
    const bs_digit d = code.digit(i);
    out.d_prime[i] = d.plus() && !d.minus();
    out.d_second[i] = !d.plus() && d.minus();
  }
  return out;
}

// Second stage: assembles the incremented word from first-stage outputs.
//   s_0.plus = 1,  s_n.minus = 0
//   s_i.minus   = d_prime_i OR d_second_i     (0 <= i <= n-1)
//   s_{i+1}.plus = d_prime_i                  (0 <= i <= n-1)
// Since (d_prime_i, d_second_i) never is (1,1), the OR equals the XOR of the
// original digit bits; bs_increment computes the same word directly.
inline bs_code stage_two(const stage_outputs& st) {
  const std::size_t n = st.d_prime.size();
  if (n == 0 || st.d_second.size() != n)
    throw dimension_error("stage outputs must hold two equal non-empty rails");
  if (n + 1 > bs_code::max_width)
    throw domain_error("increment result would exceed the maximum width");
  bs_code s(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const bool sp = (i == 0) ? true : st.d_prime[i - 1] != 0;
    const bool sm = st.d_prime[i] != 0 || st.d_second[i] != 0;
    s.set_digit(i, bs_digit(sp, sm));
  }
  s.set_digit(n, bs_digit(st.d_prime[n - 1] != 0, false));
  return s;
}

// Carry-free increment: width n in, width n+1 out, value(out) = value(in) + 1.
// Each output digit depends on at most one input digit (positions i and i-1),
// so there is no carry chain:
//   s_0.plus = 1,  s_n.minus = 0
//   s_i.minus    = plus_i XOR minus_i          (0 <= i <= n-1)
//   s_{i+1}.plus = plus_i AND NOT minus_i      (0 <= i <= n-1)
inline bs_code bs_increment(const bs_code& code) {
  const std::size_t n = code.width();
  if (n + 1 > bs_code::max_width)
    throw domain_error("cannot increment a code of width " +
                       std::to_string(n) + ": result would exceed width " +
                       std::to_string(bs_code::max_width));
  bs_code s(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const bs_digit d = code.digit(i);
    const bool sp =
        (i == 0) ? true
                 : (code.digit(i - 1).plus() && !code.digit(i - 1).minus());
    const bool sm = d.plus() != d.minus();
    s.set_digit(i, bs_digit(sp, sm));
  }
  s.set_digit(n, bs_digit(code.digit(n - 1).plus() && !code.digit(n - 1).minus(),
                          false));
  return s;
}

// Drops the most significant digit; purely positional.
inline bs_code truncate(const bs_code& code) {
  if (code.width() < 2)
    throw domain_error("truncate requires width >= 2");
  bs_code t(code.width() - 1);
  for (std::size_t i = 0; i + 1 < code.width(); ++i)
    t.set_digit(i, code.digit(i));
  return t;
}

// Text form "((1,0)(0,1)(1,0))": exact bit pairs, most significant first.
inline std::string to_pair_string(const bs_code& code) {
  std::string out = "(";
  for (std::size_t i = code.width(); i-- > 0;) {
    const bs_digit d = code.digit(i);
    out += '(';
    out += d.plus() ? '1' : '0';
    out += ',';
    out += d.minus() ? '1' : '0';
    out += ')';
  }
  out += ')';
  return out;
}

// Text form "1T1": digit values only, most significant first, T for -1.
// Lossy for zeros: both (0,0) and (1,1) print as '0'.
inline std::string to_digit_string(const bs_code& code) {
  std::string out;
  for (std::size_t i = code.width(); i-- > 0;) {
    switch (code.digit(i).value()) {
      case 1: out += '1'; break;
      case 0: out += '0'; break;
      default: out += 'T'; break;
    }
  }
  return out;
}

namespace detail {

inline void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

inline char expect_char(std::string_view text, std::size_t& pos,
                        const char* what) {
  skip_space(text, pos);
  if (pos >= text.size())
    throw parse_error(std::string("unexpected end of code text, expected ") +
                      what);
  return text[pos++];
}

inline bool parse_bit(std::string_view text, std::size_t& pos) {
  const char c = expect_char(text, pos, "'0' or '1'");
  if (c == '0') return false;
  if (c == '1') return true;
  throw parse_error(std::string("expected '0' or '1', got '") + c + "'");
}

}  // namespace detail

// Parses either text form. Pair form is exact; digit form maps
// '1' -> (1,0), '0' -> (0,0), 'T'/'t' -> (0,1).
inline bs_code parse_bs(std::string_view text) {
  std::size_t pos = 0;
  detail::skip_space(text, pos);
  if (pos >= text.size()) throw parse_error("empty code text");

  std::vector<bs_digit> ms_first;
  if (text[pos] == '(') {
    ++pos;
    for (;;) {
      detail::skip_space(text, pos);
      if (pos >= text.size())
        throw parse_error("unterminated code: missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != '(')
        throw parse_error(std::string("expected '(' or ')', got '") +
                          text[pos] + "'");
      ++pos;
      const bool p = detail::parse_bit(text, pos);
      if (detail::expect_char(text, pos, "','") != ',')
        throw parse_error("expected ',' between the two bits of a digit");
      const bool m = detail::parse_bit(text, pos);
      if (detail::expect_char(text, pos, "')'") != ')')
        throw parse_error("expected ')' after a digit pair");
      ms_first.emplace_back(p, m);
    }
  } else {
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      switch (text[pos]) {
        case '1': ms_first.emplace_back(true, false); break;
        case '0': ms_first.emplace_back(false, false); break;
        case 'T':
        case 't': ms_first.emplace_back(false, true); break;
        default:
          throw parse_error(std::string("unexpected character '") +
                            text[pos] + "' in digit text");
      }
      ++pos;
    }
  }
  detail::skip_space(text, pos);
  if (pos != text.size())
    throw parse_error("trailing characters after code text");
  if (ms_first.empty()) throw parse_error("code text holds no digits");

  bs_code code(ms_first.size());
  for (std::size_t i = 0; i < ms_first.size(); ++i)
    code.set_digit(ms_first.size() - 1 - i, ms_first[i]);
  return code;
}

}  // namespace bsnet
