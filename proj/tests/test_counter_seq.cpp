#include "doctest.h"

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "bsnet/counter_seq.hpp"

using namespace bsnet;

namespace {

// The nine width-3 counter terms, frozen. Term 8 equals term 0.
const std::array<const char*, 9> kWidth3Terms = {
    "((0,0)(1,1)(1,1))", "((0,0)(0,0)(1,0))", "((0,0)(1,0)(1,1))",
    "((1,0)(0,1)(1,0))", "((0,1)(1,1)(1,1))", "((0,1)(0,0)(1,0))",
    "((0,1)(1,0)(1,1))", "((1,1)(0,1)(1,0))", "((0,0)(1,1)(1,1))"};

// Rows t = 0..8 of the 8-neuron trace, neurons 8..1. Row 8 equals row 0.
const std::array<const char*, 9> kWidth3Rows = {
    "0 0 0 0 0 0 1 0", "0 0 0 0 1 0 1 0", "0 0 1 0 0 0 1 0",
    "1 0 0 0 1 1 1 0", "0 0 0 1 0 0 1 0", "0 0 0 1 1 0 1 0",
    "0 0 1 1 0 0 1 0", "0 0 0 0 1 1 1 0", "0 0 0 0 0 0 1 0"};

v_word word_from_row(const char* row) {
  std::vector<std::uint8_t> high_to_low;
  for (const char* p = row; *p; ++p)
    if (*p == '0' || *p == '1') high_to_low.push_back(*p == '1');
  std::vector<std::uint8_t> low_to_high(high_to_low.rbegin(),
                                        high_to_low.rend());
  return v_word::from_neuron_bits(low_to_high);
}

}  // namespace

TEST_SUITE("counter_seq") {

TEST_CASE("u_initial shape and value") {
  CHECK(to_pair_string(u_initial(3)) == "((0,0)(1,1)(1,1))");
  CHECK(to_pair_string(u_initial(4)) == "((0,0)(0,0)(1,1)(1,1))");
  CHECK(code_value(u_initial(5)) == 0);
  CHECK_THROWS_AS(u_initial(2), domain_error);
}

TEST_CASE("the whole width-3 chain matches the frozen terms") {
  bs_code code = u_initial(3);
  for (std::size_t j = 0; j < kWidth3Terms.size(); ++j) {
    CHECK(to_pair_string(code) == kWidth3Terms[j]);
    code = u_next(code);
  }
}

TEST_CASE("u_next frozen single steps") {
  CHECK(to_pair_string(u_next(parse_bs("((0,0)(1,0)(1,1))"))) ==
        "((1,0)(0,1)(1,0))");
  CHECK(to_pair_string(u_next(parse_bs("((1,1)(0,1)(1,0))"))) ==
        "((0,0)(1,1)(1,1))");
}

TEST_CASE("u_next applied 2^n times returns to the start") {
  bs_code code = u_initial(4);
  for (int i = 0; i < 16; ++i) code = u_next(code);
  CHECK(codes_identical(code, u_initial(4)));
}

TEST_CASE("u_term indexes the chain") {
  CHECK(to_pair_string(u_term(3, 6)) == "((0,1)(1,0)(1,1))");
  CHECK(codes_identical(u_term(3, 0), u_initial(3)));
  const std::int64_t v = code_value(u_term(4, 21));
  CHECK(((v % 16) + 16) % 16 == 5);
  CHECK_THROWS_AS(u_term(2, 0), domain_error);
}

TEST_CASE("value stays congruent to the step index") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const std::int64_t modulus = std::int64_t{1} << n;
    bs_code code = u_initial(n);
    for (std::int64_t j = 0; j < 2 * modulus; ++j) {
      const std::int64_t v = code_value(code);
      CHECK(((v % modulus) + modulus) % modulus == j % modulus);
      code = u_next(code);
    }
  }
}

TEST_CASE("first 2^n terms are pairwise distinct, term 2^n closes the loop") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const std::uint64_t span = std::uint64_t{1} << n;
    std::unordered_set<std::string> seen;
    bs_code code = u_initial(n);
    for (std::uint64_t i = 0; i < span; ++i) {
      seen.insert(code.packed());
      code = u_next(code);
    }
    CHECK(seen.size() == span);
    CHECK(codes_identical(code, u_initial(n)));
  }
}

TEST_CASE("width extension identity over full orbits") {
  for (std::size_t n = 3; n <= 5; ++n) {
    bs_code a = u_initial(n);
    bs_code b = u_next(a);
    bs_code c = u_initial(n + 1);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const bs_code next_wide = u_next(c);
      bs_code assembled(n + 1);
      assembled.set_digit(0, bs_digit(true, b.digit(0).minus()));
      for (std::size_t j = 1; j < n; ++j) assembled.set_digit(j, b.digit(j));
      assembled.set_digit(
          n, bs_digit(a.digit(n - 1).plus() && !a.digit(n - 1).minus(),
                      c.digit(n).plus() != c.digit(n).minus()));
      CHECK(codes_identical(assembled, next_wide));
      a = b;
      b = u_next(b);
      c = next_wide;
    }
  }
}

TEST_CASE("v_word neuron/component addressing") {
  v_word v(3);
  CHECK(v.neurons() == 8);
  v.set_c_prime(1, 1);
  CHECK(v.neuron(4) == 1);
  v.set_c_second(2, 1);
  CHECK(v.neuron(5) == 1);
  CHECK_THROWS_AS(v.neuron(0), dimension_error);
  CHECK_THROWS_AS(v.neuron(9), dimension_error);
  CHECK_THROWS_AS(v_word(2), domain_error);
}

TEST_CASE("v_from_u reproduces the golden rows") {
  bs_code code = u_initial(3);
  for (std::size_t t = 0; t < kWidth3Rows.size(); ++t) {
    CHECK(v_trace_line(v_from_u(code)) == kWidth3Rows[t]);
    code = u_next(code);
  }
}

TEST_CASE("v_successor walks the golden rows") {
  CHECK(v_successor(word_from_row(kWidth3Rows[0])) ==
        word_from_row(kWidth3Rows[1]));
  CHECK(v_successor(word_from_row(kWidth3Rows[6])) ==
        word_from_row(kWidth3Rows[7]));
  CHECK(v_successor(word_from_row(kWidth3Rows[7])) ==
        word_from_row(kWidth3Rows[0]));
}

TEST_CASE("v_successor rejects words outside its domain") {
  v_word blank(3);  // neuron 2 off
  CHECK_THROWS_AS(v_successor(blank), constraint_error);

  v_word bad_top(3);
  bad_top.set_c_prime(0, 1);
  bad_top.set_c_second(3, 1);  // constant-zero position forced on
  CHECK_THROWS_AS(v_successor(bad_top), constraint_error);

  v_word forbidden = word_from_row(kWidth3Rows[0]);
  forbidden.set_c_prime(1, 1);
  forbidden.set_c_second(0, 1);
  CHECK_THROWS_AS(v_successor(forbidden), constraint_error);
  CHECK_THROWS_AS(u_from_v(forbidden), constraint_error);
}

TEST_CASE("u_from_v decodes golden rows") {
  CHECK(codes_identical(u_from_v(word_from_row(kWidth3Rows[1])),
                        parse_bs("((0,0)(1,0)(1,1))")));
  CHECK(codes_identical(u_from_v(word_from_row(kWidth3Rows[0])),
                        parse_bs("((0,0)(0,0)(1,0))")));
}

TEST_CASE("encode/decode round trip advances the counter by one") {
  for (std::size_t n = 3; n <= 6; ++n) {
    bs_code code = u_initial(n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const bs_code next = u_next(code);
      CHECK(codes_identical(u_from_v(v_from_u(code)), next));
      code = next;
    }
  }
}

TEST_CASE("v_forbidden_ok on golden rows and a constructed violation") {
  for (const char* row : kWidth3Rows) CHECK(v_forbidden_ok(word_from_row(row)));

  v_word bad = word_from_row(kWidth3Rows[0]);
  bad.set_neuron(4, 1);
  bad.set_neuron(1, 1);
  CHECK_FALSE(v_forbidden_ok(bad));
}

TEST_CASE("v_forbidden_ok agrees with direct pair enumeration on raw words") {
  for (std::uint64_t raw = 0; raw < 256; ++raw) {
    std::vector<std::uint8_t> bits(8);
    for (std::size_t i = 0; i < 8; ++i) bits[i] = (raw >> i) & 1u;
    const v_word v = v_word::from_neuron_bits(bits);
    bool has_pair = false;
    for (std::size_t j = 1; j <= 3; ++j)
      if (v.neuron(2 * j + 2) == 1 && v.neuron(2 * (j - 1) + 1) == 1)
        has_pair = true;
    CHECK(v_forbidden_ok(v) == !has_pair);
  }
}

TEST_CASE("the successor relation equals the counter route on whole orbits") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const v_word start = v_from_u(u_initial(n));
    v_word v = start;
    bs_code u = u_initial(n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const v_word direct = v_successor(v);
      // Decoding already advances the counter index, so re-encoding the
      // decoded term is exactly one successor step.
      CHECK(direct == v_from_u(u_from_v(v)));
      // Same content as a commuting square with the counter step.
      u = u_next(u);
      CHECK(direct == v_from_u(u));
      v = direct;
    }
    CHECK(v == start);
  }
}

}  // TEST_SUITE
