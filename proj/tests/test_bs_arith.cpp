#include "doctest.h"

#include <cstdint>
#include <vector>

#include "bsnet/bs_arith.hpp"

using namespace bsnet;

namespace {

// Every code of the given width, enumerated by its 2w raw bits.
std::vector<bs_code> all_codes(std::size_t width) {
  std::vector<bs_code> out;
  out.reserve(std::size_t{1} << (2 * width));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * width));
       ++bits) {
    bs_code code(width);
    for (std::size_t i = 0; i < width; ++i) {
      const std::uint64_t pair = (bits >> (2 * i)) & 3u;
      code.set_digit(i, bs_digit((pair & 1u) != 0, (pair & 2u) != 0));
    }
    out.push_back(std::move(code));
  }
  return out;
}

}  // namespace

TEST_SUITE("bs_arith") {

TEST_CASE("digit values cover {-1, 0, 1} with a redundant zero") {
  CHECK(bs_digit(false, false).value() == 0);
  CHECK(bs_digit(true, true).value() == 0);
  CHECK(bs_digit(true, false).value() == 1);
  CHECK(bs_digit(false, true).value() == -1);
  CHECK(bs_digit(true, true) != bs_digit(false, false));
}

TEST_CASE("code_value decodes positionally") {
  CHECK(code_value(bs_code(3)) == 0);
  CHECK(code_value(parse_bs("((1,0)(0,1)(1,0))")) == 3);
  CHECK(code_value(parse_bs("((0,0)(1,0)(1,1))")) == 2);
}

TEST_CASE("width limits are enforced") {
  CHECK_THROWS_AS(bs_code(0), domain_error);
  CHECK_THROWS_AS(bs_code(64), domain_error);
  CHECK_NOTHROW(bs_code(63));
  CHECK_THROWS_AS(bs_increment(bs_code(63)), domain_error);
}

TEST_CASE("codes_identical is positional, not value equality") {
  const bs_code zero1 = parse_bs("((0,0))");
  CHECK(codes_identical(zero1, zero1));

  const bs_code a = parse_bs("((1,1)(1,1))");
  const bs_code b = parse_bs("((0,0)(0,0))");
  CHECK(code_value(a) == code_value(b));
  CHECK_FALSE(codes_identical(a, b));

  CHECK_THROWS_AS(codes_identical(zero1, a), dimension_error);
}

TEST_CASE("codes_identical is an equivalence relation implying equal values") {
  const auto codes = all_codes(3);
  for (const bs_code& x : codes) CHECK(codes_identical(x, x));
  for (std::size_t i = 0; i < codes.size(); i += 7)
    for (std::size_t j = 0; j < codes.size(); j += 11) {
      const bool ij = codes_identical(codes[i], codes[j]);
      CHECK(ij == codes_identical(codes[j], codes[i]));
      if (ij) CHECK(code_value(codes[i]) == code_value(codes[j]));
    }
}

TEST_CASE("stage_one computes the two rails") {
  const stage_outputs zeros = stage_one(parse_bs("((1,1)(1,1))"));
  CHECK(zeros.d_prime == std::vector<std::uint8_t>{0, 0});
  CHECK(zeros.d_second == std::vector<std::uint8_t>{0, 0});

  const stage_outputs plus = stage_one(parse_bs("((1,0))"));
  CHECK(plus.d_prime == std::vector<std::uint8_t>{1});
  CHECK(plus.d_second == std::vector<std::uint8_t>{0});

  const stage_outputs mixed = stage_one(parse_bs("((0,1)(1,0))"));
  CHECK(mixed.d_prime == std::vector<std::uint8_t>{1, 0});
  CHECK(mixed.d_second == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("stage_one never yields (1,1) on any digit") {
  for (const bs_code& code : all_codes(2)) {
    const stage_outputs st = stage_one(code);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK_FALSE((st.d_prime[i] && st.d_second[i]));
  }
}

TEST_CASE("bs_increment frozen examples") {
  CHECK(to_pair_string(bs_increment(parse_bs("((0,0)(1,1)(1,1))"))) ==
        "((0,0)(0,0)(0,0)(1,0))");
  CHECK(to_pair_string(bs_increment(parse_bs("((0,0))"))) == "((0,0)(1,0))");
}

TEST_CASE("bs_increment adds one: exhaustive at width 4") {
  for (const bs_code& code : all_codes(4)) {
    const bs_code inc = bs_increment(code);
    CHECK(inc.width() == 5);
    CHECK(code_value(inc) == code_value(code) + 1);
  }
}

TEST_CASE("the staged route equals the direct increment") {
  for (const bs_code& code : all_codes(3))
    CHECK(codes_identical(bs_increment(code), stage_two(stage_one(code))));
}

TEST_CASE("flipping one input digit only moves output digits j and j+1") {
  std::size_t violations = 0;
  for (std::size_t width = 1; width <= 6; ++width) {
    for (const bs_code& code : all_codes(width)) {
      const bs_code base = bs_increment(code);
      for (std::size_t j = 0; j < width; ++j) {
        for (int raw = 0; raw < 4; ++raw) {
          bs_code variant = code;
          variant.set_digit(j, bs_digit((raw & 1) != 0, (raw & 2) != 0));
          const bs_code out = bs_increment(variant);
          for (std::size_t pos = 0; pos <= width; ++pos) {
            if (pos == j || pos == j + 1) continue;
            if (out.digit(pos) != base.digit(pos)) ++violations;
          }
        }
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("truncate drops the top digit only") {
  CHECK(to_pair_string(truncate(parse_bs("((1,0)(0,0))"))) == "((0,0))");
  CHECK(to_pair_string(truncate(parse_bs("((0,0)(0,0)(0,0)(1,0))"))) ==
        "((0,0)(0,0)(1,0))");
  CHECK(to_pair_string(truncate(parse_bs("((1,1)(0,1)(1,0))"))) ==
        "((0,1)(1,0))");
  CHECK_THROWS_AS(truncate(parse_bs("((1,0))")), domain_error);
}

TEST_CASE("pair text round-trips exactly") {
  for (const bs_code& code : all_codes(3)) {
    CHECK(codes_identical(parse_bs(to_pair_string(code)), code));
    CHECK(code_value(parse_bs(to_digit_string(code))) == code_value(code));
  }
}

TEST_CASE("digit text forms") {
  CHECK(to_digit_string(parse_bs("((1,0)(0,1)(1,0))")) == "1T1");
  const bs_code c = parse_bs("1T1");
  CHECK(code_value(c) == 3);
  CHECK(to_pair_string(c) == "((1,0)(0,1)(1,0))");
  CHECK(code_value(parse_bs(" 1 ")) == 1);
}

TEST_CASE("parser rejects malformed text") {
  CHECK_THROWS_AS(parse_bs(""), parse_error);
  CHECK_THROWS_AS(parse_bs("()"), parse_error);
  CHECK_THROWS_AS(parse_bs("((1,0)"), parse_error);
  CHECK_THROWS_AS(parse_bs("((2,0))"), parse_error);
  CHECK_THROWS_AS(parse_bs("10X"), parse_error);
  CHECK_THROWS_AS(parse_bs("((1,0)) extra"), parse_error);
}

}  // TEST_SUITE
