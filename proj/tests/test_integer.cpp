#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "k3inv/integer.hpp"

using k3inv::Integer;

namespace {

// deterministic 64-bit generator, xorshift* flavour
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545f4914f6cdd1dull;
  }
  long long small() { return static_cast<long long>(next() % 2000001) - 1000000; }
};

Integer from_parts(Rng& rng, int parts) {
  Integer v = 0;
  for (int i = 0; i < parts; ++i) v = v * 1000000007ll + (rng.next() % 1000000007ull);
  if (rng.next() & 1) v = -v;
  return v;
}

}  // namespace

TEST_CASE("integer construction and decimal round trip") {
  CHECK(Integer().to_string() == "0");
  CHECK(Integer(-1).to_string() == "-1");
  CHECK(Integer(1234567890123456789ll).to_string() == "1234567890123456789");
  CHECK(Integer(std::numeric_limits<long long>::min()).to_string() ==
        "-9223372036854775808");
  CHECK(Integer("00012").to_int64() == 12);
  CHECK(Integer("-0").to_string() == "0");
  CHECK_THROWS_AS(Integer(""), std::invalid_argument);
  CHECK_THROWS_AS(Integer("12a"), std::invalid_argument);

  Rng rng;
  for (int i = 0; i < 200; ++i) {
    Integer v = from_parts(rng, 1 + static_cast<int>(rng.next() % 5));
    CHECK(Integer(v.to_string()) == v);
  }
}

TEST_CASE("integer arithmetic agrees with 64-bit arithmetic on small values") {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    long long a = rng.small();
    long long b = rng.small();
    CHECK((Integer(a) + Integer(b)).to_int64() == a + b);
    CHECK((Integer(a) - Integer(b)).to_int64() == a - b);
    CHECK((Integer(a) * Integer(b)).to_int64() == a * b);
    if (b != 0) {
      CHECK((Integer(a) / Integer(b)).to_int64() == a / b);
      CHECK((Integer(a) % Integer(b)).to_int64() == a % b);
    }
    CHECK((Integer(a) < Integer(b)) == (a < b));
    CHECK((Integer(a) == Integer(b)) == (a == b));
  }
}

TEST_CASE("division properties on large operands") {
  Rng rng;
  CHECK_THROWS_AS(Integer(5) / Integer(0), std::domain_error);
  for (int i = 0; i < 200; ++i) {
    Integer num = from_parts(rng, 1 + static_cast<int>(rng.next() % 6));
    Integer den = from_parts(rng, 1 + static_cast<int>(rng.next() % 3));
    if (den.is_zero()) continue;
    Integer q, r;
    Integer::div_mod(num, den, q, r);
    CHECK(q * den + r == num);
    Integer abs_r = r.is_negative() ? -r : r;
    Integer abs_den = den.is_negative() ? -den : den;
    CHECK(abs_r < abs_den);
    CHECK((r.is_zero() || r.is_negative() == num.is_negative()));
  }
}

TEST_CASE("known large values") {
  // 30! and a mid-range binomial computed once elsewhere and frozen
  Integer f = 1;
  for (int i = 2; i <= 30; ++i) f *= i;
  CHECK(f.to_string() == "265252859812191058636308480000000");
  CHECK_THROWS_AS(f.to_int64(), std::overflow_error);
  CHECK(f.divisible_by(Integer("10000000")));
  CHECK(f / Integer("265252859812191058636308480") == Integer("1000000"));
}

TEST_CASE("parity and sign helpers") {
  CHECK(Integer(0).is_even());
  CHECK(Integer(-7).sign() == -1);
  CHECK(Integer(7).sign() == 1);
  CHECK(Integer(0).sign() == 0);
  CHECK((-Integer(0)).to_string() == "0");
  CHECK(Integer(-4).is_even());
  CHECK(!Integer(-3).is_even());
}
