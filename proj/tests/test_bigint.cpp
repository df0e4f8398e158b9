#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strdist/bigint.hpp"

using strdist::BigUint;

TEST_CASE("construction and decimal round trip") {
    CHECK(BigUint(0).to_decimal() == "0");
    CHECK(BigUint(1).to_decimal() == "1");
    CHECK(BigUint(4294967295ull).to_decimal() == "4294967295");
    CHECK(BigUint(UINT64_MAX).to_decimal() == "18446744073709551615");
    CHECK(BigUint::from_decimal("0") == BigUint(0));
    CHECK(BigUint::from_decimal("123456789012345678901234567890").to_decimal() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(BigUint::from_decimal("12x"), std::invalid_argument);
    CHECK_THROWS_AS(BigUint::from_decimal(""), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    BigUint a(123456789), b(987654321);
    CHECK((a + b).to_decimal() == "1111111110");
    CHECK((b - a).to_decimal() == "864197532");
    CHECK((a * b).to_decimal() == "121932631112635269");
    CHECK_THROWS_AS(a - b, std::underflow_error);

    // carries across limbs
    BigUint big = BigUint::from_decimal("340282366920938463463374607431768211455");  // 2^128-1
    CHECK((big + BigUint(1)).to_decimal() == "340282366920938463463374607431768211456");
    CHECK((big + BigUint(1) - BigUint(1)) == big);
}

TEST_CASE("comparison orders by value") {
    CHECK(BigUint(2) < BigUint(10));
    CHECK(BigUint::from_decimal("18446744073709551616") > BigUint(UINT64_MAX));
    CHECK(BigUint(5) <= BigUint(5));
    CHECK(BigUint(0) < BigUint(1));
}

TEST_CASE("pow and divmod") {
    CHECK(BigUint::pow(BigUint(2), 10).to_decimal() == "1024");
    CHECK(BigUint::pow(BigUint(3), 0).to_decimal() == "1");
    CHECK(BigUint::pow(BigUint(2), 100).to_decimal() == "1267650600228229401496703205376");

    auto [q, r] = BigUint::divmod(BigUint(100), BigUint(7));
    CHECK(q == BigUint(14));
    CHECK(r == BigUint(2));
    auto [q2, r2] = BigUint::divmod(BigUint::pow(BigUint(10), 30), BigUint(999));
    CHECK((q2 * BigUint(999) + r2) == BigUint::pow(BigUint(10), 30));
    CHECK_THROWS_AS(BigUint::divmod(BigUint(1), BigUint(0)), std::domain_error);
    CHECK((BigUint(5) / BigUint(10)) == BigUint(0));
}

TEST_CASE("u64 saturation") {
    CHECK(BigUint(42).to_u64_saturating() == 42);
    CHECK(BigUint::from_decimal("18446744073709551616").to_u64_saturating() == UINT64_MAX);
    CHECK(BigUint(UINT64_MAX).fits_u64());
}

TEST_CASE("random add/sub/mul agree with 64-bit arithmetic") {
    uint64_t state = 42;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int i = 0; i < 2000; ++i) {
        uint64_t x = next() % (1ull << 31), y = next() % (1ull << 31);
        CHECK((BigUint(x) + BigUint(y)).to_u64_saturating() == x + y);
        CHECK((BigUint(x) * BigUint(y)).to_u64_saturating() == x * y);
        if (x >= y) CHECK((BigUint(x) - BigUint(y)).to_u64_saturating() == x - y);
        if (y != 0) {
            auto [q, r] = BigUint::divmod(BigUint(x), BigUint(y));
            CHECK(q.to_u64_saturating() == x / y);
            CHECK(r.to_u64_saturating() == x % y);
        }
    }
}
