#include <doctest.h>

#include "fwcodes/bigint.hpp"
#include "fwcodes/errors.hpp"

using fwcodes::BigInt;

TEST_CASE("bigint arithmetic agrees with native on word-sized values") {
    // Deterministic pseudo-random pairs, checked against __int128.
    uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int64_t>(state >> 17) - (1ll << 46);
    };
    for (int i = 0; i < 500; ++i) {
        int64_t a = next(), b = next();
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        __int128 prod = static_cast<__int128>(a) * b;
        BigInt expected = BigInt(static_cast<long long>(prod >> 64)) * BigInt::pow(BigInt(2), 64) +
                          BigInt(static_cast<unsigned long long>(static_cast<unsigned __int128>(prod)));
        CHECK(BigInt(a) * BigInt(b) == expected);
        CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
    }
}

TEST_CASE("bigint decimal round trip and carries") {
    BigInt big = BigInt::pow(BigInt(10), 40) - BigInt(1);
    CHECK(big.to_string() == std::string(40, '9'));
    CHECK(BigInt::from_string(big.to_string()) == big);
    CHECK((big + BigInt(1)).to_string() == "1" + std::string(40, '0'));
    CHECK(BigInt::from_string("-123").to_string() == "-123");
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("bigint division by machine words") {
    BigInt v = BigInt::pow(BigInt(3), 50);  // odd, not divisible by 2
    auto [q, r] = v.divmod(2);
    CHECK(r == 1);
    CHECK(q * BigInt(2) + BigInt(1) == v);
    CHECK(v.div_exact(3) == BigInt::pow(BigInt(3), 49));
    CHECK_THROWS_AS(v.div_exact(2), fwcodes::NonIntegralDivisionError);
    CHECK(BigInt(7).ceil_div(2) == BigInt(4));
    CHECK(BigInt(8).ceil_div(2) == BigInt(4));
    CHECK(BigInt(0).ceil_div(5) == BigInt(0));
}

TEST_CASE("bigint u64 conversions") {
    CHECK(BigInt(42).fits_u64());
    CHECK(BigInt(42).as_u64() == 42);
    CHECK_FALSE(BigInt(-1).fits_u64());
    CHECK_FALSE(BigInt::pow(BigInt(2), 64).fits_u64());
    CHECK(BigInt::pow(BigInt(2), 63).as_u64() == (1ull << 63));
}
