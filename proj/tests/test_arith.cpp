#include <doctest.h>

#include <random>

#include "quadchow/arith.hpp"

using namespace quadchow;

namespace {

// Falling-factorial oracle, independent of the reflection path.
BigInt binom_product(long a, long k)
{
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= (a - i);
        den *= (i + 1);
    }
    return num / den;
}

}  // namespace

TEST_CASE("binom_exact examples")
{
    CHECK(binom_exact(13, 5) == 1287);
    CHECK(mod_floor(binom_exact(13, 5), 2) == 1);
    for (int k = -7; k <= 40; ++k)
        CHECK(binom_exact(k, 0) == 1);
    CHECK(binom_exact(-9, 3) == -165);
    CHECK(binom_product(-9, 3) == -165);
    CHECK(binom_exact(3, 5) == 0);
    CHECK_THROWS_AS(binom_exact(4, -1), std::invalid_argument);
}

TEST_CASE("binom_exact agrees with the product oracle")
{
    for (long a = -40; a <= 40; ++a)
        for (long k = 0; k <= 25; ++k)
            CHECK(binom_exact(a, k) == binom_product(a, k));
}

TEST_CASE("binom_exact exceeds 64 bits")
{
    CHECK(binom_exact(200, 100) == binom_product(200, 100));
    CHECK(binom_exact(200, 100) > BigInt("18446744073709551616"));
}

TEST_CASE("binom_mod2 examples")
{
    CHECK_FALSE(binom_mod2(5, 2));
    for (int t = 0; t <= 6; ++t) {
        const int d = (1 << t) - 1;
        for (int i = 0; i <= d; ++i)
            CHECK(binom_mod2(d, i));
    }
    CHECK(binom_mod2(-5, 1));
}

TEST_CASE("Lucas rule matches exact parity")
{
    for (long a = 0; a <= 64; ++a)
        for (long k = 0; k <= 64; ++k)
            CHECK(binom_mod2(a, k) == (mod_floor(binom_exact(a, k), 2) == 1));
    for (long a = -64; a < 0; ++a)
        for (long k = 0; k <= 64; ++k)
            CHECK(binom_mod2(a, k) == (mod_floor(binom_exact(a, k), 2) == 1));
}

TEST_CASE("Pascal recurrence and reflection")
{
    for (long a = -30; a <= 30; ++a)
        for (long k = 1; k <= 20; ++k)
            CHECK(binom_exact(a, k) == binom_exact(a - 1, k) + binom_exact(a - 1, k - 1));
    for (long a = 1; a <= 30; ++a)
        for (long k = 0; k <= 20; ++k) {
            const BigInt sign = (k % 2 == 0) ? 1 : -1;
            CHECK(binom_exact(-a, k) == sign * binom_exact(a + k - 1, k));
        }
}

TEST_CASE("series_mul examples")
{
    const TruncatedSeries one_plus_h(2, {1, 1}), one_minus_h(2, {1, -1});
    CHECK(series_mul(one_plus_h, one_minus_h) == TruncatedSeries(2, {1, 0, -1}));
    const TruncatedSeries lin(1, {1, 1});
    CHECK(series_mul(lin, lin) == TruncatedSeries(1, {1, 2}));
    CHECK(series_mul(TruncatedSeries(2, {1, 2}), TruncatedSeries(2, {1, -5, 15})) == TruncatedSeries(2, {1, -3, 5}));
    CHECK_THROWS_AS(series_mul(TruncatedSeries(1), TruncatedSeries(2)), std::invalid_argument);
}

TEST_CASE("series_inverse examples")
{
    CHECK(series_inverse(TruncatedSeries::one(4)).is_one());
    CHECK(series_inverse(TruncatedSeries(3, {1, 1})) == TruncatedSeries(3, {1, -1, 1, -1}));
    const auto inv = series_inverse(TruncatedSeries::binomial_power(2, 1, 5));
    CHECK(inv == TruncatedSeries(2, {1, -5, 15}));
    for (int i = 0; i <= 2; ++i)
        CHECK(inv[i] == binom_exact(-5, i));
    CHECK_THROWS_AS(series_inverse(TruncatedSeries(2, {2, 1})), std::domain_error);
    CHECK_THROWS_AS(series_inverse(TruncatedSeries(2, {0, 1})), std::domain_error);
}

TEST_CASE("series times its inverse is one")
{
    std::mt19937 gen(20261018);
    std::uniform_int_distribution<int> bound_dist(0, 16), coeff_dist(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        const int bound = bound_dist(gen);
        TruncatedSeries s(bound);
        s[0] = 1;
        for (int i = 1; i <= bound; ++i)
            s[i] = coeff_dist(gen);
        CHECK(series_mul(s, series_inverse(s)).is_one());
    }
}
