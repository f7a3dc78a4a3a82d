#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "plsec/rng.hpp"

using Catch::Matchers::WithinAbs;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    // zero counter, zero key
    CHECK(plsec::philox::block(0, 0, 0) ==
          std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu,
                                       0x9b00dbd8u});
    // all-ones counter and key
    const std::uint64_t ff = 0xffffffffffffffffull;
    CHECK(plsec::philox::block(ff, ff, ff) ==
          std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u,
                                       0x6d5451fdu});
    // pi-digit counter/key
    const std::uint64_t index = 0x243f6a88ull | (0x85a308d3ull << 32);
    const std::uint64_t stream = 0x13198a2eull | (0x03707344ull << 32);
    const std::uint64_t seed = 0xa4093822ull | (0x299f31d0ull << 32);
    CHECK(plsec::philox::block(seed, stream, index) ==
          std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u,
                                       0x24126ea1u});
}

TEST_CASE("streams are deterministic and distinct") {
    plsec::rng_stream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    bool all_equal_c = true, all_equal_d = true;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
        all_equal_c = all_equal_c && (va == c.next_u64());
        all_equal_d = all_equal_d && (va == d.next_u64());
    }
    CHECK_FALSE(all_equal_c);
    CHECK_FALSE(all_equal_d);
}

TEST_CASE("uniform01 lies in (0, 1] and is unbiased") {
    plsec::rng_stream rng(123, 0);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK_THAT(mean, WithinAbs(0.5, 5.0 * std::sqrt(1.0 / 12.0 / n)));
    CHECK_THAT(var, WithinAbs(1.0 / 12.0, 5e-4));
}

TEST_CASE("exponential sampler moments") {
    plsec::rng_stream rng(9, 1);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.exponential();
        REQUIRE(x >= 0.0);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    CHECK_THAT(mean, WithinAbs(1.0, 5.0 / std::sqrt(double(n))));
    CHECK_THAT(sum2 / n - mean * mean, WithinAbs(1.0, 0.03));
}

TEST_CASE("normal sampler moments") {
    plsec::rng_stream rng(77, 3);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0, sum3 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sum2 += x * x;
        sum3 += x * x * x;
    }
    CHECK_THAT(sum / n, WithinAbs(0.0, 5.0 / std::sqrt(double(n))));
    CHECK_THAT(sum2 / n, WithinAbs(1.0, 0.02));
    CHECK_THAT(sum3 / n, WithinAbs(0.0, 0.05));
}

TEST_CASE("gamma sampler moments for shape above and below one") {
    for (double shape : {0.4, 1.0, 2.5, 9.0}) {
        plsec::rng_stream rng(5, static_cast<std::uint64_t>(shape * 100));
        const int n = 200000;
        double sum = 0.0, sum2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = rng.gamma(shape);
            REQUIRE(x > 0.0);
            sum += x;
            sum2 += x * x;
        }
        const double mean = sum / n;
        const double var = sum2 / n - mean * mean;
        const double se_mean = std::sqrt(shape / n);
        CHECK_THAT(mean, WithinAbs(shape, 6.0 * se_mean));
        CHECK_THAT(var, WithinAbs(shape, 0.1 * shape + 6.0 * se_mean));
    }
}

TEST_CASE("u64 output composes two consecutive u32 words") {
    plsec::rng_stream a(2024, 5), b(2024, 5);
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t lo = a.next_u32();
        const std::uint64_t hi = a.next_u32();
        CHECK(b.next_u64() == (lo | (hi << 32)));
    }
}
