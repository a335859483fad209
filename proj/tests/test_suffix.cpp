// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "lynbwt/suffix.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace lynbwt;
using lynbwt::testing::text_of;
using lynbwt::testing::values_of;
using Values = std::vector<std::int64_t>;

TEST_CASE_TEMPLATE("build_sa examples", I, std::int32_t, std::int64_t) {
    CHECK(values_of(build_sa<I>(text_of("banana"))) == Values{7, 6, 4, 2, 1, 5, 3});
    CHECK(values_of(build_sa<I>(text_of(""))) == Values{1});
    CHECK(values_of(build_sa<I>(text_of("ab"))) == oracle::suffix_array(std::string("ab\0", 3)));
    CHECK(values_of(build_sa<I>(text_of("ab"))) == Values{3, 1, 2});
    CHECK(values_of(build_sa<I>(text_of("banana"), SuffixSorter::naive)) == Values{7, 6, 4, 2, 1, 5, 3});
}

TEST_CASE("build_sa matches the sort oracle on every {a,b} string up to length 9") {
    for (const auto& s : oracle::all_strings("ab", 9)) {
        const auto expected = oracle::suffix_array(oracle::with_sentinel(s));
        REQUIRE(values_of(build_sa<std::int32_t>(text_of(s))) == expected);
    }
}

TEST_CASE("build_sa matches the sort oracle on random strings up to length 4096") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 120; ++round) {
        const int sigma = std::array{1, 2, 3, 4, 26, 255}[round % 6];
        const auto len = static_cast<std::size_t>(rng() % 4097);
        const auto s = oracle::random_string(rng, len, sigma);
        const auto t = text_of(s);
        const auto naive = build_sa<std::int32_t>(t, SuffixSorter::naive);
        REQUIRE(build_sa<std::int32_t>(t) == naive);
        if (len <= 400) REQUIRE(values_of(naive) == oracle::suffix_array(oracle::with_sentinel(s)));
    }
}

TEST_CASE("build_sa on highly repetitive inputs") {
    std::string fib_a = "a", fib_b = "ab";
    while (fib_b.size() < 3000) {
        auto next = fib_b + fib_a;
        fib_a = std::move(fib_b);
        fib_b = std::move(next);
    }
    for (const auto& s : {std::string(3000, 'a'), fib_b, std::string(1500, 'b') + std::string(1500, 'a')}) {
        const auto t = text_of(s);
        CHECK(build_sa<std::int64_t>(t) == build_sa<std::int64_t>(t, SuffixSorter::naive));
    }
}

TEST_CASE_TEMPLATE("invert_sa examples and errors", I, std::int32_t, std::int64_t) {
    CHECK(values_of(invert_sa(SuffixArray<I>{7, 6, 4, 2, 1, 5, 3})) == Values{5, 4, 7, 3, 6, 2, 1});
    CHECK(values_of(invert_sa(SuffixArray<I>{1})) == Values{1});
    CHECK(values_of(invert_sa(SuffixArray<I>{3, 1, 2})) == oracle::inverse({3, 1, 2}));
    CHECK(values_of(invert_sa(SuffixArray<I>{3, 1, 2})) == Values{2, 3, 1});
    CHECK_THROWS_AS((void)invert_sa(SuffixArray<I>{1, 1, 2}), Error);
    CHECK_THROWS_AS((void)invert_sa(SuffixArray<I>{0, 1, 2}), Error);
    CHECK_THROWS_AS((void)invert_sa(SuffixArray<I>{4, 1, 2}), Error);
    try {
        (void)invert_sa(SuffixArray<I>{2, 2});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::permutation_violation);
    }
}

TEST_CASE("SA and ISA are inverse permutations with the sentinel first") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        const auto t = text_of(oracle::random_string(rng, rng() % 500, 4));
        const auto sa = build_sa<std::int32_t>(t);
        const auto isa = invert_sa(sa);
        CHECK(sa.at(1) == static_cast<std::int32_t>(t.size()));
        CHECK(isa.at(t.size()) == 1);
        for (std::size_t i = 1; i <= t.size(); ++i) REQUIRE(isa.at(static_cast<std::size_t>(sa.at(i))) == i);
    }
}

TEST_CASE_TEMPLATE("compute_nsv examples", I, std::int32_t, std::int64_t) {
    const std::vector<I> isa{5, 4, 7, 3, 6, 2, 1};
    CHECK(values_of(compute_nsv<I>(isa)) == Values{2, 4, 4, 6, 6, 7, 8});
    CHECK(values_of(compute_nsv<I>(std::vector<I>{1})) == Values{2});
    CHECK(values_of(compute_nsv<I>(std::vector<I>{3, 2, 1})) == oracle::nsv({3, 2, 1}));
    CHECK(values_of(compute_nsv<I>(std::vector<I>{3, 2, 1})) == Values{2, 3, 4});
    // equal values do not stop the scan
    CHECK(values_of(compute_nsv<I>(std::vector<I>{2, 2, 1})) == Values{3, 3, 4});
}

TEST_CASE("compute_nsv equals the definitional scan on every array over {1,2,3} up to length 10") {
    for (const auto& s : oracle::all_strings("123", 10)) {
        std::vector<std::int32_t> a;
        Values wide;
        for (char c : s) {
            a.push_back(c - '0');
            wide.push_back(c - '0');
        }
        StackStats stats;
        REQUIRE(values_of(compute_nsv<std::int32_t>(a, &stats)) == oracle::nsv(wide));
        CHECK(stats.pushes == a.size());
        CHECK(stats.pops <= a.size());
    }
}

TEST_CASE("compute_nsv equals the definitional scan on random arrays") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 1000; ++round) {
        std::vector<std::int64_t> a(1 + rng() % 200);
        const auto range = 1 + rng() % 1000;
        for (auto& x : a) x = static_cast<std::int64_t>(1 + rng() % range);
        REQUIRE(values_of(compute_nsv<std::int64_t>(a)) == oracle::nsv(a));
    }
}

TEST_CASE_TEMPLATE("lyndon_from_nsv examples", I, std::int32_t, std::int64_t) {
    CHECK(values_of(lyndon_from_nsv<I>(text_of("banana"))) == Values{1, 2, 1, 2, 1, 1, 1});
    CHECK(values_of(lyndon_from_nsv<I>(text_of(""))) == Values{1});
    CHECK(values_of(lyndon_from_nsv<I>(text_of("ab"))) == oracle::lyndon_by_rotations(std::string("ab\0", 3)));
    CHECK(values_of(lyndon_from_nsv<I>(text_of("ab"))) == Values{2, 1, 1});
}
