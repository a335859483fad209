// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. One line per criterion; exit status is nonzero if any
// criterion fails. Every tolerance is a named constant below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lynbwt/bench.hpp"
#include "lynbwt/bp.hpp"
#include "lynbwt/bwt.hpp"
#include "lynbwt/lyndon.hpp"
#include "lynbwt/suffix.hpp"
#include "oracles.hpp"

using namespace lynbwt;
using Values = std::vector<std::int64_t>;
using I = std::int32_t;

namespace {

// Time budgets, seconds.
constexpr double kGoldenBudget = 1.0;
constexpr double kEquivalenceBudget = 60.0;
constexpr double kRoundTripBudget = 30.0;
constexpr double kBpBudget = 60.0;

// Corpus shape.
constexpr std::size_t kExhaustiveMaxLen = 9;
constexpr int kRandomStrings = 1000;
constexpr std::size_t kRandomMaxLen = 4096;
constexpr int kSigmas[] = {1, 2, 4, 26, 255};
constexpr std::uint64_t kSeed = 20260101;

// Space accounting.
constexpr std::size_t kSpaceInput = std::size_t{16} << 20;
constexpr double kMaxPeakPerSymbol = 10.0;
constexpr double kExpectedWorkingPerSymbol = 4.0;  // 9n peak minus 5n for text and output
constexpr double kWorkingTolerance = 0.05;

// Scaling.
constexpr std::size_t kLinearSmall = std::size_t{1} << 20;
constexpr int kScalingRuns = 3;
constexpr double kMaxLinearRatio = 2.5;
constexpr std::size_t kQuadSmall = std::size_t{1} << 12;
constexpr std::size_t kQuadLarge = std::size_t{1} << 14;
constexpr double kMinQuadraticRatio = 8.0;

// Stack bound.
constexpr int kStackInputs = 100;
constexpr std::size_t kStackInputLen = std::size_t{1} << 16;
constexpr double kHighWaterFactor = 10.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class A>
Values values_of(const A& a) {
    return {a.begin(), a.end()};
}

Text text_of(const std::string& body) { return Text::from_string(body); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

// Shared corpus: every {a,b,c} string up to length 9, then random strings.
const std::vector<std::string>& corpus() {
    static const std::vector<std::string> strings = [] {
        auto out = oracle::all_strings("abc", kExhaustiveMaxLen);
        std::mt19937_64 rng(kSeed);
        for (int k = 0; k < kRandomStrings; ++k) {
            const int sigma = kSigmas[k % std::size(kSigmas)];
            out.push_back(oracle::random_string(rng, 1 + rng() % kRandomMaxLen, sigma));
        }
        return out;
    }();
    return strings;
}

std::string short_name(const std::string& s) {
    return s.size() <= 24 ? "\"" + s + "\"" : "random string of length " + std::to_string(s.size());
}

std::string timing_note(double elapsed, double budget) {
    std::ostringstream ss;
    ss.precision(2);
    ss << std::fixed << elapsed << " s, budget " << budget << " s";
    return ss.str();
}

Outcome golden_banana() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto t = text_of("banana");
    const auto sa = build_sa<I>(t);
    const auto isa = invert_sa(sa);
    const auto nsv = compute_nsv<I>(isa.values());
    const auto l = bwt_from_sa(t, sa);
    const auto lf = lf_array<I>(l, count_array(l));
    const auto decoded = bwt_lyndon<I>(l, lf);
    const auto lambda_sa = lyndon_sa_permuted(decoded.lambda, sa);
    const double elapsed = seconds_since(t0);

    o.require(values_of(sa) == Values{7, 6, 4, 2, 1, 5, 3}, "SA");
    o.require(values_of(isa) == Values{5, 4, 7, 3, 6, 2, 1}, "ISA");
    o.require(values_of(nsv) == Values{2, 4, 4, 6, 6, 7, 8}, "NSV_ISA");
    o.require(values_of(lf) == Values{2, 6, 7, 5, 1, 3, 4}, "LF");
    o.require(l.to_display() == "annb$aa", "L");
    o.require(decoded.text.to_display() == "banana$", "decoded text");
    o.require(values_of(decoded.lambda) == Values{1, 2, 1, 2, 1, 1, 1}, "lambda");
    o.require(values_of(lambda_sa) == Values{1, 1, 2, 2, 1, 1, 1}, "lambda_SA");
    o.require(elapsed < kGoldenBudget, "too slow: " + timing_note(elapsed, kGoldenBudget));
    if (o.pass) o.detail = "all seven arrays exact, " + timing_note(elapsed, kGoldenBudget);
    return o;
}

Outcome three_routes() {
    Outcome o;
    const auto t0 = Clock::now();
    for (const auto& s : corpus()) {
        const auto t = text_of(s);
        const auto l = bwt_from_sa(t, build_sa<I>(t));
        const auto lambda = bwt_lyndon<I>(l, lf_array<I>(l, count_array(l))).lambda;
        o.require(lambda == lyndon_from_nsv<I>(t), "bwt and nsv routes differ on " + short_name(s));
        o.require(lambda == oracle_lyndon<I>(t), "bwt and oracle routes differ on " + short_name(s));
        if (!o.pass) return o;
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < kEquivalenceBudget, "too slow: " + timing_note(elapsed, kEquivalenceBudget));
    if (o.pass) o.detail = std::to_string(corpus().size()) + " texts, " + timing_note(elapsed, kEquivalenceBudget);
    return o;
}

Outcome round_trip() {
    Outcome o;
    const auto t0 = Clock::now();
    for (const auto& s : corpus()) {
        const auto t = text_of(s);
        const auto l = bwt_from_sa(t, build_sa<I>(t));
        o.require(invert_bwt<I>(l, lf_array<I>(l, count_array(l))) == t, "round trip fails on " + short_name(s));
        if (!o.pass) return o;
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < kRoundTripBudget, "too slow: " + timing_note(elapsed, kRoundTripBudget));
    if (o.pass) o.detail = std::to_string(corpus().size()) + " texts, " + timing_note(elapsed, kRoundTripBudget);
    return o;
}

Outcome bp_correctness() {
    Outcome o;
    const auto t0 = Clock::now();
    for (const auto& s : corpus()) {
        const auto t = text_of(s);
        const auto l = bwt_from_sa(t, build_sa<I>(t));
        const auto pairs = bp_from_bwt<I>(l, StackMode::pairs);
        const auto bitstack = bp_from_bwt<I>(l, StackMode::bitstack);
        o.require(pairs == bitstack, "stack modes disagree on " + short_name(s));
        o.require(pairs.is_balanced(), "unbalanced BP for " + short_name(s));
        o.require(pairs.opens() == t.size() && pairs.size() == 2 * t.size(), "open count wrong for " + short_name(s));
        if (!o.pass) return o;
        const auto lambda = lyndon_from_nsv<I>(t);
        const auto index = build_bp_index(pairs);
        for (std::size_t i = 1; i <= t.size(); ++i) {
            if (static_cast<std::int64_t>(index.lambda_at(i)) != lambda.at(i)) {
                o.require(false, "lambda_at(" + std::to_string(i) + ") wrong for " + short_name(s));
                return o;
            }
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < kBpBudget, "too slow: " + timing_note(elapsed, kBpBudget));
    if (o.pass) o.detail = std::to_string(corpus().size()) + " texts, " + timing_note(elapsed, kBpBudget);
    return o;
}

Outcome psi_stream() {
    Outcome o;
    for (const auto& s : corpus()) {
        const auto t = text_of(s);
        const auto sa = build_sa<I>(t);
        const auto isa = invert_sa(sa);
        const auto l = bwt_from_sa(t, sa);
        const auto lf = lf_array<I>(l, count_array(l));
        const PsiView<I> psi(l);
        o.require(collect_isa(psi) == isa, "ISA stream differs on " + short_name(s));
        o.require(psi.psi_at(1) == isa.at(1), "Psi(1) != ISA[1] on " + short_name(s));
        for (std::size_t i = 2; i <= t.size() && o.pass; ++i) {
            o.require(static_cast<std::size_t>(lf.at(static_cast<std::size_t>(psi.psi_at(i)))) == i,
                      "LF[Psi(" + std::to_string(i) + ")] != i on " + short_name(s));
        }
        if (!o.pass) return o;
    }
    o.detail = std::to_string(corpus().size()) + " texts, stream and LF inverse exact";
    return o;
}

Outcome space_accounting() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 6);
    auto body = oracle::random_string(rng, kSpaceInput, 255);
    auto text = text_of(body);
    body = std::string();
    const auto run = run_lyndon<I>(std::move(text), Algo::bwt, "random-16MiB");
    const auto& r = run.report;
    const double n = static_cast<double>(r.n);
    const double per_symbol = r.peak_bytes_per_symbol();
    const double working_per_symbol = static_cast<double>(r.working_bytes) / n;
    const auto accounted = static_cast<std::int64_t>(r.peak_bytes) - 5 * static_cast<std::int64_t>(r.n);
    const double deviation = std::abs(working_per_symbol - kExpectedWorkingPerSymbol) / kExpectedWorkingPerSymbol;

    std::ostringstream ss;
    ss.precision(3);
    ss << std::fixed << "n=" << r.n << ", peak " << per_symbol << " B/n (max " << kMaxPeakPerSymbol
       << "), working " << working_per_symbol << " B/n (expected " << kExpectedWorkingPerSymbol << " +/- "
       << kWorkingTolerance * 100 << "%)";
    o.require(r.n >= kSpaceInput, "input smaller than 16 MiB");
    o.require(per_symbol <= kMaxPeakPerSymbol, "peak too high: " + ss.str());
    o.require(r.working_bytes == accounted, "working space is not peak - 5n: " + ss.str());
    o.require(deviation <= kWorkingTolerance, "working space off: " + ss.str());
    if (o.pass) o.detail = ss.str();
    return o;
}

template <class F>
double median_seconds(F&& f) {
    std::vector<double> t;
    for (int k = 0; k < kScalingRuns; ++k) t.push_back(f());
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

Outcome scaling() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 7);
    const auto large = oracle::random_string(rng, 2 * kLinearSmall, 255);
    const auto small = large.substr(0, kLinearSmall);
    std::ostringstream ss;
    ss.precision(2);
    ss << std::fixed;
    for (const auto algo : {Algo::bwt, Algo::nsv}) {
        auto time_of = [&](const std::string& body) {
            return median_seconds([&] { return run_lyndon<I>(text_of(body), algo).report.total_seconds; });
        };
        const double a = time_of(small);
        const double b = time_of(large);
        const double ratio = b / a;
        ss << to_string(algo) << " x" << ratio << " (max " << kMaxLinearRatio << "), ";
        o.require(ratio <= kMaxLinearRatio, std::string(to_string(algo)) + " grows too fast");
    }
    auto oracle_time = [&](std::size_t n) {
        const std::string unary(n, 'a');
        return median_seconds([&] { return run_lyndon<I>(text_of(unary), Algo::oracle).report.total_seconds; });
    };
    const double q = oracle_time(kQuadLarge) / oracle_time(kQuadSmall);
    ss << "oracle on unary x" << q << " (min " << kMinQuadraticRatio << ")";
    o.require(q >= kMinQuadraticRatio, "oracle grows too slowly");
    o.detail = o.pass ? ss.str() : o.detail + ": " + ss.str();
    return o;
}

Outcome stack_bound() {
    Outcome o;
    std::uint64_t runs = 0;
    auto check_ops = [&](const Text& t) {
        const auto l = bwt_from_sa(t, build_sa<I>(t));
        StackStats stats;
        (void)bwt_lyndon<I>(l, lf_array<I>(l, count_array(l)), &stats);
        o.require(stats.pushes == t.size() - 1, "push count != n - 1");
        o.require(stats.pushes + stats.pops <= 2 * t.size(), "more than 2n stack operations");
        ++runs;
        return stats.high_water;
    };
    for (const auto& s : corpus()) {
        check_ops(text_of(s));
        if (!o.pass) return o;
    }
    std::mt19937_64 rng(kSeed + 8);
    double total_high_water = 0;
    for (int k = 0; k < kStackInputs; ++k) {
        total_high_water += static_cast<double>(check_ops(text_of(oracle::random_string(rng, kStackInputLen, 255))));
        if (!o.pass) return o;
    }
    const double mean = total_high_water / kStackInputs;
    const double bound = kHighWaterFactor * std::sqrt(static_cast<double>(kStackInputLen));
    std::ostringstream ss;
    ss.precision(1);
    ss << std::fixed << runs << " runs with exact op counts, mean high water " << mean << " (max " << bound << ")";
    o.require(mean <= bound, "high water too large: " + ss.str());
    if (o.pass) o.detail = ss.str();
    return o;
}

struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"AC1", "golden banana$ pipeline", golden_banana},
        {"AC2", "three-route equivalence", three_routes},
        {"AC3", "BWT round trip", round_trip},
        {"AC4", "BP correctness", bp_correctness},
        {"AC5", "Psi/ISA streaming", psi_stream},
        {"AC6", "space accounting", space_accounting},
        {"AC7", "scaling", scaling},
        {"AC8", "stack bound", stack_bound},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
