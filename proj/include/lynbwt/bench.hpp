// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lynbwt/arrays.hpp"
#include "lynbwt/text.hpp"

namespace lynbwt {

enum class Algo { bwt, nsv, oracle };

std::string_view to_string(Algo algo) noexcept;
std::optional<Algo> parse_algo(std::string_view name) noexcept;

struct StepTiming {
    std::string name;
    double seconds = 0;
};

/// One measured Lyndon array construction. Memory figures come from the
/// counting allocator: peak includes the text and the output array, working
/// space excludes both.
struct BenchReport {
    std::string dataset;
    Algo algo = Algo::bwt;
    std::size_t n = 0;
    int sigma = 0;
    Width width = Width::w32;
    int repetitions = 1;
    std::vector<StepTiming> steps;
    double total_seconds = 0;
    std::size_t peak_bytes = 0;
    std::int64_t working_bytes = 0;
    std::uint64_t stack_high_water = 0;
    std::size_t stack_bytes = 0;
    std::uint64_t stack_pushes = 0;
    std::uint64_t stack_pops = 0;

    [[nodiscard]] double peak_bytes_per_symbol() const noexcept {
        return n ? static_cast<double>(peak_bytes) / static_cast<double>(n) : 0.0;
    }
    // Single-line JSON object, schema "bench-v1".
    [[nodiscard]] std::string to_json() const;
};

template <IndexType I>
struct LyndonRun {
    LyndonArray<I> lambda;
    BenchReport report;
};

/// Runs one route end to end, consuming the text so the pipeline can free it
/// as soon as it is no longer needed:
///   bwt:    SA, L = BWT (text freed), LF, lambda during inversion (in SA's storage)
///   nsv:    SA, ISA (SA and text freed), NSV in place, lambda = NSV - i in place
///   oracle: lambda by direct suffix comparison
template <IndexType I>
LyndonRun<I> run_lyndon(Text text, Algo algo, std::string dataset = {});

}  // namespace lynbwt
