// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/bench.hpp"

#include <chrono>

#include <json.hpp>

#include "lynbwt/bwt.hpp"
#include "lynbwt/lyndon.hpp"
#include "lynbwt/suffix.hpp"

namespace lynbwt {

namespace {

class Stopwatch {
  public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const std::chrono::duration<double> d = now - last_;
        last_ = now;
        return d.count();
    }

  private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string_view to_string(Algo algo) noexcept {
    switch (algo) {
        case Algo::bwt: return "bwt";
        case Algo::nsv: return "nsv";
        case Algo::oracle: return "oracle";
    }
    return "unknown";
}

std::optional<Algo> parse_algo(std::string_view name) noexcept {
    if (name == "bwt") return Algo::bwt;
    if (name == "nsv") return Algo::nsv;
    if (name == "oracle") return Algo::oracle;
    return std::nullopt;
}

std::string BenchReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "bench-v1";
    j["dataset"] = dataset;
    j["algo"] = to_string(algo);
    j["n"] = n;
    j["sigma"] = sigma;
    j["width"] = static_cast<int>(width);
    j["repetitions"] = repetitions;
    auto steps_json = nlohmann::ordered_json::array();
    for (const auto& s : steps) steps_json.push_back({{"name", s.name}, {"seconds", s.seconds}});
    j["steps"] = steps_json;
    j["total_seconds"] = total_seconds;
    j["peak_bytes"] = peak_bytes;
    j["peak_bytes_per_symbol"] = peak_bytes_per_symbol();
    j["working_bytes"] = working_bytes;
    j["stack"] = {{"high_water", stack_high_water},
                  {"bytes", stack_bytes},
                  {"pushes", stack_pushes},
                  {"pops", stack_pops}};
    return j.dump();
}

template <IndexType I>
LyndonRun<I> run_lyndon(Text text, Algo algo, std::string dataset) {
    BenchReport report;
    report.dataset = std::move(dataset);
    report.algo = algo;
    report.n = text.size();
    report.sigma = text.sigma();
    report.width = sizeof(I) == 4 ? Width::w32 : Width::w64;

    const memory::PeakWindow window(memory::current_bytes() - text.size());
    StackStats stack;
    LyndonArray<I> lambda;
    Stopwatch clock;

    switch (algo) {
        case Algo::bwt: {
            auto sa = build_sa<I>(text);
            report.steps.push_back({"SA", clock.lap()});
            auto l = bwt_from_sa(text, sa);
            { [[maybe_unused]] auto drop = std::move(text).release(); }
            report.steps.push_back({"BWT", clock.lap()});
            const auto c = count_array(l);
            const auto lf = lf_array<I>(l, c);
            report.steps.push_back({"LF", clock.lap()});
            auto buffer = std::move(l).release();
            lambda = bwt_lyndon_inplace<I>(buffer, c, lf.values(), std::move(sa).release(), &stack);
            report.steps.push_back({"lambda", clock.lap()});
            break;
        }
        case Algo::nsv: {
            auto isa_storage = [&] {
                const auto sa = build_sa<I>(text);
                report.steps.push_back({"SA", clock.lap()});
                return invert_sa(sa).release();
            }();
            { [[maybe_unused]] auto drop = std::move(text).release(); }
            report.steps.push_back({"ISA", clock.lap()});
            compute_nsv_inplace<I>(isa_storage, &stack);
            report.steps.push_back({"NSV", clock.lap()});
            for (std::size_t k = 0; k < isa_storage.size(); ++k) isa_storage[k] -= static_cast<I>(k + 1);
            lambda = LyndonArray<I>(std::move(isa_storage));
            report.steps.push_back({"lambda", clock.lap()});
            break;
        }
        case Algo::oracle: {
            lambda = oracle_lyndon<I>(text);
            report.steps.push_back({"lambda", clock.lap()});
            break;
        }
    }

    for (const auto& s : report.steps) report.total_seconds += s.seconds;
    report.peak_bytes = window.peak();
    report.working_bytes = static_cast<std::int64_t>(report.peak_bytes) -
                           static_cast<std::int64_t>(report.n * (1 + sizeof(I)));
    report.stack_high_water = stack.high_water;
    report.stack_bytes = stack.high_water * stack.entry_bytes;
    report.stack_pushes = stack.pushes;
    report.stack_pops = stack.pops;
    return {std::move(lambda), std::move(report)};
}

template LyndonRun<std::int32_t> run_lyndon<std::int32_t>(Text, Algo, std::string);
template LyndonRun<std::int64_t> run_lyndon<std::int64_t>(Text, Algo, std::string);

}  // namespace lynbwt
