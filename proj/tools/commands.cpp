// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <new>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "lynbwt/array_io.hpp"
#include "lynbwt/bench.hpp"
#include "lynbwt/bp.hpp"
#include "lynbwt/bwt.hpp"
#include "lynbwt/error.hpp"
#include "lynbwt/lyndon.hpp"
#include "lynbwt/suffix.hpp"
#include "lynbwt/text.hpp"

namespace lynbwt::cli {
namespace {

namespace fs = std::filesystem;

// Oracle runs above this many symbols are skipped by `bench`.
constexpr std::size_t kOracleBenchLimit = std::size_t{1} << 20;
constexpr int kUnaryMinExp = 12;
constexpr int kUnaryMaxExp = 16;

template <class F>
decltype(auto) with_width(int width, F&& f) {
    if (width == 64) return f(std::type_identity<std::int64_t>{});
    return f(std::type_identity<std::int32_t>{});
}

SentinelPolicy parse_policy(const std::string& s) {
    return s == "verify" ? SentinelPolicy::verify : SentinelPolicy::append;
}

StackMode parse_mode(const std::string& s) { return s == "bitstack" ? StackMode::bitstack : StackMode::pairs; }

std::string default_out(const std::string& input, const char* ext) { return input + ext; }

// ---------------------------------------------------------------- lyndon

struct LyndonOptions {
    std::string input;
    std::string out;
    std::string algo = "bwt";
    std::string sentinel = "append";
    int width = 32;
    bool report = false;
};

int cmd_lyndon(const LyndonOptions& o) {
    auto text = load_text(o.input, parse_policy(o.sentinel));
    const auto algo = *parse_algo(o.algo);
    const auto out = o.out.empty() ? default_out(o.input, ".lyn") : o.out;
    const auto name = fs::path(o.input).filename().string();
    with_width(o.width, [&]<class I>(std::type_identity<I>) {
        auto run = run_lyndon<I>(std::move(text), algo, name);
        write_array(out, IntArray::from(run.lambda));
        if (o.report) std::cout << run.report.to_json() << '\n';
    });
    return kExitOk;
}

// ---------------------------------------------------------------- bwt / unbwt

struct BwtOptions {
    std::string input;
    std::string out;
    std::string sentinel = "append";
    int width = 32;
    bool strip = false;
};

int cmd_bwt(const BwtOptions& o) {
    const auto text = load_text(o.input, parse_policy(o.sentinel));
    const auto l = with_width(o.width, [&]<class I>(std::type_identity<I>) {
        return bwt_from_sa(text, build_sa<I>(text));
    });
    write_file(o.out.empty() ? default_out(o.input, ".bwt") : o.out, l.symbols());
    return kExitOk;
}

int cmd_unbwt(const BwtOptions& o) {
    const auto bytes = read_file(o.input);
    const auto l = BwtString::from_bytes(bytes);
    const auto text = with_width(o.width, [&]<class I>(std::type_identity<I>) {
        return invert_bwt<I>(l, lf_array<I>(l, count_array(l)));
    });
    auto symbols = text.symbols();
    if (o.strip) symbols = symbols.first(symbols.size() - 1);
    write_file(o.out.empty() ? default_out(o.input, ".unbwt") : o.out, symbols);
    return kExitOk;
}

// ---------------------------------------------------------------- bp

struct BpOptions {
    std::string action;
    std::string input;
    std::string out;
    std::string lambda;
    std::string stack_mode = "pairs";
    std::string sentinel = "append";
    std::size_t at = 0;
    std::size_t block_size = BpIndex::kDefaultBlockBits;
    int width = 32;
};

bool has_bp_magic(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= sizeof(kBpMagic) && std::equal(std::begin(kBpMagic), std::end(kBpMagic), bytes.begin());
}

struct LoadedBp {
    BpRepresentation bp;
    std::optional<Text> text;  // set when the input was a plain text
};

// A BP file is recognised by its magic; anything else is read as a text.
LoadedBp load_bp(const BpOptions& o) {
    const auto bytes = read_file(o.input);
    if (has_bp_magic(bytes)) return {decode_bp(bytes), std::nullopt};
    auto text = Text::from_bytes(bytes, parse_policy(o.sentinel));
    auto bp = with_width(o.width, [&]<class I>(std::type_identity<I>) {
        return bp_from_bwt<I>(bwt_from_sa(text, build_sa<I>(text)), parse_mode(o.stack_mode));
    });
    return {std::move(bp), std::move(text)};
}

int cmd_bp(const BpOptions& o) {
    auto loaded = load_bp(o);
    if (o.action == "build") {
        write_bp(o.out.empty() ? default_out(o.input, ".bp") : o.out, loaded.bp);
        return kExitOk;
    }
    if (o.action == "dump") {
        std::cout << loaded.bp.to_string() << '\n';
        return kExitOk;
    }
    const auto index = build_bp_index(std::move(loaded.bp), o.block_size);
    if (o.action == "at") {
        std::cout << index.lambda_at(o.at) << '\n';
        return kExitOk;
    }

    // verify
    if (index.representation().opens() != index.n()) {
        std::cerr << "error: open count differs from n\n";
        return kExitData;
    }
    std::vector<std::int64_t> expected;
    int mismatch_code = kExitData;
    if (!o.lambda.empty()) {
        expected = read_array(o.lambda).to_vector();
    } else if (loaded.text) {
        expected = with_width(o.width, [&]<class I>(std::type_identity<I>) {
            const auto lambda = lyndon_from_nsv<I>(*loaded.text);
            return std::vector<std::int64_t>(lambda.begin(), lambda.end());
        });
        mismatch_code = kExitInvariant;
    }
    if (!expected.empty()) {
        if (expected.size() != index.n()) {
            std::cerr << "error: lambda has " << expected.size() << " entries, BP encodes " << index.n() << '\n';
            return kExitData;
        }
        for (std::size_t i = 1; i <= index.n(); ++i) {
            const auto got = static_cast<std::int64_t>(index.lambda_at(i));
            if (got != expected[i - 1]) {
                std::cerr << "error: lambda[" << i << "] = " << expected[i - 1] << " but BP gives " << got << '\n';
                return mismatch_code;
            }
        }
    }
    std::cout << "OK\n";
    return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
    std::string corpus;
    std::vector<std::size_t> sizes;
    std::vector<std::string> algos{"bwt", "nsv"};
    int reps = 1;
    int width = 32;
    int scaling = 0;
    int unary = 0;
};

template <IndexType I>
BenchReport median_run(const Text& text, Algo algo, const std::string& dataset, int reps) {
    std::vector<BenchReport> runs;
    for (int r = 0; r < reps; ++r) runs.push_back(run_lyndon<I>(Text(text), algo, dataset).report);
    std::sort(runs.begin(), runs.end(),
              [](const BenchReport& a, const BenchReport& b) { return a.total_seconds < b.total_seconds; });
    auto report = runs[runs.size() / 2];
    report.repetitions = reps;
    for (const auto& r : runs) report.peak_bytes = std::max(report.peak_bytes, r.peak_bytes);
    report.working_bytes = static_cast<std::int64_t>(report.peak_bytes) -
                           static_cast<std::int64_t>(report.n * (1 + sizeof(I)));
    return report;
}

void report_failure(const std::string& dataset, const std::string& what) {
    std::cerr << R"({"schema":"bench-v1","dataset":")" << dataset << R"(","error":")" << what << "\"}\n";
}

void bench_cell(const BenchOptions& o, std::span<const std::uint8_t> bytes, const std::string& dataset) {
    for (const auto& name : o.algos) {
        const auto algo = *parse_algo(name);
        if (algo == Algo::oracle && bytes.size() > kOracleBenchLimit) {
            report_failure(dataset, "oracle skipped above 2^20 symbols");
            continue;
        }
        try {
            const auto text = Text::from_bytes(bytes, SentinelPolicy::append);
            const auto report = with_width(o.width, [&]<class I>(std::type_identity<I>) {
                return median_run<I>(text, algo, dataset, o.reps);
            });
            std::cout << report.to_json() << std::endl;
        } catch (const Error& e) {
            report_failure(dataset, std::string(to_string(e.code())));
        }
    }
}

std::vector<std::size_t> prefix_sizes(const BenchOptions& o, std::size_t full) {
    std::vector<std::size_t> out;
    for (const auto s : o.sizes) {
        if (s <= full) out.push_back(s);
    }
    if (o.sizes.empty()) {
        for (int k = o.scaling - 1; k >= 1; --k) {
            if ((full >> k) > 0) out.push_back(full >> k);
        }
        out.push_back(full);
    }
    return out;
}

int cmd_bench(const BenchOptions& o) {
    if (!o.corpus.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(o.corpus)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            std::vector<std::uint8_t> bytes;
            try {
                bytes = read_file(file);
            } catch (const Error& e) {
                report_failure(file.filename().string(), std::string(to_string(e.code())));
                continue;
            }
            for (const auto size : prefix_sizes(o, bytes.size())) {
                const auto dataset = file.filename().string() + "@" + std::to_string(size);
                bench_cell(o, std::span<const std::uint8_t>(bytes).first(size), dataset);
            }
        }
    }
    // Quadratic behaviour of the definitional route on unary texts.
    for (int e = kUnaryMinExp; o.unary > 0 && e <= o.unary; ++e) {
        const std::vector<std::uint8_t> unary(std::size_t{1} << e, 'a');
        BenchOptions oracle_only = o;
        oracle_only.algos = {"oracle"};
        bench_cell(oracle_only, unary, "unary@2^" + std::to_string(e));
    }
    return kExitOk;
}

// ---------------------------------------------------------------- corpora

struct GenOptions {
    std::string dir;
    std::size_t size = std::size_t{1} << 20;
    std::uint64_t seed = 1;
};

std::vector<std::uint8_t> fibonacci_word(std::size_t n) {
    std::string a = "a";
    std::string b = "ab";
    while (b.size() < n) {
        auto next = b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return {b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<std::uint8_t> random_bytes(std::size_t n, int sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int lo = sigma <= 26 ? 'a' : 1;
    std::uniform_int_distribution<int> pick(lo, lo + sigma - 1);
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(pick(rng));
    return out;
}

int cmd_gen_corpus(const GenOptions& o) {
    fs::create_directories(o.dir);
    auto emit = [&](const std::string& name, const std::vector<std::uint8_t>& bytes) {
        const auto path = fs::path(o.dir) / name;
        write_file(path, bytes);
        std::cout << path.string() << '\n';
    };
    emit("unary.txt", std::vector<std::uint8_t>(o.size, 'a'));
    emit("fibonacci.txt", fibonacci_word(o.size));
    for (const int sigma : {2, 4, 26, 255}) {
        emit("random-s" + std::to_string(sigma) + ".txt",
             random_bytes(o.size, sigma, o.seed + static_cast<std::uint64_t>(sigma)));
    }
    return kExitOk;
}

struct Dataset {
    const char* name;
    const char* page;
    int sigma;
    double mib;  // n / 2^20
};

constexpr const char* kTextsPage = "https://pizzachili.dcc.uchile.cl/texts.html";
constexpr const char* kRepetitivePage = "https://pizzachili.dcc.uchile.cl/repcorpus.html";

constexpr Dataset kDatasets[] = {
    {"sources", kTextsPage, 230, 201},       {"dblp", kTextsPage, 97, 282},
    {"dna", kTextsPage, 16, 385},            {"english.1gb", kTextsPage, 239, 1047},
    {"proteins", kTextsPage, 27, 1129},      {"einstein.de", kRepetitivePage, 117, 88},
    {"kernel", kRepetitivePage, 160, 246},   {"fib41", kRepetitivePage, 2, 256},
    {"cere", kRepetitivePage, 5, 440},
};

std::optional<fs::path> find_dataset(const fs::path& dir, const std::string& name) {
    for (const char* ext : {"", ".txt", ".xml"}) {
        const auto p = dir / (name + ext);
        if (fs::is_regular_file(p)) return p;
    }
    return std::nullopt;
}

int cmd_fetch_corpus(const std::string& verify_dir) {
    if (verify_dir.empty()) {
        std::cout << "Download and decompress these datasets into one directory, then run\n"
                     "  lynbwt fetch-corpus --verify DIR\n"
                     "english.1gb is the first 1 GB of 'english'.\n\n";
        for (const auto& d : kDatasets) {
            std::cout << d.name << "\tsigma=" << d.sigma << "\tMiB=" << d.mib << '\t' << d.page << '\n';
        }
        return kExitOk;
    }
    int rc = kExitOk;
    for (const auto& d : kDatasets) {
        const auto path = find_dataset(verify_dir, d.name);
        if (!path) {
            std::cout << "MISSING\t" << d.name << '\n';
            rc = kExitData;
            continue;
        }
        const double mib = static_cast<double>(fs::file_size(*path)) / double(1 << 20);
        const bool ok = std::abs(mib - d.mib) <= std::max(1.0, 0.01 * d.mib);
        std::cout << (ok ? "OK" : "SIZE") << '\t' << d.name << "\tMiB=" << mib << "\texpected=" << d.mib << '\n';
        if (!ok) rc = kExitData;
    }
    return rc;
}

int exit_code_for(const Error& e) { return e.code() == Errc::invariant ? kExitInvariant : kExitData; }

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Lyndon arrays via BWT inversion, NSV and a definitional oracle"};
    app.name("lynbwt");
    app.require_subcommand(1);

    const auto algo_check = CLI::IsMember({"bwt", "nsv", "oracle"});
    const auto width_check = CLI::IsMember({32, 64});
    const auto sentinel_check = CLI::IsMember({"append", "verify"});

    LyndonOptions lyn;
    auto* lyndon = app.add_subcommand("lyndon", "Compute the Lyndon array of a text file");
    lyndon->add_option("input", lyn.input, "Text file")->required()->check(CLI::ExistingFile);
    lyndon->add_option("--algo", lyn.algo, "Route")->check(algo_check)->capture_default_str();
    lyndon->add_option("--width", lyn.width, "Integer width")->check(width_check)->capture_default_str();
    lyndon->add_option("--out", lyn.out, "Output array (default INPUT.lyn)");
    lyndon->add_option("--sentinel", lyn.sentinel, "append: add byte 0; verify: input already ends with it")
        ->check(sentinel_check)
        ->capture_default_str();
    lyndon->add_flag("--report", lyn.report, "Print a JSON report");

    BwtOptions bw;
    auto* bwt = app.add_subcommand("bwt", "Write the BWT of a text file (sentinel as byte 0)");
    bwt->add_option("input", bw.input, "Text file")->required()->check(CLI::ExistingFile);
    bwt->add_option("--out", bw.out, "Output (default INPUT.bwt)");
    bwt->add_option("--width", bw.width, "Integer width")->check(width_check)->capture_default_str();
    bwt->add_option("--sentinel", bw.sentinel, "Sentinel policy")->check(sentinel_check)->capture_default_str();

    auto* unbwt = app.add_subcommand("unbwt", "Invert a BWT file; the output keeps the sentinel byte");
    unbwt->add_option("input", bw.input, "BWT file")->required()->check(CLI::ExistingFile);
    unbwt->add_option("--out", bw.out, "Output (default INPUT.unbwt)");
    unbwt->add_option("--width", bw.width, "Integer width")->check(width_check)->capture_default_str();
    unbwt->add_flag("--strip-sentinel", bw.strip, "Drop the trailing byte 0");

    BpOptions bpo;
    auto* bp = app.add_subcommand("bp", "Balanced-parenthesis Lyndon array: build, at, dump, verify");
    bp->add_option("action", bpo.action, "build | at | dump | verify")
        ->required()
        ->check(CLI::IsMember({"build", "at", "dump", "verify"}));
    bp->add_option("input", bpo.input, "Text file or BP file")->required()->check(CLI::ExistingFile);
    bp->add_option("--at", bpo.at, "Position i for 'at'");
    bp->add_option("--out", bpo.out, "Output for 'build' (default INPUT.bp)");
    bp->add_option("--lambda", bpo.lambda, "Lyndon array file to compare against in 'verify'")
        ->check(CLI::ExistingFile);
    bp->add_option("--stack-mode", bpo.stack_mode, "Stack used by the builder")
        ->check(CLI::IsMember({"pairs", "bitstack"}))
        ->capture_default_str();
    bp->add_option("--block-size", bpo.block_size, "Block size B of the min-max tree")->capture_default_str();
    bp->add_option("--width", bpo.width, "Integer width")->check(width_check)->capture_default_str();
    bp->add_option("--sentinel", bpo.sentinel, "Sentinel policy for text input")
        ->check(sentinel_check)
        ->capture_default_str();

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Time and measure the routes; one JSON object per line");
    bench->add_option("--corpus", bo.corpus, "Directory of raw text files")->check(CLI::ExistingDirectory);
    bench->add_option("--sizes", bo.sizes, "Prefix sizes in bytes")->delimiter(',');
    bench->add_option("--algos", bo.algos, "Routes")->delimiter(',')->check(algo_check);
    bench->add_option("--reps", bo.reps, "Repetitions; the median run is reported")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--width", bo.width, "Integer width")->check(width_check)->capture_default_str();
    bench->add_option("--scaling", bo.scaling, "Also run K-1 halving prefixes of each file")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--unary", bo.unary, "Oracle on unary texts of 2^12 .. 2^E symbols")
        ->check(CLI::Range(kUnaryMinExp, kUnaryMaxExp));

    GenOptions go;
    auto* gen = app.add_subcommand("gen-corpus", "Write unary, Fibonacci and random test corpora");
    gen->add_option("dir", go.dir, "Output directory")->required();
    gen->add_option("--size", go.size, "Bytes per file")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--seed", go.seed, "Random seed")->capture_default_str();

    std::string verify_dir;
    auto* fetch = app.add_subcommand("fetch-corpus", "List the benchmark datasets or verify a downloaded copy");
    fetch->add_option("--verify", verify_dir, "Directory holding the datasets")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    if (*bp && bpo.action == "at" && bp->count("--at") == 0) {
        std::cerr << "error: 'bp at' needs --at i\n";
        return kExitUsage;
    }

    try {
        if (*lyndon) return cmd_lyndon(lyn);
        if (*bwt) return cmd_bwt(bw);
        if (*unbwt) return cmd_unbwt(bw);
        if (*bp) return cmd_bp(bpo);
        if (*bench) return cmd_bench(bo);
        if (*gen) return cmd_gen_corpus(go);
        if (*fetch) return cmd_fetch_corpus(verify_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitUsage;
}

}  // namespace lynbwt::cli
