// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "lynbwt/error.hpp"

namespace lynbwt {

namespace {

void check_policy(std::span<const std::uint8_t> bytes, SentinelPolicy policy) {
    if (policy == SentinelPolicy::append) {
        const auto it = std::find(bytes.begin(), bytes.end(), kSentinel);
        if (it != bytes.end()) {
            throw Error(Errc::sentinel_conflict,
                        "byte 0 at offset " + std::to_string(it - bytes.begin()));
        }
        return;
    }
    if (bytes.empty()) throw Error(Errc::empty_input, "verify policy needs at least the sentinel");
    if (bytes.back() != kSentinel) {
        throw Error(Errc::sentinel_conflict, "last byte is not the sentinel 0");
    }
    const auto body = bytes.first(bytes.size() - 1);
    const auto it = std::find(body.begin(), body.end(), kSentinel);
    if (it != body.end()) {
        throw Error(Errc::sentinel_conflict, "byte 0 at offset " + std::to_string(it - body.begin()));
    }
}

}  // namespace

int count_distinct(std::span<const std::uint8_t> bytes) noexcept {
    std::array<bool, 256> seen{};
    int distinct = 0;
    for (auto b : bytes) {
        if (!seen[b]) {
            seen[b] = true;
            ++distinct;
        }
    }
    return distinct;
}

Text::Text(memory::tracked_vector<std::uint8_t> symbols)
    : symbols_(std::move(symbols)), sigma_(count_distinct(symbols_)) {}

Text Text::from_bytes(std::span<const std::uint8_t> bytes, SentinelPolicy policy) {
    check_policy(bytes, policy);
    memory::tracked_vector<std::uint8_t> symbols;
    symbols.reserve(bytes.size() + 1);
    symbols.assign(bytes.begin(), bytes.end());
    if (policy == SentinelPolicy::append) symbols.push_back(kSentinel);
    return Text(std::move(symbols));
}

Text Text::from_terminated(memory::tracked_vector<std::uint8_t> symbols) {
    check_policy(symbols, SentinelPolicy::verify);
    return Text(std::move(symbols));
}

std::string Text::to_display() const {
    std::string out(symbols_.begin(), symbols_.end());
    std::replace(out.begin(), out.end(), '\0', '$');
    return out;
}

Text load_text(const std::filesystem::path& path, SentinelPolicy policy) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw Error(Errc::io, "cannot open " + path.string());
    const auto size = static_cast<std::size_t>(in.tellg());
    in.seekg(0);

    // Read straight into the final buffer so the text costs n + 1 tracked bytes.
    memory::tracked_vector<std::uint8_t> symbols;
    symbols.reserve(size + (policy == SentinelPolicy::append ? 1 : 0));
    symbols.resize(size);
    if (size > 0 && !in.read(reinterpret_cast<char*>(symbols.data()), static_cast<std::streamsize>(size))) {
        throw Error(Errc::io, "short read from " + path.string());
    }
    check_policy(symbols, policy);
    if (policy == SentinelPolicy::append) symbols.push_back(kSentinel);
    return Text::from_terminated(std::move(symbols));
}

}  // namespace lynbwt
