// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "lynbwt/memory.hpp"

namespace lynbwt {

inline constexpr std::uint8_t kSentinel = 0;

enum class SentinelPolicy {
    append,  // input must not contain byte 0; a sentinel is appended
    verify,  // input must end with its only byte 0
};

/// A byte text terminated by the unique smallest symbol (byte 0).
/// Positions are 1-based in `at`, 0-based in `operator[]`.
class Text {
  public:
    static Text from_bytes(std::span<const std::uint8_t> bytes, SentinelPolicy policy);
    // Adopts a buffer that already carries its sentinel; checks the invariant.
    static Text from_terminated(memory::tracked_vector<std::uint8_t> symbols);
    // Convenience for tests and small inputs: "banana" -> "banana$".
    static Text from_string(std::string_view s) {
        return from_bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()},
                          SentinelPolicy::append);
    }

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] int sigma() const noexcept { return sigma_; }
    std::uint8_t operator[](std::size_t k) const noexcept { return symbols_[k]; }
    [[nodiscard]] std::uint8_t at(std::size_t i) const noexcept { return symbols_[i - 1]; }
    [[nodiscard]] std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }

    // Printable form with the sentinel shown as '$'.
    [[nodiscard]] std::string to_display() const;

    [[nodiscard]] memory::tracked_vector<std::uint8_t> release() && noexcept {
        return std::move(symbols_);
    }

    friend bool operator==(const Text& a, const Text& b) { return a.symbols_ == b.symbols_; }

  private:
    explicit Text(memory::tracked_vector<std::uint8_t> symbols);

    memory::tracked_vector<std::uint8_t> symbols_;
    int sigma_ = 0;
};

Text load_text(const std::filesystem::path& path, SentinelPolicy policy);

// Distinct byte values present, as in the sigma of a Text.
int count_distinct(std::span<const std::uint8_t> bytes) noexcept;

}  // namespace lynbwt
