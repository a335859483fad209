// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

#include "lynbwt/memory.hpp"

namespace lynbwt {

using word_vector = memory::tracked_vector<std::uint64_t>;

// Position of the k-th (0-based) set bit of `word`; `word` must have > k set bits.
inline unsigned select_in_word(std::uint64_t word, unsigned k) noexcept {
    for (; k > 0; --k) word &= word - 1;
    return static_cast<unsigned>(std::countr_zero(word));
}

/// Static bit sequence with rank/select. Positions are 1-based.
/// One absolute count per 512-bit superblock (1/8 bit per bit); rank pops at
/// most 8 words, select binary-searches the superblocks.
class RankSelectBitvector {
  public:
    static constexpr std::size_t kSuperblockBits = 512;

    RankSelectBitvector() = default;
    RankSelectBitvector(word_vector words, std::size_t bits);

    [[nodiscard]] std::size_t size() const noexcept { return bits_; }
    [[nodiscard]] std::size_t ones() const noexcept { return ones_; }
    [[nodiscard]] bool test(std::size_t i) const noexcept {
        return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1U;
    }
    /// Number of set bits in positions 1..i (rank1(0) = 0).
    [[nodiscard]] std::size_t rank1(std::size_t i) const noexcept;
    /// Position of the k-th set bit, 1 <= k <= ones().
    [[nodiscard]] std::size_t select1(std::size_t k) const noexcept;
    [[nodiscard]] std::size_t index_bytes() const noexcept {
        return superblock_rank_.size() * sizeof(std::uint64_t);
    }

  private:
    word_vector words_;
    std::size_t bits_ = 0;
    std::size_t ones_ = 0;
    memory::tracked_vector<std::uint64_t> superblock_rank_;  // ones before each superblock
};

/// Fixed-length bit sequence with single-bit updates and rank/select.
/// Popcounts of 512-bit superblocks sit in a Fenwick tree, so every
/// operation costs O(log(n/512) + 8) word operations.
class DynamicBitvector {
  public:
    explicit DynamicBitvector(std::size_t bits);

    [[nodiscard]] std::size_t size() const noexcept { return bits_; }
    [[nodiscard]] std::size_t ones() const noexcept { return ones_; }
    [[nodiscard]] bool test(std::size_t i) const noexcept {
        return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1U;
    }
    void set(std::size_t i) noexcept;
    void clear(std::size_t i) noexcept;
    [[nodiscard]] std::size_t rank1(std::size_t i) const noexcept;
    [[nodiscard]] std::size_t select1(std::size_t k) const noexcept;
    [[nodiscard]] std::size_t footprint_bytes() const noexcept {
        return words_.size() * sizeof(std::uint64_t) + tree_.size() * sizeof(std::uint32_t);
    }

  private:
    static constexpr std::size_t kWordsPerBlock = 8;

    void add(std::size_t block, std::int32_t delta) noexcept;

    word_vector words_;
    memory::tracked_vector<std::uint32_t> tree_;  // 1-based Fenwick over superblocks
    std::size_t bits_;
    std::size_t ones_ = 0;
    std::size_t top_step_ = 1;  // highest power of two <= tree size
};

}  // namespace lynbwt
