// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/bitvector.hpp"

#include <algorithm>

namespace lynbwt {

RankSelectBitvector::RankSelectBitvector(word_vector words, std::size_t bits)
    : words_(std::move(words)), bits_(bits) {
    words_.resize((bits_ + 63) / 64);
    if (bits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    constexpr std::size_t words_per_block = kSuperblockBits / 64;
    superblock_rank_.reserve(words_.size() / words_per_block + 1);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (w % words_per_block == 0) superblock_rank_.push_back(ones_);
        ones_ += static_cast<std::size_t>(std::popcount(words_[w]));
    }
}

std::size_t RankSelectBitvector::rank1(std::size_t i) const noexcept {
    if (i == 0) return 0;
    const std::size_t last = i - 1;
    const std::size_t word = last / 64;
    std::size_t r = superblock_rank_[last / kSuperblockBits];
    for (std::size_t w = (last / kSuperblockBits) * (kSuperblockBits / 64); w < word; ++w) {
        r += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    const unsigned shift = 63 - static_cast<unsigned>(last % 64);
    return r + static_cast<std::size_t>(std::popcount(words_[word] << shift));
}

std::size_t RankSelectBitvector::select1(std::size_t k) const noexcept {
    // Last superblock with fewer than k ones before it.
    const auto it = std::lower_bound(superblock_rank_.begin(), superblock_rank_.end(), k);
    const auto block = static_cast<std::size_t>(it - superblock_rank_.begin()) - 1;
    std::size_t remaining = k - superblock_rank_[block];
    for (std::size_t w = block * (kSuperblockBits / 64);; ++w) {
        const auto c = static_cast<std::size_t>(std::popcount(words_[w]));
        if (c >= remaining) {
            return w * 64 + select_in_word(words_[w], static_cast<unsigned>(remaining - 1)) + 1;
        }
        remaining -= c;
    }
}

DynamicBitvector::DynamicBitvector(std::size_t bits)
    : words_((bits + 63) / 64), tree_((words_.size() + kWordsPerBlock - 1) / kWordsPerBlock + 1), bits_(bits) {
    while (top_step_ * 2 < tree_.size()) top_step_ *= 2;
}

void DynamicBitvector::add(std::size_t block, std::int32_t delta) noexcept {
    for (std::size_t b = block + 1; b < tree_.size(); b += b & (~b + 1)) {
        tree_[b] = static_cast<std::uint32_t>(static_cast<std::int64_t>(tree_[b]) + delta);
    }
}

void DynamicBitvector::set(std::size_t i) noexcept {
    auto& w = words_[(i - 1) / 64];
    const auto mask = std::uint64_t{1} << ((i - 1) % 64);
    if (w & mask) return;
    w |= mask;
    ++ones_;
    add((i - 1) / 64 / kWordsPerBlock, 1);
}

void DynamicBitvector::clear(std::size_t i) noexcept {
    auto& w = words_[(i - 1) / 64];
    const auto mask = std::uint64_t{1} << ((i - 1) % 64);
    if (!(w & mask)) return;
    w &= ~mask;
    --ones_;
    add((i - 1) / 64 / kWordsPerBlock, -1);
}

std::size_t DynamicBitvector::rank1(std::size_t i) const noexcept {
    if (i == 0) return 0;
    const std::size_t last = i - 1;
    const std::size_t word = last / 64;
    const std::size_t block = word / kWordsPerBlock;
    std::size_t r = 0;
    for (std::size_t b = block; b > 0; b -= b & (~b + 1)) r += tree_[b];
    for (std::size_t w = block * kWordsPerBlock; w < word; ++w) {
        r += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    const unsigned shift = 63 - static_cast<unsigned>(last % 64);
    return r + static_cast<std::size_t>(std::popcount(words_[word] << shift));
}

std::size_t DynamicBitvector::select1(std::size_t k) const noexcept {
    // Fenwick descent: largest prefix of blocks holding fewer than k ones.
    std::size_t block = 0;
    std::size_t remaining = k;
    for (std::size_t step = top_step_; step > 0; step /= 2) {
        const auto next = block + step;
        if (next < tree_.size() && tree_[next] < remaining) {
            block = next;
            remaining -= tree_[next];
        }
    }
    for (std::size_t w = block * kWordsPerBlock;; ++w) {
        const auto c = static_cast<std::size_t>(std::popcount(words_[w]));
        if (c >= remaining) {
            return w * 64 + select_in_word(words_[w], static_cast<unsigned>(remaining - 1)) + 1;
        }
        remaining -= c;
    }
}

}  // namespace lynbwt
