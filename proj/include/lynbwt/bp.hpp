// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstdint>
#include <filesystem>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lynbwt/arrays.hpp"
#include "lynbwt/bitvector.hpp"
#include "lynbwt/bwt.hpp"

namespace lynbwt {

/// Parenthesis sequence, bit 1 = '(' and bit 0 = ')'. Positions are 1-based.
class BpRepresentation {
  public:
    BpRepresentation() = default;
    BpRepresentation(word_vector words, std::size_t bits);
    // Accepts only '(' and ')'; balance is checked by BpIndex::build.
    static BpRepresentation from_string(std::string_view parens);

    void push_open() { push(true); }
    void push_close() { push(false); }
    void push_closes(std::size_t count) {
        for (; count > 0; --count) push(false);
    }

    [[nodiscard]] std::size_t size() const noexcept { return bits_; }
    [[nodiscard]] bool is_open(std::size_t p) const noexcept {
        return (words_[(p - 1) / 64] >> ((p - 1) % 64)) & 1U;
    }
    [[nodiscard]] std::size_t opens() const noexcept;
    [[nodiscard]] bool is_balanced() const noexcept;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BpRepresentation&, const BpRepresentation&) = default;

  private:
    void push(bool open) {
        if (bits_ % 64 == 0) words_.push_back(0);
        if (open) words_.back() |= std::uint64_t{1} << (bits_ % 64);
        ++bits_;
    }

    word_vector words_;
    std::size_t bits_ = 0;
};

/// Stack of distinct values from 1..n kept as a bit array: bit e is set iff
/// e is on the stack. Values on the stack always increase bottom to top, so
/// the set bits in position order are the stack contents.
class BitStack {
  public:
    explicit BitStack(std::size_t n) : bits_(n) {}

    /// Removes every value larger than `e` (found as select_1(S, r_e + k)
    /// with r_e = rank_1(S, e)), then pushes `e`. Returns how many were
    /// removed. Throws DuplicatePush or OutOfRange.
    std::size_t push(std::size_t e);
    /// Removes and returns the top value.
    std::size_t pop();

    [[nodiscard]] std::size_t top() const noexcept { return empty() ? 0 : bits_.select1(bits_.ones()); }
    [[nodiscard]] std::size_t size() const noexcept { return bits_.ones(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.ones() == 0; }
    [[nodiscard]] bool contains(std::size_t e) const noexcept { return bits_.test(e); }
    [[nodiscard]] std::size_t rank1(std::size_t e) const noexcept { return bits_.rank1(e); }
    [[nodiscard]] std::size_t select1(std::size_t k) const noexcept { return bits_.select1(k); }
    [[nodiscard]] std::vector<std::size_t> values() const;
    [[nodiscard]] std::size_t footprint_bytes() const noexcept { return bits_.footprint_bytes(); }

  private:
    DynamicBitvector bits_;
};

/// Builds the parenthesis form from ISA[1], ISA[2], ... in text order: for
/// each value, close while the stack top is larger, then push and open; a
/// final close pops the remaining 1. Throws NotAPermutation if the values
/// are not a permutation ending in 1.
template <std::ranges::input_range R>
    requires std::integral<std::ranges::range_value_t<R>>
BpRepresentation bp_from_isa_values(R&& isa_values) {
    using Value = std::ranges::range_value_t<R>;
    BpRepresentation bp;
    memory::tracked_vector<Value> stack;
    for (const Value v : isa_values) {
        if (v < 1) throw Error(Errc::not_a_permutation, "ISA values start at 1, got " + std::to_string(v));
        while (!stack.empty() && stack.back() > v) {
            stack.pop_back();
            bp.push_close();
        }
        if (!stack.empty() && stack.back() == v) {
            throw Error(Errc::not_a_permutation, "repeated ISA value " + std::to_string(v));
        }
        stack.push_back(v);
        bp.push_open();
    }
    if (stack.size() != 1 || stack.back() != 1) {
        throw Error(Errc::not_a_permutation, "ISA values must end with 1 and leave one stack entry, " +
                                                 std::to_string(stack.size()) + " remain");
    }
    bp.push_close();
    return bp;
}

enum class StackMode { pairs, bitstack };

/// Parenthesis form straight from the BWT, generating ISA left to right with Psi.
template <IndexType I>
BpRepresentation bp_from_bwt(const BwtString& l, StackMode mode);

/// Range min-max tree over the excess (opens - closes) of a balanced
/// sequence. Leaves summarize blocks of `block_bits` bits; queries walk
/// O(log blocks) tree nodes and scan at most two blocks.
class BpIndex {
  public:
    static constexpr std::size_t kDefaultBlockBits = 512;

    /// Throws Unbalanced; block_bits must be a power of two >= 64 (OutOfRange).
    static BpIndex build(BpRepresentation bp, std::size_t block_bits = kDefaultBlockBits);

    [[nodiscard]] std::size_t n() const noexcept { return bp_.size() / 2; }
    [[nodiscard]] std::size_t block_bits() const noexcept { return block_bits_; }
    [[nodiscard]] const BpRepresentation& representation() const noexcept { return bp_; }

    /// Position of the i-th open parenthesis, 1 <= i <= n.
    [[nodiscard]] std::size_t selectopen(std::size_t i) const;
    /// Position of the parenthesis closing the i-th open one.
    [[nodiscard]] std::size_t selectclose(std::size_t i) const;
    /// Matching close of the open parenthesis at position p.
    [[nodiscard]] std::size_t find_close(std::size_t p) const;
    /// Opens minus closes in positions 1..p.
    [[nodiscard]] std::int64_t excess(std::size_t p) const;
    /// lambda[i] = (selectclose(i) - selectopen(i) + 1) / 2.
    [[nodiscard]] std::size_t lambda_at(std::size_t i) const;

    /// Bytes used beyond the parenthesis bits themselves.
    [[nodiscard]] std::size_t index_bytes() const noexcept;

  private:
    struct Node {
        std::int64_t sum;
        std::int64_t min;  // smallest prefix excess inside the range, relative to its start
        std::int64_t max;
    };

    BpIndex() = default;
    void check_index(std::size_t i) const;
    [[nodiscard]] std::size_t block_end(std::size_t block) const noexcept;
    [[nodiscard]] std::size_t opens_before(std::size_t block) const noexcept;
    // First 0-based bit position q in [from, to) whose running excess reaches
    // `target`, or `to` if none. `running` is the excess before `from`.
    [[nodiscard]] std::size_t scan_for(std::size_t from, std::size_t to, std::int64_t running,
                                       std::int64_t target) const noexcept;

    BpRepresentation bp_;
    std::size_t block_bits_ = kDefaultBlockBits;
    std::size_t blocks_ = 0;
    std::size_t leaves_ = 1;
    memory::tracked_vector<std::int64_t> block_excess_;  // excess before each block
    memory::tracked_vector<Node> tree_;                  // heap order, root at 1
    memory::tracked_vector<std::int64_t> open_samples_;  // block of open 1, B+1, 2B+1, ...
};

inline BpIndex build_bp_index(BpRepresentation bp, std::size_t block_bits = BpIndex::kDefaultBlockBits) {
    return BpIndex::build(std::move(bp), block_bits);
}

// File layout: "LYNBP001", u64 LE n (number of opens), then ceil(2n/64)
// little-endian 64-bit words, bit k of the sequence at word k/64, bit k%64.
inline constexpr char kBpMagic[8] = {'L', 'Y', 'N', 'B', 'P', '0', '0', '1'};

std::vector<std::uint8_t> encode_bp(const BpRepresentation& bp);
BpRepresentation decode_bp(std::span<const std::uint8_t> bytes);
void write_bp(const std::filesystem::path& path, const BpRepresentation& bp);
BpRepresentation read_bp(const std::filesystem::path& path);

}  // namespace lynbwt
