// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/bp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "lynbwt/array_io.hpp"

namespace lynbwt {

namespace {

struct ByteExcess {
    std::array<std::int8_t, 256> total{};
    std::array<std::int8_t, 256> min_prefix{};
};

constexpr ByteExcess make_byte_excess() {
    ByteExcess t;
    for (int x = 0; x < 256; ++x) {
        int e = 0;
        int lo = 8;
        for (int b = 0; b < 8; ++b) {
            e += ((x >> b) & 1) ? 1 : -1;
            lo = std::min(lo, e);
        }
        t.total[x] = static_cast<std::int8_t>(e);
        t.min_prefix[x] = static_cast<std::int8_t>(lo);
    }
    return t;
}

constexpr ByteExcess kByteExcess = make_byte_excess();
constexpr std::int64_t kNoMin = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t excess_of_prefix(std::span<const std::uint64_t> words, std::size_t from, std::size_t count) {
    // Excess of bits [from, from + count), `from` word-aligned.
    std::int64_t ones = 0;
    std::size_t w = from / 64;
    std::size_t left = count;
    for (; left >= 64; left -= 64, ++w) ones += std::popcount(words[w]);
    if (left > 0) ones += std::popcount(words[w] & ((std::uint64_t{1} << left) - 1));
    return 2 * ones - static_cast<std::int64_t>(count);
}

}  // namespace

BpRepresentation::BpRepresentation(word_vector words, std::size_t bits) : words_(std::move(words)), bits_(bits) {
    words_.resize((bits_ + 63) / 64);
    if (bits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
}

BpRepresentation BpRepresentation::from_string(std::string_view parens) {
    BpRepresentation bp;
    for (auto ch : parens) {
        if (ch == '(') {
            bp.push_open();
        } else if (ch == ')') {
            bp.push_close();
        } else {
            throw Error(Errc::malformed_header, std::string("unexpected character '") + ch + "' in parentheses");
        }
    }
    return bp;
}

std::size_t BpRepresentation::opens() const noexcept {
    std::size_t ones = 0;
    for (auto w : words_) ones += static_cast<std::size_t>(std::popcount(w));
    return ones;
}

bool BpRepresentation::is_balanced() const noexcept {
    std::int64_t e = 0;
    for (std::size_t p = 1; p <= bits_; ++p) {
        e += is_open(p) ? 1 : -1;
        if (e < 0) return false;
    }
    return e == 0;
}

std::string BpRepresentation::to_string() const {
    std::string out;
    out.reserve(bits_);
    for (std::size_t p = 1; p <= bits_; ++p) out.push_back(is_open(p) ? '(' : ')');
    return out;
}

std::size_t BitStack::push(std::size_t e) {
    if (e < 1 || e > bits_.size()) {
        throw Error(Errc::out_of_range, "bit stack value " + std::to_string(e) + " outside 1.." +
                                            std::to_string(bits_.size()));
    }
    if (bits_.test(e)) throw Error(Errc::duplicate_push, "value " + std::to_string(e) + " already stacked");
    const auto below = bits_.rank1(e);
    const auto removed = bits_.ones() - below;
    // Delete select_1(S, r_e + k) for k = removed .. 1, largest first.
    for (auto k = bits_.ones(); k > below; --k) bits_.clear(bits_.select1(k));
    bits_.set(e);
    return removed;
}

std::size_t BitStack::pop() {
    if (empty()) throw Error(Errc::out_of_range, "pop from an empty bit stack");
    const auto t = top();
    bits_.clear(t);
    return t;
}

std::vector<std::size_t> BitStack::values() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= bits_.ones(); ++k) out.push_back(bits_.select1(k));
    return out;
}

template <IndexType I>
BpRepresentation bp_from_bwt(const BwtString& l, StackMode mode) {
    const PsiView<I> psi(l);
    if (mode == StackMode::pairs) return bp_from_isa_values(IsaStream<I>(psi));

    BpRepresentation bp;
    BitStack stack(l.size());
    for (const I v : IsaStream<I>(psi)) {
        bp.push_closes(stack.push(static_cast<std::size_t>(v)));
        bp.push_open();
    }
    if (stack.size() != 1 || stack.top() != 1) {
        throw Error(Errc::not_a_permutation, "ISA stream did not end with 1 alone on the stack");
    }
    stack.pop();
    bp.push_close();
    return bp;
}

template BpRepresentation bp_from_bwt<std::int32_t>(const BwtString&, StackMode);
template BpRepresentation bp_from_bwt<std::int64_t>(const BwtString&, StackMode);

BpIndex BpIndex::build(BpRepresentation bp, std::size_t block_bits) {
    if (block_bits < 64 || !std::has_single_bit(block_bits)) {
        throw Error(Errc::out_of_range, "block size must be a power of two >= 64, got " + std::to_string(block_bits));
    }
    const auto bits = bp.size();
    if (bits == 0 || bits % 2 != 0) {
        throw Error(Errc::unbalanced, "parenthesis sequence of odd or zero length " + std::to_string(bits));
    }

    BpIndex idx;
    idx.bp_ = std::move(bp);
    idx.block_bits_ = block_bits;
    idx.blocks_ = (bits + block_bits - 1) / block_bits;
    while (idx.leaves_ < idx.blocks_) idx.leaves_ *= 2;
    idx.tree_.assign(2 * idx.leaves_, Node{0, kNoMin, -kNoMin});
    idx.block_excess_.resize(idx.blocks_ + 1);

    const auto words = idx.bp_.words();
    for (std::size_t b = 0; b < idx.blocks_; ++b) {
        const auto from = b * block_bits;
        const auto to = std::min(bits, from + block_bits);
        std::int64_t e = 0;
        std::int64_t lo = kNoMin;
        std::int64_t hi = -kNoMin;
        for (std::size_t q = from; q < to; ++q) {
            e += ((words[q / 64] >> (q % 64)) & 1U) ? 1 : -1;
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        idx.tree_[idx.leaves_ + b] = Node{e, lo, hi};
        idx.block_excess_[b + 1] = idx.block_excess_[b] + e;
    }
    for (std::size_t v = idx.leaves_ - 1; v >= 1; --v) {
        const auto& a = idx.tree_[2 * v];
        const auto& c = idx.tree_[2 * v + 1];
        idx.tree_[v] = Node{a.sum + c.sum, std::min(a.min, a.sum + c.min), std::max(a.max, a.sum + c.max)};
    }
    if (idx.tree_[1].min < 0 || idx.tree_[1].sum != 0) {
        throw Error(Errc::unbalanced, "excess dips below zero or does not return to zero");
    }

    for (std::size_t b = 0, next = 1; b < idx.blocks_; ++b) {
        while (next <= idx.opens_before(b + 1)) {
            idx.open_samples_.push_back(static_cast<std::int64_t>(b));
            next += block_bits;
        }
    }
    return idx;
}

std::size_t BpIndex::block_end(std::size_t block) const noexcept {
    return std::min(bp_.size(), (block + 1) * block_bits_);
}

std::size_t BpIndex::opens_before(std::size_t block) const noexcept {
    const auto start = std::min(bp_.size(), block * block_bits_);
    return static_cast<std::size_t>((static_cast<std::int64_t>(start) + block_excess_[block]) / 2);
}

void BpIndex::check_index(std::size_t i) const {
    if (i < 1 || i > n()) {
        throw Error(Errc::out_of_range, "index " + std::to_string(i) + " outside 1.." + std::to_string(n()));
    }
}

std::int64_t BpIndex::excess(std::size_t p) const {
    if (p > bp_.size()) throw Error(Errc::out_of_range, "position " + std::to_string(p) + " past the end");
    if (p == 0) return 0;
    const auto block = (p - 1) / block_bits_;
    const auto from = block * block_bits_;
    return block_excess_[block] + excess_of_prefix(bp_.words(), from, p - from);
}

std::size_t BpIndex::scan_for(std::size_t from, std::size_t to, std::int64_t running,
                              std::int64_t target) const noexcept {
    const auto words = bp_.words();
    auto bit = [&](std::size_t q) { return ((words[q / 64] >> (q % 64)) & 1U) != 0; };
    std::size_t q = from;
    for (; q < to && q % 8 != 0; ++q) {
        running += bit(q) ? 1 : -1;
        if (running == target) return q;
    }
    for (; q + 8 <= to; q += 8) {
        const auto byte = static_cast<std::uint8_t>(words[q / 64] >> (q % 64));
        if (running + kByteExcess.min_prefix[byte] <= target) break;
        running += kByteExcess.total[byte];
    }
    for (; q < to; ++q) {
        running += bit(q) ? 1 : -1;
        if (running == target) return q;
    }
    return to;
}

std::size_t BpIndex::find_close(std::size_t p) const {
    if (p < 1 || p > bp_.size() || !bp_.is_open(p)) {
        throw Error(Errc::out_of_range, "position " + std::to_string(p) + " is not an open parenthesis");
    }
    const auto target = excess(p) - 1;
    const auto block = (p - 1) / block_bits_;
    const auto end = block_end(block);
    if (const auto q = scan_for(p, end, target + 1, target); q < end) return q + 1;

    // Climb until a right sibling can reach the target, then descend into it.
    std::size_t v = leaves_ + block;
    std::int64_t running = block_excess_[block + 1];
    for (;;) {
        if (v == 1) throw Error(Errc::invariant, "no matching close for position " + std::to_string(p));
        if (v % 2 == 0) {
            const auto& sibling = tree_[v + 1];
            if (running + sibling.min <= target) {
                ++v;
                break;
            }
            running += sibling.sum;
        }
        v /= 2;
    }
    while (v < leaves_) {
        const auto& left = tree_[2 * v];
        if (running + left.min <= target) {
            v = 2 * v;
        } else {
            running += left.sum;
            v = 2 * v + 1;
        }
    }
    const auto leaf = v - leaves_;
    const auto q = scan_for(leaf * block_bits_, block_end(leaf), running, target);
    if (q >= block_end(leaf)) throw Error(Errc::invariant, "range min-max tree led to a block without the close");
    return q + 1;
}

std::size_t BpIndex::selectopen(std::size_t i) const {
    check_index(i);
    const auto sample = (i - 1) / block_bits_;
    auto lo = static_cast<std::size_t>(open_samples_[sample]);
    auto hi = sample + 1 < open_samples_.size() ? static_cast<std::size_t>(open_samples_[sample + 1]) : blocks_ - 1;
    // Last block in [lo, hi] with fewer than i opens before it.
    while (lo < hi) {
        const auto mid = lo + (hi - lo + 1) / 2;
        if (opens_before(mid) < i) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    const auto words = bp_.words();
    auto remaining = i - opens_before(lo);
    for (std::size_t w = lo * block_bits_ / 64;; ++w) {
        const auto c = static_cast<std::size_t>(std::popcount(words[w]));
        if (c >= remaining) return w * 64 + select_in_word(words[w], static_cast<unsigned>(remaining - 1)) + 1;
        remaining -= c;
    }
}

std::size_t BpIndex::selectclose(std::size_t i) const { return find_close(selectopen(i)); }

std::size_t BpIndex::lambda_at(std::size_t i) const {
    const auto open = selectopen(i);
    const auto close = find_close(open);
    const auto span = close - open + 1;
    if (span % 2 != 0) throw Error(Errc::invariant, "odd open-to-close span at index " + std::to_string(i));
    return span / 2;
}

std::size_t BpIndex::index_bytes() const noexcept {
    return block_excess_.size() * sizeof(std::int64_t) + tree_.size() * sizeof(Node) +
           open_samples_.size() * sizeof(std::int64_t);
}

std::vector<std::uint8_t> encode_bp(const BpRepresentation& bp) {
    std::vector<std::uint8_t> out(std::begin(kBpMagic), std::end(kBpMagic));
    const std::uint64_t n = bp.size() / 2;
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(n >> (8 * b)));
    for (auto w : bp.words()) {
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(w >> (8 * b)));
    }
    return out;
}

BpRepresentation decode_bp(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 16 || !std::equal(std::begin(kBpMagic), std::end(kBpMagic), bytes.begin())) {
        throw Error(Errc::malformed_header, "missing LYNBP001 magic");
    }
    std::uint64_t n = 0;
    for (int b = 0; b < 8; ++b) n |= std::uint64_t{bytes[8 + b]} << (8 * b);
    const auto payload = bytes.size() - 16;
    if (n > payload * 4 || payload != (2 * n + 63) / 64 * 8) {
        throw Error(Errc::malformed_header, "length field disagrees with payload size");
    }
    word_vector words(payload / 8);
    for (std::size_t w = 0; w < words.size(); ++w) {
        for (int b = 0; b < 8; ++b) words[w] |= std::uint64_t{bytes[16 + 8 * w + b]} << (8 * b);
    }
    return BpRepresentation(std::move(words), 2 * n);
}

void write_bp(const std::filesystem::path& path, const BpRepresentation& bp) { write_file(path, encode_bp(bp)); }

BpRepresentation read_bp(const std::filesystem::path& path) { return decode_bp(read_file(path)); }

}  // namespace lynbwt
