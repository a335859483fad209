// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "lynbwt/arrays.hpp"
#include "lynbwt/bitvector.hpp"
#include "lynbwt/text.hpp"

namespace lynbwt {

/// Last column of the sorted rotation matrix. The sentinel stays inside.
class BwtString {
  public:
    // Throws SentinelConflict unless byte 0 occurs exactly once.
    static BwtString from_bytes(std::span<const std::uint8_t> bytes);
    static BwtString from_symbols(memory::tracked_vector<std::uint8_t> symbols);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    std::uint8_t operator[](std::size_t k) const noexcept { return symbols_[k]; }
    [[nodiscard]] std::uint8_t at(std::size_t i) const noexcept { return symbols_[i - 1]; }
    [[nodiscard]] std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }
    [[nodiscard]] std::string to_display() const;

    [[nodiscard]] memory::tracked_vector<std::uint8_t> release() && noexcept {
        return std::move(symbols_);
    }

    friend bool operator==(const BwtString&, const BwtString&) = default;

  private:
    explicit BwtString(memory::tracked_vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {}
    memory::tracked_vector<std::uint8_t> symbols_;
};

/// c[a] = number of symbols strictly smaller than a.
class CountArray {
  public:
    static CountArray from_symbols(std::span<const std::uint8_t> symbols);

    std::int64_t operator[](std::uint8_t symbol) const noexcept { return starts_[symbol]; }
    [[nodiscard]] std::int64_t frequency(std::uint8_t symbol) const noexcept {
        return starts_[symbol + 1] - starts_[symbol];
    }
    [[nodiscard]] bool present(std::uint8_t symbol) const noexcept { return frequency(symbol) > 0; }
    [[nodiscard]] std::int64_t total() const noexcept { return starts_[256]; }
    // Present symbols in increasing order; its size is sigma.
    [[nodiscard]] std::span<const std::uint8_t> alphabet() const noexcept {
        return {alphabet_.data(), static_cast<std::size_t>(sigma_)};
    }
    [[nodiscard]] int sigma() const noexcept { return sigma_; }
    /// First-column symbol of row `row` (1-based). Branch-free search for the
    /// last symbol whose first row is <= row; absent symbols never win since
    /// they share their start with the next symbol.
    [[nodiscard]] std::uint8_t first_column(std::int64_t row) const noexcept {
        const auto r = row - 1;
        std::size_t s = 0;
        for (std::size_t step = 128; step > 0; step >>= 1) s += starts_[s + step] <= r ? step : 0;
        return static_cast<std::uint8_t>(s);
    }

  private:
    std::array<std::int64_t, 257> starts_{};
    std::array<std::uint8_t, 256> alphabet_{};
    int sigma_ = 0;
};

template <IndexType I>
BwtString bwt_from_sa(const Text& t, const SuffixArray<I>& sa);

CountArray count_array(const BwtString& l);

/// lf[i] = c[l[i]] + occurrences of l[i] in l[1..i].
template <IndexType I>
LfArray<I> lf_array(const BwtString& l, const CountArray& c);

/// Decodes right to left from row 1 (the row of the sentinel suffix).
/// Throws NotAPermutation for a malformed LF and NonTerminating when the LF
/// cycle through row 1 does not cover all n rows.
template <IndexType I>
Text invert_bwt(const BwtString& l, const LfArray<I>& lf);

/// Checks that lf is a permutation of 1..n whose cycle through row 1 has
/// length n. Shared by the decoders.
template <IndexType I>
void check_lf(std::span<const I> lf);

/// F[j] = 1 iff row j is the first row starting with its symbol.
class FBitvector {
  public:
    FBitvector(const CountArray& c, std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool test(std::size_t j) const noexcept { return bits_.test(j); }
    [[nodiscard]] std::size_t rank1(std::size_t j) const noexcept { return bits_.rank1(j); }
    [[nodiscard]] std::size_t select1(std::size_t k) const noexcept { return bits_.select1(k); }
    [[nodiscard]] std::size_t ones() const noexcept { return bits_.ones(); }

  private:
    RankSelectBitvector bits_;
};

inline FBitvector f_bitvector(const CountArray& c, std::size_t n) { return FBitvector(c, n); }

/// Psi, the inverse of LF, computed from select queries on L and rank/select
/// on F. Select on L uses per-symbol sorted occurrence lists.
template <IndexType I>
class PsiView {
  public:
    explicit PsiView(const BwtString& l);

    [[nodiscard]] std::size_t size() const noexcept { return occurrences_.size(); }
    /// Psi(i) = select_{c_i}(L, i - select_1(F, c_i) + 1), c_i = rank_1(F, i).
    /// Psi(1) is the position of the sentinel in L, i.e. ISA[1]. Throws OutOfRange.
    [[nodiscard]] I psi_at(std::size_t i) const;
    /// Position of the k-th occurrence of `symbol` in L.
    [[nodiscard]] I select(std::uint8_t symbol, std::size_t k) const noexcept {
        return occurrences_[static_cast<std::size_t>(counts_[symbol]) + k - 1];
    }
    [[nodiscard]] const FBitvector& f() const noexcept { return f_; }
    [[nodiscard]] const CountArray& counts() const noexcept { return counts_; }

  private:
    CountArray counts_;
    FBitvector f_;
    // Occurrences of each symbol, grouped by symbol, each group sorted.
    memory::tracked_vector<I> occurrences_;
};

/// Streams ISA[1], ..., ISA[n]: ISA[1] = Psi(1), ISA[i] = Psi(ISA[i-1]).
template <IndexType I>
class IsaStream {
  public:
    explicit IsaStream(const PsiView<I>& psi) : psi_(&psi) {}

    class iterator {
      public:
        using iterator_category = std::input_iterator_tag;
        using value_type = I;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const PsiView<I>* psi, std::size_t remaining)
            : psi_(psi), remaining_(remaining), value_(remaining ? psi->psi_at(1) : 0) {}

        I operator*() const noexcept { return value_; }
        iterator& operator++() {
            if (--remaining_ > 0) value_ = psi_->psi_at(static_cast<std::size_t>(value_));
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const noexcept { return remaining_ == 0; }

      private:
        const PsiView<I>* psi_ = nullptr;
        std::size_t remaining_ = 0;
        I value_ = 0;
    };

    [[nodiscard]] iterator begin() const { return iterator(psi_, psi_->size()); }
    [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }
    [[nodiscard]] std::size_t size() const noexcept { return psi_->size(); }

  private:
    const PsiView<I>* psi_;
};

template <IndexType I>
InverseSuffixArray<I> collect_isa(const PsiView<I>& psi) {
    InverseSuffixArray<I> isa(psi.size());
    std::size_t k = 0;
    for (auto v : IsaStream<I>(psi)) isa[k++] = v;
    return isa;
}

}  // namespace lynbwt
