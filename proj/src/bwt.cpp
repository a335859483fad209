// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/bwt.hpp"

#include <algorithm>

namespace lynbwt {

BwtString BwtString::from_bytes(std::span<const std::uint8_t> bytes) {
    return from_symbols(memory::tracked_vector<std::uint8_t>(bytes.begin(), bytes.end()));
}

BwtString BwtString::from_symbols(memory::tracked_vector<std::uint8_t> symbols) {
    const auto sentinels = std::count(symbols.begin(), symbols.end(), kSentinel);
    if (sentinels != 1) {
        throw Error(Errc::sentinel_conflict,
                    "a BWT holds exactly one byte 0, found " + std::to_string(sentinels));
    }
    return BwtString(std::move(symbols));
}

std::string BwtString::to_display() const {
    std::string out(symbols_.begin(), symbols_.end());
    std::replace(out.begin(), out.end(), '\0', '$');
    return out;
}

CountArray CountArray::from_symbols(std::span<const std::uint8_t> symbols) {
    CountArray c;
    std::array<std::int64_t, 256> freq{};
    for (auto s : symbols) ++freq[s];
    for (int a = 0; a < 256; ++a) {
        c.starts_[a + 1] = c.starts_[a] + freq[a];
        if (freq[a] > 0) c.alphabet_[c.sigma_++] = static_cast<std::uint8_t>(a);
    }
    return c;
}

template <IndexType I>
BwtString bwt_from_sa(const Text& t, const SuffixArray<I>& sa) {
    memory::tracked_vector<std::uint8_t> l(sa.size());
    for (std::size_t k = 0; k < sa.size(); ++k) {
        const auto p = sa[k];
        l[k] = p == 1 ? kSentinel : t.at(static_cast<std::size_t>(p - 1));
    }
    return BwtString::from_symbols(std::move(l));
}

CountArray count_array(const BwtString& l) { return CountArray::from_symbols(l.symbols()); }

template <IndexType I>
LfArray<I> lf_array(const BwtString& l, const CountArray& c) {
    if (c.total() != static_cast<std::int64_t>(l.size())) {
        throw Error(Errc::length_mismatch, "count array does not describe this BWT");
    }
    std::array<I, 256> next{};
    for (int a = 0; a < 256; ++a) next[a] = static_cast<I>(c[static_cast<std::uint8_t>(a)]);
    LfArray<I> lf(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) lf[k] = ++next[l[k]];
    return lf;
}

template <IndexType I>
void check_lf(std::span<const I> lf) {
    const auto n = lf.size();
    std::vector<bool, memory::CountingAllocator<bool>> seen(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = lf[k];
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) {
            throw Error(Errc::not_a_permutation,
                        "LF value " + std::to_string(v) + " at row " + std::to_string(k + 1));
        }
        seen[v - 1] = true;
    }
    std::size_t cycle = 1;
    for (auto pos = static_cast<std::size_t>(lf[0]); pos != 1; pos = static_cast<std::size_t>(lf[pos - 1])) {
        ++cycle;
    }
    if (cycle != n) {
        throw Error(Errc::non_terminating, "LF cycle through row 1 has length " + std::to_string(cycle) +
                                               ", expected " + std::to_string(n));
    }
}

template <IndexType I>
Text invert_bwt(const BwtString& l, const LfArray<I>& lf) {
    const auto n = l.size();
    if (lf.size() != n) throw Error(Errc::length_mismatch, "LF and L differ in length");
    check_lf<I>(lf.values());
    memory::tracked_vector<std::uint8_t> t(n);
    t[n - 1] = kSentinel;
    std::size_t pos = 1;  // row of ISA[n]
    for (std::size_t i = n - 1; i >= 1; --i) {
        t[i - 1] = l.at(pos);
        pos = static_cast<std::size_t>(lf.at(pos));
    }
    return Text::from_terminated(std::move(t));
}

FBitvector::FBitvector(const CountArray& c, std::size_t n) {
    word_vector words((n + 63) / 64);
    for (auto a : c.alphabet()) {
        const auto j = static_cast<std::size_t>(c[a]);  // 0-based slot of row c[a] + 1
        words[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    bits_ = RankSelectBitvector(std::move(words), n);
}

template <IndexType I>
PsiView<I>::PsiView(const BwtString& l)
    : counts_(count_array(l)), f_(counts_, l.size()), occurrences_(l.size()) {
    std::array<std::int64_t, 256> next{};
    for (int a = 0; a < 256; ++a) next[a] = counts_[static_cast<std::uint8_t>(a)];
    for (std::size_t k = 0; k < l.size(); ++k) {
        occurrences_[static_cast<std::size_t>(next[l[k]]++)] = static_cast<I>(k + 1);
    }
}

template <IndexType I>
I PsiView<I>::psi_at(std::size_t i) const {
    if (i < 1 || i > size()) {
        throw Error(Errc::out_of_range, "psi index " + std::to_string(i) + " outside 1.." + std::to_string(size()));
    }
    const auto symbol_rank = f_.rank1(i);
    const auto symbol = counts_.alphabet()[symbol_rank - 1];
    return select(symbol, i - f_.select1(symbol_rank) + 1);
}

#define LYNBWT_INSTANTIATE(I)                                                 \
    template BwtString bwt_from_sa<I>(const Text&, const SuffixArray<I>&);    \
    template LfArray<I> lf_array<I>(const BwtString&, const CountArray&);     \
    template Text invert_bwt<I>(const BwtString&, const LfArray<I>&);         \
    template void check_lf<I>(std::span<const I>);                            \
    template class PsiView<I>;

LYNBWT_INSTANTIATE(std::int32_t)
LYNBWT_INSTANTIATE(std::int64_t)

#undef LYNBWT_INSTANTIATE

}  // namespace lynbwt
