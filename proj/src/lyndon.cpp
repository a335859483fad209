// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/lyndon.hpp"

#include <algorithm>
#include <type_traits>

namespace lynbwt {

namespace {

// Right-to-left decode. At iteration `step` (i = n - step), `pos` is first
// advanced to ISA[i]; the stack then keeps the suffixes after i that are
// smaller than everything between them and i, so its top after popping is
// the next smaller suffix, pushed `top.step` iterations ago at position
// n - top.step. The bottom marker has step 0, i.e. position n.
struct NoObserver {};

template <IndexType I, class SymbolAtRow, class Observer = NoObserver>
void decode_with_lyndon(std::span<const I> lf, SymbolAtRow symbol_at_row, std::span<std::uint8_t> text,
                        std::span<I> lambda, StackStats* stats, Observer observe = {}) {
    const auto n = static_cast<I>(lf.size());
    text[n - 1] = kSentinel;
    lambda[n - 1] = 1;
    PairStack<I> stack;
    I pos = 1;  // row of ISA[n]
    I step = 1;
    for (I i = n - 1; i >= 1; --i, ++step) {
        text[i - 1] = symbol_at_row(pos);
        pos = lf[pos - 1];
        if constexpr (std::is_same_v<Observer, NoObserver>) {
            lambda[i - 1] = step - stack.pop_above(pos);
            stack.push(pos, step);
        } else {
            const auto pops_before = stack.stats().pops;
            lambda[i - 1] = step - stack.pop_above(pos);
            stack.push(pos, step);
            observe(step, i, pos, lambda[i - 1], stack.stats().pops - pops_before, stack);
        }
    }
    if (stats) *stats = stack.stats();
}

}  // namespace

template <IndexType I>
DecodedLyndon<I> bwt_lyndon(const BwtString& l, const LfArray<I>& lf, StackStats* stats) {
    const auto n = l.size();
    if (lf.size() != n) throw Error(Errc::length_mismatch, "LF and L differ in length");
    check_lf<I>(lf.values());
    memory::tracked_vector<std::uint8_t> text(n);
    LyndonArray<I> lambda(n);
    decode_with_lyndon<I>(lf.values(), [&](I row) { return l.at(static_cast<std::size_t>(row)); }, text,
                          lambda.values(), stats);
    return {Text::from_terminated(std::move(text)), std::move(lambda)};
}

template <IndexType I>
LyndonArray<I> bwt_lyndon_inplace(memory::tracked_vector<std::uint8_t>& l_then_text, const CountArray& c,
                                  std::span<const I> lf, memory::tracked_vector<I> scratch, StackStats* stats) {
    const auto n = l_then_text.size();
    if (lf.size() != n || scratch.size() != n) {
        throw Error(Errc::length_mismatch, "L, LF and scratch must have equal length");
    }
    // L[row] = F[LF[row]], so L itself is never read and can be overwritten.
    decode_with_lyndon<I>(lf, [&](I row) { return c.first_column(lf[row - 1]); }, l_then_text, scratch, stats);
    return LyndonArray<I>(std::move(scratch));
}

template <IndexType I>
LyndonArray<I> oracle_lyndon(const Text& t) {
    const auto n = t.size();
    const auto s = t.symbols();
    LyndonArray<I> lambda(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + 1;
        // The sentinel suffix is smaller than every other, so j <= n - 1 (0-based).
        while (j < n && !std::lexicographical_compare(s.begin() + j, s.end(), s.begin() + i, s.end())) ++j;
        lambda[i] = static_cast<I>(j < n ? j - i : 1);
    }
    return lambda;
}

template <IndexType I>
LyndonSaArray<I> lyndon_sa_permuted(const LyndonArray<I>& lambda, const SuffixArray<I>& sa) {
    if (lambda.size() != sa.size()) throw Error(Errc::length_mismatch, "lambda and SA differ in length");
    LyndonSaArray<I> out(sa.size());
    for (std::size_t k = 0; k < sa.size(); ++k) out[k] = lambda.at(static_cast<std::size_t>(sa[k]));
    return out;
}

template <IndexType I>
std::vector<LyndonStep> trace_bwt_lyndon(const BwtString& l, const LfArray<I>& lf) {
    const auto n = l.size();
    if (lf.size() != n) throw Error(Errc::length_mismatch, "LF and L differ in length");
    check_lf<I>(lf.values());
    memory::tracked_vector<std::uint8_t> text(n);
    LyndonArray<I> lambda(n);
    std::vector<LyndonStep> trace;
    auto record = [&](std::int64_t step, std::int64_t i, std::int64_t row, std::int64_t value, std::uint64_t pops,
                      const PairStack<I>& stack) {
        LyndonStep s{step, i, row, value, pops, {}};
        for (const auto& e : stack.entries()) s.stack.emplace_back(e.pos, e.step);
        trace.push_back(std::move(s));
    };
    decode_with_lyndon<I>(lf.values(), [&](I row) { return l.at(static_cast<std::size_t>(row)); }, text,
                          lambda.values(), nullptr, record);
    return trace;
}

template <IndexType I>
std::uint64_t stack_high_water(const BwtString& l, const LfArray<I>& lf) {
    StackStats stats;
    (void)bwt_lyndon<I>(l, lf, &stats);
    return stats.high_water;
}

#define LYNBWT_INSTANTIATE(I)                                                                             \
    template DecodedLyndon<I> bwt_lyndon<I>(const BwtString&, const LfArray<I>&, StackStats*);            \
    template LyndonArray<I> bwt_lyndon_inplace<I>(memory::tracked_vector<std::uint8_t>&, const CountArray&, \
                                                  std::span<const I>, memory::tracked_vector<I>, StackStats*); \
    template LyndonArray<I> oracle_lyndon<I>(const Text&);                                                 \
    template LyndonSaArray<I> lyndon_sa_permuted<I>(const LyndonArray<I>&, const SuffixArray<I>&);         \
    template std::vector<LyndonStep> trace_bwt_lyndon<I>(const BwtString&, const LfArray<I>&);                 \
    template std::uint64_t stack_high_water<I>(const BwtString&, const LfArray<I>&);

LYNBWT_INSTANTIATE(std::int32_t)
LYNBWT_INSTANTIATE(std::int64_t)

#undef LYNBWT_INSTANTIATE

}  // namespace lynbwt
