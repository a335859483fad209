// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/suffix.hpp"

#include <algorithm>
#include <numeric>

#include "sais.hpp"

namespace lynbwt {

namespace {

template <IndexType I>
void check_fits(std::size_t n) {
    if (n >= static_cast<std::size_t>(std::numeric_limits<I>::max())) {
        throw Error(Errc::width_overflow,
                    "text of length " + std::to_string(n) + " needs a wider index type");
    }
}

// Position/value pairs let the NSV scan overwrite its input.
template <IndexType I>
struct NsvEntry {
    I pos;
    I value;
};

}  // namespace

template <IndexType I>
SuffixArray<I> build_sa(const Text& t, SuffixSorter sorter) {
    const auto n = t.size();
    check_fits<I>(n);
    SuffixArray<I> sa(n);
    auto out = sa.values();
    if (sorter == SuffixSorter::naive) {
        std::iota(out.begin(), out.end(), I{0});
        const auto s = t.symbols();
        std::sort(out.begin(), out.end(), [&](I a, I b) {
            return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
        });
    } else {
        detail::SaisLevel<I>::run(t.symbols(), out, I{256});
    }
    for (auto& v : out) ++v;
    return sa;
}

template <IndexType I>
InverseSuffixArray<I> invert_sa(const SuffixArray<I>& sa) {
    const auto n = sa.size();
    InverseSuffixArray<I> isa(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = sa[k];
        if (v < 1 || static_cast<std::size_t>(v) > n || isa[v - 1] != 0) {
            throw Error(Errc::permutation_violation,
                        "value " + std::to_string(v) + " at SA slot " + std::to_string(k + 1));
        }
        isa[v - 1] = static_cast<I>(k + 1);
    }
    return isa;
}

template <IndexType I>
void compute_nsv_inplace(std::span<I> a, StackStats* stats) {
    const auto n = static_cast<I>(a.size());
    memory::tracked_vector<NsvEntry<I>> stack;
    StackStats local;
    local.entry_bytes = sizeof(NsvEntry<I>);
    for (I i = n; i >= 1; --i) {
        const I value = a[i - 1];
        while (!stack.empty() && stack.back().value >= value) {
            stack.pop_back();
            ++local.pops;
        }
        a[i - 1] = stack.empty() ? n + 1 : stack.back().pos;
        stack.push_back({i, value});
        ++local.pushes;
        local.high_water = std::max<std::uint64_t>(local.high_water, stack.size());
    }
    if (stats) *stats = local;
}

template <IndexType I>
NsvArray<I> compute_nsv(std::span<const I> a, StackStats* stats) {
    check_fits<I>(a.size());
    NsvArray<I> nsv(typename NsvArray<I>::storage_type(a.begin(), a.end()));
    compute_nsv_inplace<I>(nsv.values(), stats);
    return nsv;
}

template <IndexType I>
LyndonArray<I> lyndon_from_nsv(const Text& t, StackStats* stats) {
    auto isa = invert_sa(build_sa<I>(t)).release();
    compute_nsv_inplace<I>(isa, stats);
    for (std::size_t k = 0; k < isa.size(); ++k) isa[k] -= static_cast<I>(k + 1);
    return LyndonArray<I>(std::move(isa));
}

#define LYNBWT_INSTANTIATE(I)                                                        \
    template SuffixArray<I> build_sa<I>(const Text&, SuffixSorter);                  \
    template InverseSuffixArray<I> invert_sa<I>(const SuffixArray<I>&);              \
    template NsvArray<I> compute_nsv<I>(std::span<const I>, StackStats*);            \
    template void compute_nsv_inplace<I>(std::span<I>, StackStats*);                 \
    template LyndonArray<I> lyndon_from_nsv<I>(const Text&, StackStats*);

LYNBWT_INSTANTIATE(std::int32_t)
LYNBWT_INSTANTIATE(std::int64_t)

#undef LYNBWT_INSTANTIATE

}  // namespace lynbwt
