// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lynbwt/arrays.hpp"
#include "lynbwt/bwt.hpp"
#include "lynbwt/suffix.hpp"
#include "lynbwt/text.hpp"

namespace lynbwt {

/// Stack of <row, step> pairs used while decoding. The bottom marker
/// <-1, 0> is stored explicitly; it stands for the sentinel suffix and is
/// never popped since -1 is below every row.
template <IndexType I>
class PairStack {
  public:
    struct Entry {
        I pos;
        I step;
    };

    PairStack() { entries_.push_back({-1, 0}); }

    // Pops every entry whose row is above `pos` and returns the step of the
    // remaining top.
    I pop_above(I pos) noexcept {
        while (entries_.back().pos > pos) {
            entries_.pop_back();
            ++stats_.pops;
        }
        return entries_.back().step;
    }

    void push(I pos, I step) {
        entries_.push_back({pos, step});
        ++stats_.pushes;
        if (depth() > stats_.high_water) stats_.high_water = depth();
    }

    [[nodiscard]] const Entry& top() const noexcept { return entries_.back(); }
    // Entries above the bottom marker.
    [[nodiscard]] std::size_t depth() const noexcept { return entries_.size() - 1; }
    [[nodiscard]] std::span<const Entry> entries() const noexcept { return entries_; }
    [[nodiscard]] StackStats stats() const noexcept {
        auto s = stats_;
        s.entry_bytes = sizeof(Entry);
        return s;
    }

  private:
    memory::tracked_vector<Entry> entries_;
    StackStats stats_;
};

template <IndexType I>
struct DecodedLyndon {
    Text text;
    LyndonArray<I> lambda;
};

/// Inverts the BWT and computes the Lyndon array on the way, walking the
/// text right to left with LF. Validates `lf` like invert_bwt.
template <IndexType I>
DecodedLyndon<I> bwt_lyndon(const BwtString& l, const LfArray<I>& lf, StackStats* stats = nullptr);

/// Space-saving form for pipelines: the text is decoded into the buffer that
/// held L (symbols come from the first column via `c`, so L is not read), and
/// lambda overwrites `scratch`, typically the storage of the suffix array.
/// `lf` is trusted.
template <IndexType I>
LyndonArray<I> bwt_lyndon_inplace(memory::tracked_vector<std::uint8_t>& l_then_text, const CountArray& c,
                                  std::span<const I> lf, memory::tracked_vector<I> scratch,
                                  StackStats* stats = nullptr);

/// Definitional construction: lambda[i] = j - i for the first j > i whose
/// suffix is smaller than suffix i. Quadratic in the worst case.
template <IndexType I>
LyndonArray<I> oracle_lyndon(const Text& t);

/// out[i] = lambda[sa[i]].
template <IndexType I>
LyndonSaArray<I> lyndon_sa_permuted(const LyndonArray<I>& lambda, const SuffixArray<I>& sa);

/// State after one decoding iteration.
struct LyndonStep {
    std::int64_t step = 0;
    std::int64_t position = 0;  // text position i whose lambda was set
    std::int64_t row = 0;       // ISA[i]
    std::int64_t lambda = 0;
    std::uint64_t pops = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> stack;  // <row, step>, bottom marker first
};

/// bwt_lyndon with a snapshot of the stack after every iteration.
template <IndexType I>
std::vector<LyndonStep> trace_bwt_lyndon(const BwtString& l, const LfArray<I>& lf);

/// Deepest the pair stack gets during bwt_lyndon (bottom marker excluded).
template <IndexType I>
std::uint64_t stack_high_water(const BwtString& l, const LfArray<I>& lf);

}  // namespace lynbwt
