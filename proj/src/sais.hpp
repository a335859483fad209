// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

// Induced-sorting suffix array construction over a text whose last symbol is
// the unique smallest one. Works on 0-based positions; the reduced problem of
// each recursion level lives inside the output buffer.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

#include "lynbwt/memory.hpp"

namespace lynbwt::detail {

template <class Index>
class SaisLevel {
  public:
    using Types = std::vector<bool, memory::CountingAllocator<bool>>;

    template <class Sym>
    static void run(std::span<const Sym> s, std::span<Index> sa, Index alphabet) {
        const auto n = static_cast<Index>(s.size());
        if (n == 1) {
            sa[0] = 0;
            return;
        }

        // true = S-type
        Types stype(static_cast<std::size_t>(n));
        stype[n - 1] = true;
        for (Index i = n - 2; i >= 0; --i) {
            stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
        }
        auto is_lms = [&](Index i) { return i > 0 && stype[i] && !stype[i - 1]; };

        memory::tracked_vector<Index> bucket(static_cast<std::size_t>(alphabet) + 1);

        // Stage 1: sort LMS substrings.
        bucket_ends(s, bucket, true);
        std::fill(sa.begin(), sa.end(), Index{-1});
        for (Index i = 1; i < n; ++i) {
            if (is_lms(i)) sa[--bucket[s[i]]] = i;
        }
        induce(s, sa, stype, bucket);

        Index lms_count = 0;
        for (Index k = 0; k < n; ++k) {
            if (is_lms(sa[k])) sa[lms_count++] = sa[k];
        }

        // Name LMS substrings; names land in sa[lms_count + pos / 2].
        std::fill(sa.begin() + lms_count, sa.end(), Index{-1});
        Index names = 0;
        Index prev = -1;
        for (Index k = 0; k < lms_count; ++k) {
            const Index pos = sa[k];
            bool differs = false;
            for (Index d = 0; d < n; ++d) {
                if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                    differs = true;
                    break;
                }
                if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
            }
            if (differs) {
                ++names;
                prev = pos;
            }
            sa[lms_count + pos / 2] = names - 1;
        }
        for (Index k = n - 1, j = n - 1; k >= lms_count; --k) {
            if (sa[k] >= 0) sa[j--] = sa[k];
        }

        // Stage 2: sort the reduced string.
        auto reduced = sa.subspan(static_cast<std::size_t>(n - lms_count));
        auto reduced_sa = sa.first(static_cast<std::size_t>(lms_count));
        if (names < lms_count) {
            run(std::span<const Index>(reduced), reduced_sa, names);
        } else {
            for (Index k = 0; k < lms_count; ++k) reduced_sa[reduced[k]] = k;
        }

        // Stage 3: induce the full order from the sorted LMS suffixes.
        for (Index i = 1, j = 0; i < n; ++i) {
            if (is_lms(i)) reduced[j++] = i;
        }
        for (Index k = 0; k < lms_count; ++k) reduced_sa[k] = reduced[reduced_sa[k]];
        std::fill(sa.begin() + lms_count, sa.end(), Index{-1});
        bucket_ends(s, bucket, true);
        for (Index k = lms_count - 1; k >= 0; --k) {
            const Index j = sa[k];
            sa[k] = -1;
            sa[--bucket[s[j]]] = j;
        }
        induce(s, sa, stype, bucket);
    }

  private:
    template <class Sym>
    static void bucket_ends(std::span<const Sym> s, memory::tracked_vector<Index>& bucket, bool ends) {
        std::fill(bucket.begin(), bucket.end(), Index{0});
        for (auto c : s) ++bucket[static_cast<std::size_t>(c)];
        Index sum = 0;
        for (auto& b : bucket) {
            sum += b;
            b = ends ? sum : sum - b;
        }
    }

    template <class Sym>
    static void induce(std::span<const Sym> s, std::span<Index> sa, const Types& stype,
                       memory::tracked_vector<Index>& bucket) {
        const auto n = static_cast<Index>(s.size());
        bucket_ends(s, bucket, false);
        for (Index k = 0; k < n; ++k) {
            const Index j = sa[k] - 1;
            if (j >= 0 && !stype[j]) sa[bucket[s[j]]++] = j;
        }
        bucket_ends(s, bucket, true);
        for (Index k = n - 1; k >= 0; --k) {
            const Index j = sa[k] - 1;
            if (j >= 0 && stype[j]) sa[--bucket[s[j]]] = j;
        }
    }
};

}  // namespace lynbwt::detail
