// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include "lynbwt/arrays.hpp"
#include "lynbwt/text.hpp"

namespace lynbwt {

enum class SuffixSorter {
    induced,  // SA-IS, linear time
    naive,    // comparison sort of suffixes, test oracle
};

/// Suffix array of `t` (1-based positions). The sentinel suffix comes first.
template <IndexType I>
SuffixArray<I> build_sa(const Text& t, SuffixSorter sorter = SuffixSorter::induced);

/// isa[sa[i]] = i. Throws PermutationViolation when `sa` is not a permutation of 1..n.
template <IndexType I>
InverseSuffixArray<I> invert_sa(const SuffixArray<I>& sa);

/// Counters for the auxiliary stack of an NSV or Lyndon construction.
struct StackStats {
    std::uint64_t pushes = 0;
    std::uint64_t pops = 0;
    std::uint64_t high_water = 0;  // entries, excluding any bottom marker
    std::size_t entry_bytes = 0;
};

/// Next smaller value: nsv[i] = min({n+1} u {j > i : a[j] < a[i]}).
/// Equal values do not stop the scan.
template <IndexType I>
NsvArray<I> compute_nsv(std::span<const I> a, StackStats* stats = nullptr);

/// Same as compute_nsv but overwrites `a` with the result.
template <IndexType I>
void compute_nsv_inplace(std::span<I> a, StackStats* stats = nullptr);

/// lambda[i] = NSV_ISA[i] - i.
template <IndexType I>
LyndonArray<I> lyndon_from_nsv(const Text& t, StackStats* stats = nullptr);

}  // namespace lynbwt
