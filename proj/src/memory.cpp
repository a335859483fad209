// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/memory.hpp"

#include <atomic>
#include <cstdint>
#include <new>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace lynbwt::memory {

namespace {

std::atomic<std::size_t> g_current{0};
std::atomic<std::size_t> g_peak{0};

}  // namespace

std::size_t current_bytes() noexcept { return g_current.load(std::memory_order_relaxed); }

std::size_t peak_bytes() noexcept { return g_peak.load(std::memory_order_relaxed); }

void reset_peak() noexcept { g_peak.store(current_bytes(), std::memory_order_relaxed); }

void on_allocate(std::size_t bytes) noexcept {
    const auto now = g_current.fetch_add(bytes, std::memory_order_relaxed) + bytes;
    auto seen = g_peak.load(std::memory_order_relaxed);
    while (now > seen && !g_peak.compare_exchange_weak(seen, now, std::memory_order_relaxed)) {
    }
}

void on_deallocate(std::size_t bytes) noexcept { g_current.fetch_sub(bytes, std::memory_order_relaxed); }

#if defined(__linux__)

namespace {

std::size_t round_up(std::size_t bytes, std::size_t unit) noexcept { return (bytes + unit - 1) / unit * unit; }

}  // namespace

// Large blocks are mapped directly, so every run sees fresh zero pages and
// returns them to the system on release, independent of malloc's thresholds.
void* allocate_bytes(std::size_t bytes) {
    if (bytes < kHugePageBytes) return ::operator new(bytes);
    const auto length = round_up(bytes, kHugePageBytes);
    void* raw = mmap(nullptr, length + kHugePageBytes, PROT_READ | PROT_WRITE, MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
    if (raw == MAP_FAILED) throw std::bad_alloc();
    const auto base = reinterpret_cast<std::uintptr_t>(raw);
    const auto aligned = round_up(base, kHugePageBytes);
    if (aligned > base) munmap(raw, aligned - base);
    const auto tail = base + length + kHugePageBytes - (aligned + length);
    if (tail > 0) munmap(reinterpret_cast<void*>(aligned + length), tail);
#if defined(MADV_HUGEPAGE)
    // Advisory only; failure leaves ordinary pages.
    (void)madvise(reinterpret_cast<void*>(aligned), length, MADV_HUGEPAGE);
#endif
    return reinterpret_cast<void*>(aligned);
}

void deallocate_bytes(void* p, std::size_t bytes) noexcept {
    if (bytes < kHugePageBytes) {
        ::operator delete(p);
    } else {
        munmap(p, round_up(bytes, kHugePageBytes));
    }
}

#else

void* allocate_bytes(std::size_t bytes) { return ::operator new(bytes); }

void deallocate_bytes(void* p, std::size_t) noexcept { ::operator delete(p); }

#endif

}  // namespace lynbwt::memory
