// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <new>
#include <vector>

namespace lynbwt::memory {

// Process-wide accounting for every allocation that goes through
// CountingAllocator. Untracked allocations (small std::string, iostreams, ...)
// are not counted.
std::size_t current_bytes() noexcept;
std::size_t peak_bytes() noexcept;

// Sets the peak to the current level so a new measurement window can start.
void reset_peak() noexcept;

void on_allocate(std::size_t bytes) noexcept;
void on_deallocate(std::size_t bytes) noexcept;

// Raw storage for tracked arrays. Blocks of at least kHugePageBytes are
// aligned to it and marked for transparent huge pages where supported:
// the LF walk and the suffix sorter touch memory at random, and with 4 KiB
// pages the TLB stops covering the arrays at a few MiB.
inline constexpr std::size_t kHugePageBytes = std::size_t{2} << 20;
void* allocate_bytes(std::size_t bytes);
void deallocate_bytes(void* p, std::size_t bytes) noexcept;

template <class T>
struct CountingAllocator {
    using value_type = T;

    CountingAllocator() noexcept = default;
    template <class U>
    CountingAllocator(const CountingAllocator<U>&) noexcept {}

    T* allocate(std::size_t count) {
        auto* p = static_cast<T*>(allocate_bytes(count * sizeof(T)));
        on_allocate(count * sizeof(T));
        return p;
    }

    void deallocate(T* p, std::size_t count) noexcept {
        on_deallocate(count * sizeof(T));
        deallocate_bytes(p, count * sizeof(T));
    }

    template <class U>
    bool operator==(const CountingAllocator<U>&) const noexcept {
        return true;
    }
};

template <class T>
using tracked_vector = std::vector<T, CountingAllocator<T>>;

// Measures the peak of tracked memory over its lifetime, relative to a
// baseline level.
class PeakWindow {
  public:
    explicit PeakWindow(std::size_t baseline = current_bytes()) noexcept : baseline_(baseline) {
        reset_peak();
    }

    [[nodiscard]] std::size_t peak() const noexcept {
        const auto p = peak_bytes();
        return p > baseline_ ? p - baseline_ : 0;
    }

  private:
    std::size_t baseline_;
};

}  // namespace lynbwt::memory
