// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "lynbwt/error.hpp"
#include "lynbwt/memory.hpp"

namespace lynbwt {

// Index types used for all integer arrays. Width 32 mirrors the 4n-byte
// arrays of the reference experiments; width 64 lifts the 2^31 length limit.
template <class T>
concept IndexType = std::same_as<T, std::int32_t> || std::same_as<T, std::int64_t>;

enum class Width : std::uint8_t { w32 = 32, w64 = 64 };

/// A length-n array of 1-based positions or lengths. Storage is 0-based:
/// slot k holds the value for position k + 1, also reachable as `at(k + 1)`.
/// The tag keeps SA, ISA, LF, ... from being mixed up.
template <class Tag, IndexType Index>
class IndexArray {
  public:
    using value_type = Index;
    using storage_type = memory::tracked_vector<Index>;

    IndexArray() = default;
    explicit IndexArray(std::size_t n) : values_(n) {}
    explicit IndexArray(storage_type values) : values_(std::move(values)) {}
    IndexArray(std::initializer_list<Index> values) : values_(values) {}

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }

    Index operator[](std::size_t k) const noexcept { return values_[k]; }
    Index& operator[](std::size_t k) noexcept { return values_[k]; }

    // 1-based access.
    [[nodiscard]] Index at(std::size_t i) const noexcept { return values_[i - 1]; }

    [[nodiscard]] std::span<const Index> values() const noexcept { return values_; }
    [[nodiscard]] std::span<Index> values() noexcept { return values_; }

    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

    // Hands the storage over so another array can reuse it in place.
    [[nodiscard]] storage_type release() && noexcept { return std::move(values_); }

    friend bool operator==(const IndexArray&, const IndexArray&) = default;

  private:
    storage_type values_;
};

struct SuffixTag;
struct InverseSuffixTag;
struct NsvTag;
struct LfTag;
struct LyndonTag;
struct LyndonSaTag;

template <IndexType I> using SuffixArray = IndexArray<SuffixTag, I>;
template <IndexType I> using InverseSuffixArray = IndexArray<InverseSuffixTag, I>;
template <IndexType I> using NsvArray = IndexArray<NsvTag, I>;
template <IndexType I> using LfArray = IndexArray<LfTag, I>;
template <IndexType I> using LyndonArray = IndexArray<LyndonTag, I>;
template <IndexType I> using LyndonSaArray = IndexArray<LyndonSaTag, I>;

/// Width-erased integer array used for serialization and the CLI.
/// Invariant: length >= 1, and every value < 2^31 when the width is 32.
class IntArray {
  public:
    // Throws EmptyArray, or WidthOverflow if a value does not fit the width.
    static IntArray from_values(std::span<const std::int64_t> values, Width width);

    template <class Tag, IndexType I>
    static IntArray from(const IndexArray<Tag, I>& array) {
        if (array.empty()) throw Error(Errc::empty_array, "integer arrays have length >= 1");
        IntArray out;
        out.data_ = memory::tracked_vector<I>(array.begin(), array.end());
        return out;
    }

    [[nodiscard]] Width width() const noexcept {
        return std::holds_alternative<memory::tracked_vector<std::int32_t>>(data_) ? Width::w32
                                                                                   : Width::w64;
    }
    [[nodiscard]] std::size_t size() const noexcept {
        return std::visit([](const auto& v) { return v.size(); }, data_);
    }
    [[nodiscard]] std::int64_t operator[](std::size_t k) const noexcept {
        return std::visit([k](const auto& v) { return static_cast<std::int64_t>(v[k]); }, data_);
    }
    [[nodiscard]] std::vector<std::int64_t> to_vector() const;

    // View at the stored width; empty span if `I` does not match.
    template <IndexType I>
    [[nodiscard]] std::span<const I> as() const noexcept {
        if (const auto* v = std::get_if<memory::tracked_vector<I>>(&data_)) return *v;
        return {};
    }

    friend bool operator==(const IntArray& a, const IntArray& b) { return a.data_ == b.data_; }

  private:
    friend IntArray read_array_from(std::span<const std::uint8_t>);
    std::variant<memory::tracked_vector<std::int32_t>, memory::tracked_vector<std::int64_t>> data_;
};

}  // namespace lynbwt
