// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "lynbwt/array_io.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>

namespace lynbwt {

namespace {

constexpr std::int64_t kWidth32Limit = std::int64_t{1} << 31;

template <class U>
void put_le(std::vector<std::uint8_t>& out, U value) {
    for (std::size_t b = 0; b < sizeof(U); ++b) {
        out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * b)));
    }
}

template <class U>
U get_le(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < sizeof(U); ++b) v |= std::uint64_t{p[b]} << (8 * b);
    return static_cast<U>(v);
}

}  // namespace

IntArray IntArray::from_values(std::span<const std::int64_t> values, Width width) {
    if (values.empty()) throw Error(Errc::empty_array, "integer arrays have length >= 1");
    for (std::size_t k = 0; k < values.size(); ++k) {
        const auto v = values[k];
        if (v < 0) throw Error(Errc::width_overflow, "negative value at slot " + std::to_string(k));
        if (width == Width::w32 && v >= kWidth32Limit) {
            throw Error(Errc::width_overflow,
                        "value " + std::to_string(v) + " does not fit width 32 (limit 2^31)");
        }
    }
    IntArray out;
    if (width == Width::w32) {
        out.data_ = memory::tracked_vector<std::int32_t>(values.begin(), values.end());
    } else {
        out.data_ = memory::tracked_vector<std::int64_t>(values.begin(), values.end());
    }
    return out;
}

std::vector<std::int64_t> IntArray::to_vector() const {
    return std::visit([](const auto& v) { return std::vector<std::int64_t>(v.begin(), v.end()); },
                      data_);
}

std::vector<std::uint8_t> encode_array(const IntArray& array) {
    const auto width = static_cast<std::uint8_t>(array.width());
    std::vector<std::uint8_t> out;
    out.reserve(kArrayHeaderBytes + array.size() * width / 8);
    out.insert(out.end(), std::begin(kArrayMagic), std::end(kArrayMagic));
    out.push_back(width);
    out.insert(out.end(), 7, 0);
    put_le<std::uint64_t>(out, array.size());
    if (array.width() == Width::w32) {
        for (auto v : array.as<std::int32_t>()) put_le<std::uint32_t>(out, static_cast<std::uint32_t>(v));
    } else {
        for (auto v : array.as<std::int64_t>()) put_le<std::uint64_t>(out, static_cast<std::uint64_t>(v));
    }
    return out;
}

IntArray read_array_from(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kArrayHeaderBytes || !std::equal(std::begin(kArrayMagic), std::end(kArrayMagic), bytes.begin())) {
        throw Error(Errc::malformed_header, "missing LYNARR01 magic");
    }
    const auto width = bytes[8];
    if (width != 32 && width != 64) {
        throw Error(Errc::malformed_header, "width byte must be 32 or 64, got " + std::to_string(width));
    }
    if (std::any_of(bytes.begin() + 9, bytes.begin() + 16, [](auto b) { return b != 0; })) {
        throw Error(Errc::malformed_header, "reserved header bytes are not zero");
    }
    const auto n = get_le<std::uint64_t>(bytes.data() + 16);
    if (n == 0) throw Error(Errc::empty_array, "array length is 0");
    const auto payload = bytes.size() - kArrayHeaderBytes;
    if (n > payload / (width / 8) || payload != n * (width / 8)) {
        throw Error(Errc::malformed_header, "length field disagrees with payload size");
    }

    const auto* p = bytes.data() + kArrayHeaderBytes;
    IntArray out;
    if (width == 32) {
        memory::tracked_vector<std::int32_t> values(n);
        for (std::size_t k = 0; k < n; ++k, p += 4) {
            const auto raw = get_le<std::uint32_t>(p);
            if (raw >= std::uint32_t{1} << 31) {
                throw Error(Errc::malformed_header, "width-32 value >= 2^31 at slot " + std::to_string(k));
            }
            values[k] = static_cast<std::int32_t>(raw);
        }
        out.data_ = std::move(values);
    } else {
        memory::tracked_vector<std::int64_t> values(n);
        for (std::size_t k = 0; k < n; ++k, p += 8) {
            const auto raw = get_le<std::uint64_t>(p);
            if (raw >> 63) throw Error(Errc::malformed_header, "negative value at slot " + std::to_string(k));
            values[k] = static_cast<std::int64_t>(raw);
        }
        out.data_ = std::move(values);
    }
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io, "cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(Errc::io, "write failed for " + path.string());
}

void write_array(const std::filesystem::path& path, const IntArray& array) {
    write_file(path, encode_array(array));
}

IntArray read_array(const std::filesystem::path& path) { return read_array_from(read_file(path)); }

}  // namespace lynbwt
