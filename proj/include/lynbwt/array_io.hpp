// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lynbwt/arrays.hpp"

namespace lynbwt {

// Binary layout: "LYNARR01", width byte (32|64), 7 zero bytes, u64 LE length,
// then the values little-endian at the stated width.
inline constexpr char kArrayMagic[8] = {'L', 'Y', 'N', 'A', 'R', 'R', '0', '1'};
inline constexpr std::size_t kArrayHeaderBytes = 24;

std::vector<std::uint8_t> encode_array(const IntArray& array);
IntArray read_array_from(std::span<const std::uint8_t> bytes);

void write_array(const std::filesystem::path& path, const IntArray& array);
IntArray read_array(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace lynbwt
