// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lynbwt {

enum class Errc {
    io,
    sentinel_conflict,
    empty_input,
    malformed_header,
    width_overflow,
    empty_array,
    permutation_violation,
    not_a_permutation,
    non_terminating,
    length_mismatch,
    out_of_range,
    unbalanced,
    duplicate_push,
    invariant,
};

std::string_view to_string(Errc code) noexcept;

// All library failures surface as this exception; `code()` tells a data problem
// (bad input) apart from an internal invariant violation.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

inline std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::io: return "IoError";
        case Errc::sentinel_conflict: return "SentinelConflict";
        case Errc::empty_input: return "EmptyInput";
        case Errc::malformed_header: return "MalformedHeader";
        case Errc::width_overflow: return "WidthOverflow";
        case Errc::empty_array: return "EmptyArray";
        case Errc::permutation_violation: return "PermutationViolation";
        case Errc::not_a_permutation: return "NotAPermutation";
        case Errc::non_terminating: return "NonTerminating";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::unbalanced: return "Unbalanced";
        case Errc::duplicate_push: return "DuplicatePush";
        case Errc::invariant: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace lynbwt
