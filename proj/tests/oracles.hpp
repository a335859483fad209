// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations. They work on plain std::string /
// std::vector and follow the textbook definitions, never the library code.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace lynbwt::oracle {

using Values = std::vector<std::int64_t>;

// s includes its trailing '\0'.
inline Values suffix_array(const std::string& s) {
    Values sa(s.size());
    std::iota(sa.begin(), sa.end(), 1);
    std::sort(sa.begin(), sa.end(), [&](auto a, auto b) { return s.substr(a - 1) < s.substr(b - 1); });
    return sa;
}

inline Values inverse(const Values& perm) {
    Values inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k] - 1] = static_cast<std::int64_t>(k + 1);
    return inv;
}

inline Values nsv(const Values& a) {
    const auto n = a.size();
    Values out(n, static_cast<std::int64_t>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j] < a[i]) {
                out[i] = static_cast<std::int64_t>(j + 1);
                break;
            }
        }
    }
    return out;
}

// Strictly smaller than each of its proper rotations.
inline bool is_lyndon(const std::string& w) {
    for (std::size_t r = 1; r < w.size(); ++r) {
        if (!(w < w.substr(r) + w.substr(0, r))) return false;
    }
    return !w.empty();
}

// Longest Lyndon prefix of each suffix, by rotation tests.
inline Values lyndon_by_rotations(const std::string& s) {
    Values out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t len = s.size() - i; len >= 1; --len) {
            if (is_lyndon(s.substr(i, len))) {
                out[i] = static_cast<std::int64_t>(len);
                break;
            }
        }
    }
    return out;
}

// Last column of the sorted rotation matrix.
inline std::string bwt_by_rotations(const std::string& s) {
    std::vector<std::string> rot;
    for (std::size_t r = 0; r < s.size(); ++r) rot.push_back(s.substr(r) + s.substr(0, r));
    std::sort(rot.begin(), rot.end());
    std::string l;
    for (const auto& r : rot) l.push_back(r.back());
    return l;
}

// If l[i] is the k-th occurrence of a, LF(i) is the k-th row whose first symbol is a.
inline Values lf_by_definition(const std::string& l) {
    std::string f = l;
    std::sort(f.begin(), f.end());
    Values lf(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        const auto k = std::count(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i) + 1, l[i]);
        std::int64_t seen = 0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f[j] == l[i] && ++seen == k) {
                lf[i] = static_cast<std::int64_t>(j + 1);
                break;
            }
        }
    }
    return lf;
}

// Parentheses from lambda: for each i an open, then a close for every
// Lyndon interval [j, j + lambda[j] - 1] ending at i.
inline std::string bp_from_lambda(const Values& lambda) {
    std::string out;
    const auto n = static_cast<std::int64_t>(lambda.size());
    for (std::int64_t i = 1; i <= n; ++i) {
        out.push_back('(');
        for (std::int64_t j = 1; j <= i; ++j) {
            if (j + lambda[j - 1] - 1 == i) out.push_back(')');
        }
    }
    return out;
}

// 1-based position of the i-th '(' and of its matching ')'.
inline std::pair<std::size_t, std::size_t> open_close(const std::string& bp, std::size_t i) {
    std::size_t seen = 0;
    for (std::size_t p = 0; p < bp.size(); ++p) {
        if (bp[p] == '(' && ++seen == i) {
            int depth = 0;
            for (std::size_t q = p; q < bp.size(); ++q) {
                depth += bp[q] == '(' ? 1 : -1;
                if (depth == 0) return {p + 1, q + 1};
            }
        }
    }
    return {0, 0};
}

// Deepest stack of the right-to-left decode: after handling position i the
// stack holds the strict prefix-minimum records of ISA[i..n-1].
inline std::int64_t stack_depth_by_records(const Values& isa) {
    const auto n = isa.size();
    std::int64_t best = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::int64_t records = 0;
        std::int64_t low = INT64_MAX;
        for (std::size_t k = i; k + 1 < n; ++k) {
            if (isa[k] < low) {
                low = isa[k];
                ++records;
            }
        }
        best = std::max(best, records);
    }
    return best;
}

inline std::string with_sentinel(std::string s) {
    s.push_back('\0');
    return s;
}

// Every string over `alphabet` of length 0..max_len.
inline std::vector<std::string> all_strings(const std::string& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const auto level_end = out.size();
        for (auto k = level_begin; k < level_end; ++k) {
            for (char c : alphabet) out.push_back(out[k] + c);
        }
        level_begin = level_end;
    }
    return out;
}

// Random string over the first `sigma` symbols of the byte range 1..255
// ('a'.. when sigma <= 26).
inline std::string random_string(std::mt19937_64& rng, std::size_t len, int sigma) {
    const int base = sigma <= 26 ? 'a' : 1;
    std::uniform_int_distribution<int> pick(0, sigma - 1);
    std::string s(len, '\0');
    for (auto& c : s) c = static_cast<char>(base + pick(rng));
    return s;
}

}  // namespace lynbwt::oracle
