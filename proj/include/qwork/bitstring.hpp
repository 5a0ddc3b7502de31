// Copyright 2025-2026 The qwork developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Fixed-width packed bitstrings for computational basis states.
 *
 * Qubit q lives at bit position q of the word array (word q/64, bit q%64),
 * so XOR of two bitstrings is a word-wise XOR and flip masks are cheap.
 * The textual form puts qubit 0 leftmost: "0110" means q1 = q2 = 1.
 */

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qwork {

class Bitstring {
  public:
    /// Three 64-bit words cover every lattice in this project (n <= 192).
    static constexpr int kMaxBits = 192;
    static constexpr int kWords = 3;

    Bitstring() = default;

    explicit Bitstring(int n_bits) : n_bits_(n_bits) {
        if (n_bits < 0 || n_bits > kMaxBits) {
            throw std::invalid_argument("Bitstring: size out of range");
        }
    }

    /// Parse "0101..." with qubit 0 leftmost.
    static Bitstring from_string(std::string_view text) {
        Bitstring b(static_cast<int>(text.size()));
        for (int q = 0; q < b.n_bits_; q++) {
            if (text[q] == '1') {
                b.set(q, true);
            } else if (text[q] != '0') {
                throw std::invalid_argument("Bitstring: invalid character");
            }
        }
        return b;
    }

    /// Build from a basis-state index; bit q of `index` is qubit q (n <= 64).
    static Bitstring from_index(std::uint64_t index, int n_bits) {
        if (n_bits > 64) {
            throw std::invalid_argument("Bitstring::from_index: n > 64");
        }
        Bitstring b(n_bits);
        b.words_[0] = (n_bits == 64) ? index : (index & ((1ULL << n_bits) - 1));
        return b;
    }

    int size() const { return n_bits_; }

    bool bit(int q) const { return (words_[q >> 6] >> (q & 63)) & 1ULL; }

    void set(int q, bool value) {
        const std::uint64_t mask = 1ULL << (q & 63);
        if (value) {
            words_[q >> 6] |= mask;
        } else {
            words_[q >> 6] &= ~mask;
        }
    }

    int popcount() const {
        int total = 0;
        for (auto w : words_) {
            total += std::popcount(w);
        }
        return total;
    }

    /// Parity of the number of set bits.
    bool parity() const { return popcount() & 1; }

    /// Basis-state index for n <= 64 systems.
    std::uint64_t to_index() const {
        if (n_bits_ > 64) {
            throw std::logic_error("Bitstring::to_index: n > 64");
        }
        return words_[0];
    }

    Bitstring operator^(const Bitstring &other) const {
        Bitstring out(n_bits_);
        for (int w = 0; w < kWords; w++) {
            out.words_[w] = words_[w] ^ other.words_[w];
        }
        return out;
    }

    bool operator==(const Bitstring &other) const = default;

    std::string str() const {
        std::string s(n_bits_, '0');
        for (int q = 0; q < n_bits_; q++) {
            if (bit(q)) {
                s[q] = '1';
            }
        }
        return s;
    }

    std::size_t hash() const {
        // FNV-1a over the words plus the length.
        std::uint64_t h = 14695981039346656037ULL;
        auto mix = [&h](std::uint64_t v) {
            for (int i = 0; i < 8; i++) {
                h = (h ^ (v & 0xff)) * 1099511628211ULL;
                v >>= 8;
            }
        };
        for (auto w : words_) {
            mix(w);
        }
        mix(static_cast<std::uint64_t>(n_bits_));
        return static_cast<std::size_t>(h);
    }

  private:
    std::array<std::uint64_t, kWords> words_{};
    int n_bits_ = 0;
};

struct BitstringHash {
    std::size_t operator()(const Bitstring &b) const { return b.hash(); }
};

} // namespace qwork
