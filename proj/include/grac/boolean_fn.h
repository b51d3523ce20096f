// Copyright 2026 The GRAC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAC_BOOLEAN_FN_H
#define GRAC_BOOLEAN_FN_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grac {

inline constexpr int kMaxWidth = 6;

/// Boolean function on n input bits, stored as a truth table.
///
/// Inputs are read as integers with x_1 as the most significant bit, so bit
/// `x` of `table` is f(x) and the rows run 00..0, 00..1, ..., 11..1.
class BooleanFn {
   public:
    BooleanFn(int n, uint64_t table);

    static BooleanFn constant(int n, bool value);

    int width() const noexcept {
        return n_;
    }
    uint64_t table() const noexcept {
        return table_;
    }
    size_t num_inputs() const noexcept {
        return size_t{1} << n_;
    }
    bool operator()(uint32_t x) const noexcept {
        return (table_ >> x) & 1;
    }
    /// Mask of inputs with f(x) = value.
    uint64_t preimage(bool value) const noexcept;

    /// Bitstring of length 2^n, character x holds f(x).
    std::string to_bitstring() const;
    static BooleanFn from_bitstring(std::string_view s);

    bool operator==(const BooleanFn &) const = default;

   private:
    int n_;
    uint64_t table_;
};

/// Nonzero label r in {0,1}^n selecting the parity f_r(x) = XOR_i r_i x_i.
class ParityLabel {
   public:
    ParityLabel(int n, uint32_t bits);

    int width() const noexcept {
        return n_;
    }
    uint32_t bits() const noexcept {
        return bits_;
    }
    bool eval(uint32_t x) const noexcept {
        return __builtin_parity(bits_ & x);
    }

    std::string to_string() const;
    static ParityLabel parse(std::string_view s);

    bool operator==(const ParityLabel &) const = default;
    auto operator<=>(const ParityLabel &) const = default;

   private:
    int n_;
    uint32_t bits_;
};

/// Duplicate-free set of parity labels of one width, kept in ascending order.
class FunctionSet {
   public:
    FunctionSet(int n, std::vector<ParityLabel> labels);
    static FunctionSet from_bits(int n, std::initializer_list<uint32_t> bits);

    int width() const noexcept {
        return n_;
    }
    size_t size() const noexcept {
        return labels_.size();
    }
    std::span<const ParityLabel> labels() const noexcept {
        return labels_;
    }
    const ParityLabel &operator[](size_t i) const {
        return labels_[i];
    }
    size_t num_inputs() const noexcept {
        return size_t{1} << n_;
    }
    /// Position of `label` in the canonical order, or -1.
    int index_of(const ParityLabel &label) const;

    /// Comma separated bitstrings, e.g. "001,010,100".
    std::string to_string() const;
    static FunctionSet parse(int n, std::string_view s);

    bool operator==(const FunctionSet &) const = default;

   private:
    int n_;
    std::vector<ParityLabel> labels_;
};

enum class QuadrupleClass { XorClosed, NotXorClosed };

BooleanFn parity_function(const ParityLabel &label);
bool is_balanced(const BooleanFn &f);
bool are_mutually_unbiased(const BooleanFn &f1, const BooleanFn &f2);
bool is_mubs(const FunctionSet &set);
bool is_mubs(std::span<const BooleanFn> fns);
FunctionSet full_mubs(int n);
QuadrupleClass classify_quadruple(const FunctionSet &set);
std::string_view quadruple_class_name(QuadrupleClass c);

/// Every subset of the full parity family with exactly `size` members, in
/// lexicographic order of label indices.
std::vector<FunctionSet> subsets_of_size(int n, size_t size);

/// Sign pattern g_y(x) = (-1)^{f_y(x)} as a row-major [x][y] table.
std::vector<int8_t> sign_table(const FunctionSet &set);

/// Low-order mask covering all 2^n inputs.
inline uint64_t input_mask(int n) {
    return n >= 6 ? ~uint64_t{0} : ((uint64_t{1} << (uint64_t{1} << n)) - 1);
}

std::string input_bitstring(int n, uint32_t x);
uint32_t parse_input_bitstring(int n, std::string_view s);

}  // namespace grac

#endif  // GRAC_BOOLEAN_FN_H
