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

#include "grac/boolean_fn.h"

#include <algorithm>
#include <bit>

#include "grac/error.h"

namespace grac {

namespace {

void check_width(int n) {
    if (n < 1 || n > kMaxWidth) {
        throw Error(ErrorCode::WidthOutOfRange,
                    "input width " + std::to_string(n) + " outside [1, " + std::to_string(kMaxWidth) + "]");
    }
}

}  // namespace

BooleanFn::BooleanFn(int n, uint64_t table) : n_(n), table_(table) {
    check_width(n);
    if (table & ~input_mask(n)) {
        throw Error(ErrorCode::InvalidArgument, "truth table has bits beyond 2^n inputs");
    }
}

BooleanFn BooleanFn::constant(int n, bool value) {
    check_width(n);
    return BooleanFn(n, value ? input_mask(n) : 0);
}

uint64_t BooleanFn::preimage(bool value) const noexcept {
    return value ? table_ : (~table_ & input_mask(n_));
}

std::string BooleanFn::to_bitstring() const {
    std::string s(num_inputs(), '0');
    for (size_t x = 0; x < s.size(); x++) {
        if ((*this)(static_cast<uint32_t>(x))) {
            s[x] = '1';
        }
    }
    return s;
}

BooleanFn BooleanFn::from_bitstring(std::string_view s) {
    int n = 0;
    while (n <= kMaxWidth && (size_t{1} << n) < s.size()) {
        n++;
    }
    if (n < 1 || n > kMaxWidth || (size_t{1} << n) != s.size()) {
        throw Error(ErrorCode::ParseError, "truth table length must be 2^n with 1 <= n <= 6, got " +
                                               std::to_string(s.size()));
    }
    uint64_t table = 0;
    for (size_t x = 0; x < s.size(); x++) {
        if (s[x] == '1') {
            table |= uint64_t{1} << x;
        } else if (s[x] != '0') {
            throw Error(ErrorCode::ParseError, "truth table must contain only 0 and 1");
        }
    }
    return BooleanFn(n, table);
}

ParityLabel::ParityLabel(int n, uint32_t bits) : n_(n), bits_(bits) {
    check_width(n);
    if (bits == 0) {
        throw Error(ErrorCode::InvalidLabel, "parity label must be nonzero");
    }
    if (bits >> n) {
        throw Error(ErrorCode::InvalidLabel, "parity label wider than input width");
    }
}

std::string ParityLabel::to_string() const {
    return input_bitstring(n_, bits_);
}

ParityLabel ParityLabel::parse(std::string_view s) {
    int n = static_cast<int>(s.size());
    if (n < 1 || n > kMaxWidth) {
        throw Error(ErrorCode::ParseError, "label '" + std::string(s) + "' has bad length");
    }
    return ParityLabel(n, parse_input_bitstring(n, s));
}

FunctionSet::FunctionSet(int n, std::vector<ParityLabel> labels) : n_(n), labels_(std::move(labels)) {
    check_width(n);
    if (labels_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "function set must be nonempty");
    }
    for (const auto &label : labels_) {
        if (label.width() != n) {
            throw Error(ErrorCode::WidthMismatch, "label " + label.to_string() + " does not have width " +
                                                      std::to_string(n));
        }
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw Error(ErrorCode::InvalidArgument, "function set contains a repeated label");
    }
}

FunctionSet FunctionSet::from_bits(int n, std::initializer_list<uint32_t> bits) {
    std::vector<ParityLabel> labels;
    for (uint32_t b : bits) {
        labels.emplace_back(n, b);
    }
    return FunctionSet(n, std::move(labels));
}

int FunctionSet::index_of(const ParityLabel &label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        return -1;
    }
    return static_cast<int>(it - labels_.begin());
}

std::string FunctionSet::to_string() const {
    std::string out;
    for (size_t i = 0; i < labels_.size(); i++) {
        if (i) {
            out += ',';
        }
        out += labels_[i].to_string();
    }
    return out;
}

FunctionSet FunctionSet::parse(int n, std::string_view s) {
    std::vector<ParityLabel> labels;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find(',', start);
        if (end == std::string_view::npos) {
            end = s.size();
        }
        std::string_view tok = s.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ') {
            tok.remove_prefix(1);
        }
        while (!tok.empty() && tok.back() == ' ') {
            tok.remove_suffix(1);
        }
        ParityLabel label = ParityLabel::parse(tok);
        if (label.width() != n) {
            throw Error(ErrorCode::WidthMismatch,
                        "label '" + std::string(tok) + "' does not have width " + std::to_string(n));
        }
        labels.push_back(label);
        start = end + 1;
    }
    return FunctionSet(n, std::move(labels));
}

BooleanFn parity_function(const ParityLabel &label) {
    int n = label.width();
    uint64_t table = 0;
    for (uint32_t x = 0; x < (uint32_t{1} << n); x++) {
        if (label.eval(x)) {
            table |= uint64_t{1} << x;
        }
    }
    return BooleanFn(n, table);
}

bool is_balanced(const BooleanFn &f) {
    return static_cast<size_t>(std::popcount(f.table())) == f.num_inputs() / 2;
}

bool are_mutually_unbiased(const BooleanFn &f1, const BooleanFn &f2) {
    if (f1.width() != f2.width()) {
        throw Error(ErrorCode::WidthMismatch, "functions have different input widths");
    }
    if (!is_balanced(f1) || !is_balanced(f2)) {
        throw Error(ErrorCode::NotBalanced, "mutual unbiasedness needs balanced functions");
    }
    // For n = 1 the quarter-size cells cannot exist; no pair of balanced
    // 1-bit functions is unbiased.
    if (f1.width() < 2) {
        return false;
    }
    size_t quarter = f1.num_inputs() / 4;
    for (bool i : {false, true}) {
        for (bool j : {false, true}) {
            if (static_cast<size_t>(std::popcount(f1.preimage(i) & f2.preimage(j))) != quarter) {
                return false;
            }
        }
    }
    return true;
}

bool is_mubs(std::span<const BooleanFn> fns) {
    for (const auto &f : fns) {
        if (!is_balanced(f)) {
            return false;
        }
    }
    for (size_t a = 0; a < fns.size(); a++) {
        for (size_t b = a + 1; b < fns.size(); b++) {
            if (!are_mutually_unbiased(fns[a], fns[b])) {
                return false;
            }
        }
    }
    return true;
}

bool is_mubs(const FunctionSet &set) {
    std::vector<BooleanFn> fns;
    for (const auto &label : set.labels()) {
        fns.push_back(parity_function(label));
    }
    return is_mubs(fns);
}

FunctionSet full_mubs(int n) {
    check_width(n);
    std::vector<ParityLabel> labels;
    for (uint32_t r = 1; r < (uint32_t{1} << n); r++) {
        labels.emplace_back(n, r);
    }
    return FunctionSet(n, std::move(labels));
}

QuadrupleClass classify_quadruple(const FunctionSet &set) {
    if (set.size() != 4) {
        throw Error(ErrorCode::WrongCardinality,
                    "quadruple classification needs 4 labels, got " + std::to_string(set.size()));
    }
    uint32_t a = set[0].bits(), b = set[1].bits(), c = set[2].bits(), d = set[3].bits();
    // The three ways to split four labels into two pairs.
    if ((a ^ b) == (c ^ d) || (a ^ c) == (b ^ d) || (a ^ d) == (b ^ c)) {
        return QuadrupleClass::XorClosed;
    }
    return QuadrupleClass::NotXorClosed;
}

std::string_view quadruple_class_name(QuadrupleClass c) {
    return c == QuadrupleClass::XorClosed ? "xor-closed" : "open";
}

std::vector<FunctionSet> subsets_of_size(int n, size_t size) {
    check_width(n);
    uint32_t count = (uint32_t{1} << n) - 1;
    std::vector<FunctionSet> out;
    if (size == 0 || size > count) {
        return out;
    }
    std::vector<uint32_t> idx(size);
    for (size_t i = 0; i < size; i++) {
        idx[i] = static_cast<uint32_t>(i);
    }
    while (true) {
        std::vector<ParityLabel> labels;
        for (uint32_t i : idx) {
            labels.emplace_back(n, i + 1);
        }
        out.emplace_back(n, std::move(labels));
        // Advance to the next combination.
        size_t pos = size;
        while (pos > 0 && idx[pos - 1] == count - size + pos - 1) {
            pos--;
        }
        if (pos == 0) {
            break;
        }
        idx[pos - 1]++;
        for (size_t i = pos; i < size; i++) {
            idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

std::vector<int8_t> sign_table(const FunctionSet &set) {
    size_t k = set.size();
    std::vector<int8_t> g(set.num_inputs() * k);
    for (uint32_t x = 0; x < set.num_inputs(); x++) {
        for (size_t y = 0; y < k; y++) {
            g[x * k + y] = set[y].eval(x) ? -1 : 1;
        }
    }
    return g;
}

std::string input_bitstring(int n, uint32_t x) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; i++) {
        if ((x >> (n - 1 - i)) & 1) {
            s[static_cast<size_t>(i)] = '1';
        }
    }
    return s;
}

uint32_t parse_input_bitstring(int n, std::string_view s) {
    if (static_cast<int>(s.size()) != n) {
        throw Error(ErrorCode::ParseError,
                    "bitstring '" + std::string(s) + "' should have length " + std::to_string(n));
    }
    uint32_t x = 0;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::ParseError, "bitstring '" + std::string(s) + "' has a non-binary digit");
        }
        x = (x << 1) | static_cast<uint32_t>(c == '1');
    }
    return x;
}

}  // namespace grac
