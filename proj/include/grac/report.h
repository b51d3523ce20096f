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

#ifndef GRAC_REPORT_H
#define GRAC_REPORT_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grac/boolean_fn.h"
#include "grac/classical.h"
#include "grac/serialize.h"

namespace grac {

/// Labels ordered by weight, then with the most significant bit first:
/// for n = 3, 100, 010, 001, 110, 101, 011, 111.
std::vector<ParityLabel> canonical_label_order(int n);

/// `all`, a comma list of bitstrings, or `k=<m>[:xor-closed|open]` for the
/// first canonical subset of size m (of the given class when m = 4).
FunctionSet resolve_labels(int n, std::string_view spec);

/// omega = x_1 AND NOT(x_2 AND x_3), inverting the guess on x_2, x_3 and
/// x_1 ^ x_2 ^ x_3; optimal for the full three-bit set.
ClassicalStrategy best_three_bit_strategy();

/// Majority encoding with identity decoding on the full three-bit set,
/// optionally inverting the guess on x_1 ^ x_2 ^ x_3.
ClassicalStrategy majority_three_bit_strategy(bool invert_full_parity);

enum class TableId { I, II, III, IV, Q };

std::string_view table_id_name(TableId id);
TableId parse_table_id(std::string_view s);
std::vector<TableId> all_table_ids();

struct TableRow {
    std::string key;
    std::string computed;
    double computed_value = 0.0;
    std::string reference;
    double reference_value = 0.0;
    double delta = 0.0;
    double tolerance = 0.0;
    bool ok = false;
};

struct TableReport {
    TableId id = TableId::I;
    std::vector<TableRow> rows;

    bool ok() const;
    double max_delta() const;
    Json to_json() const;
};

struct TableOptions {
    uint64_t seed = 0;
    int pm_restarts = 64;
    int eacc_restarts = 32;
};

/// Recomputes each requested table from scratch and compares every entry
/// with its stored reference. Out-of-tolerance rows are flagged, not thrown.
std::vector<TableReport> reproduce_tables(const std::vector<TableId> &which, const TableOptions &options = {});

/// Header `table,key,computed,computed_value,reference,reference_value,delta,tolerance,ok`.
std::string tables_to_csv(const std::vector<TableReport> &reports);
std::string tables_to_text(const std::vector<TableReport> &reports);

}  // namespace grac

#endif  // GRAC_REPORT_H
