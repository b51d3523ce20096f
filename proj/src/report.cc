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

#include "grac/report.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "grac/eacc.h"
#include "grac/error.h"
#include "grac/noise.h"
#include "grac/quantum_pm.h"

namespace grac {

namespace {

struct SetSpec {
    std::string key;
    std::string labels;
};

// The three-bit sets every table walks through.
const std::vector<SetSpec> &table_sets() {
    static const std::vector<SetSpec> sets = {
        {"k=2", "k=2"},
        {"k=3", "k=3"},
        {"k=4 xor-closed", "k=4:xor-closed"},
        {"k=4 open", "k=4:open"},
        {"k=5", "k=5"},
        {"k=6", "k=6"},
        {"k=7", "k=7"},
    };
    return sets;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.8f", v);
    return buf;
}

TableRow exact_row(std::string key, const Rational &computed, const Rational &reference, bool reduce = true) {
    TableRow row;
    row.key = std::move(key);
    row.computed = reduce ? computed.reduced() : computed.to_string();
    row.computed_value = computed.value();
    row.reference = reduce ? reference.reduced() : reference.to_string();
    row.reference_value = reference.value();
    row.delta = std::abs(row.computed_value - row.reference_value);
    row.tolerance = 0.0;
    row.ok = computed == reference;
    return row;
}

TableRow real_row(std::string key, double computed, std::string reference_text, double reference, double tol) {
    TableRow row;
    row.key = std::move(key);
    row.computed = fmt(computed);
    row.computed_value = computed;
    row.reference = std::move(reference_text);
    row.reference_value = reference;
    row.delta = std::abs(computed - reference);
    row.tolerance = tol;
    row.ok = row.delta <= tol;
    return row;
}

// Majority-vote (k -> 1) RAC counted directly; ties go to the first bit.
Rational majority_rac_success(int k) {
    uint64_t wins = 0;
    for (uint32_t x = 0; x < (uint32_t{1} << k); x++) {
        int ones = std::popcount(x);
        bool maj = 2 * ones > k || (2 * ones == k && ((x >> (k - 1)) & 1));
        wins += static_cast<uint64_t>(maj ? ones : k - ones);
    }
    return Rational{wins, static_cast<uint64_t>(k) << k};
}

// Memoized see-saw values shared between the quantum and threshold tables.
class QuantumCache {
   public:
    explicit QuantumCache(const TableOptions &o) : options_(o) {
    }
    double value(const std::string &labels) {
        auto it = cache_.find(labels);
        if (it != cache_.end()) {
            return it->second;
        }
        SeesawOptions so;
        so.restarts = options_.pm_restarts;
        so.seed = options_.seed;
        double v = seesaw(resolve_labels(3, labels), so).value;
        cache_.emplace(labels, v);
        return v;
    }

   private:
    TableOptions options_;
    std::map<std::string, double> cache_;
};

TableReport table_one() {
    TableReport rep{TableId::I, {}};
    const FunctionSet set = full_mubs(3);
    const auto order = canonical_label_order(3);
    struct Case {
        std::string name;
        ClassicalStrategy strategy;
        std::vector<uint64_t> per_question;  // canonical label order, out of 8
        Rational total;
    };
    const std::vector<Case> cases = {
        {"majority/identity", majority_three_bit_strategy(false), {6, 6, 6, 4, 4, 4, 2}, {32, 56}},
        {"majority/inverse-on-111", majority_three_bit_strategy(true), {6, 6, 6, 4, 4, 4, 6}, {36, 56}},
        {"x1-and-not-x2x3", best_three_bit_strategy(), {7, 5, 5, 5, 5, 5, 5}, {37, 56}},
    };
    for (const auto &c : cases) {
        auto wins = per_question_wins(c.strategy, set);
        for (size_t i = 0; i < order.size(); i++) {
            uint64_t got = wins[static_cast<size_t>(set.index_of(order[i]))];
            rep.rows.push_back(exact_row(c.name + " " + order[i].to_string(), Rational{got, 8},
                                         Rational{c.per_question[i], 8}, false));
        }
        rep.rows.push_back(exact_row(c.name + " total", evaluate_classical(c.strategy, set), c.total, false));
    }
    return rep;
}

TableReport table_two() {
    TableReport rep{TableId::II, {}};
    const std::vector<Rational> grac = {{3, 4}, {3, 4}, {3, 4}, {11, 16}, {7, 10}, {2, 3}, {37, 56}};
    const auto &sets = table_sets();
    for (size_t i = 0; i < sets.size(); i++) {
        FunctionSet set = resolve_labels(3, sets[i].labels);
        rep.rows.push_back(exact_row("grac " + sets[i].key, classical_optimum(3, set, 1).value, grac[i]));
    }
    const std::vector<Rational> rac = {{3, 4}, {3, 4}, {11, 16}, {11, 16}, {21, 32}, {21, 32}};
    for (int k = 2; k <= 7; k++) {
        rep.rows.push_back(
            exact_row("rac k=" + std::to_string(k), majority_rac_success(k), rac[static_cast<size_t>(k - 2)]));
    }
    return rep;
}

TableReport table_quantum(QuantumCache &cache) {
    TableReport rep{TableId::Q, {}};
    const double open4 = 0.5 * (1.0 + (std::sqrt(2.0) + std::sqrt(6.0)) / 8.0);
    for (const auto &s : table_sets()) {
        FunctionSet set = resolve_labels(3, s.labels);
        double ref = norm_bound(set.size());
        std::string ref_text = "(1+1/sqrt(" + std::to_string(set.size()) + "))/2";
        if (set.size() == 4) {
            bool closed = classify_quadruple(set) == QuadrupleClass::XorClosed;
            ref = closed ? 0.75 : open4;
            ref_text = closed ? "3/4" : "(1+(sqrt2+sqrt6)/8)/2";
        }
        rep.rows.push_back(real_row(s.key, cache.value(s.labels), ref_text, ref, 1e-5));
    }
    return rep;
}

TableReport table_three(QuantumCache &cache) {
    TableReport rep{TableId::III, {}};
    const std::vector<std::pair<std::string, double>> refs = {
        {"k=2", 0.29289}, {"k=3", 0.13396}, {"k=4:open", 0.22354},
        {"k=5", 0.10555}, {"k=6", 0.18349}, {"k=7", 0.14957},
    };
    for (const auto &[labels, ref] : refs) {
        FunctionSet set = resolve_labels(3, labels);
        double lc = critical_depolarizing(classical_optimum(3, set, 1).value, cache.value(labels));
        std::string key = labels == "k=4:open" ? "k=4 open" : labels;
        rep.rows.push_back(real_row(key, lc, fmt(ref).substr(0, 7), ref, 1e-4));
    }
    return rep;
}

TableReport table_four(const TableOptions &options) {
    TableReport rep{TableId::IV, {}};
    auto run = [&](const std::string &labels, int dim) {
        EACCSeesawOptions eo;
        eo.local_dim = dim;
        eo.restarts = options.eacc_restarts;
        eo.seed = options.seed;
        return eacc_seesaw(resolve_labels(3, labels), eo).value;
    };
    for (const auto &s : table_sets()) {
        size_t k = resolve_labels(3, s.labels).size();
        std::string ref_text = "(1+1/sqrt(" + std::to_string(k) + "))/2";
        rep.rows.push_back(real_row(s.key + " 2x2", run(s.labels, 2), ref_text, norm_bound(k), 1e-4));
    }
    // The open quadruple needs larger local systems; see README.
    rep.rows.push_back(real_row("k=4 open 4x4", run("k=4:open", 4), "3/4", 0.75, 1e-4));
    return rep;
}

}  // namespace

std::vector<ParityLabel> canonical_label_order(int n) {
    if (n < 1 || n > kMaxWidth) {
        throw Error(ErrorCode::WidthOutOfRange, "width must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
    std::vector<ParityLabel> out;
    for (uint32_t b = 1; b < (uint32_t{1} << n); b++) {
        out.emplace_back(n, b);
    }
    std::sort(out.begin(), out.end(), [](const ParityLabel &a, const ParityLabel &b) {
        int pa = std::popcount(a.bits()), pb = std::popcount(b.bits());
        return pa != pb ? pa < pb : a.bits() > b.bits();
    });
    return out;
}

FunctionSet resolve_labels(int n, std::string_view spec) {
    if (spec == "all") {
        return full_mubs(n);
    }
    if (spec.substr(0, 2) != "k=") {
        return FunctionSet::parse(n, spec);
    }
    std::string_view rest = spec.substr(2);
    std::string_view cls;
    if (auto colon = rest.find(':'); colon != std::string_view::npos) {
        cls = rest.substr(colon + 1);
        rest = rest.substr(0, colon);
    }
    size_t m = 0;
    try {
        size_t used = 0;
        m = std::stoul(std::string(rest), &used);
        if (used != rest.size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception &) {
        throw Error(ErrorCode::ParseError, "bad cardinality in '" + std::string(spec) + "'");
    }
    const auto order = canonical_label_order(n);
    if (m < 1 || m > order.size()) {
        throw Error(ErrorCode::WrongCardinality,
                    "cardinality " + std::to_string(m) + " not in [1, " + std::to_string(order.size()) + "]");
    }
    if (cls.empty()) {
        return FunctionSet(n, std::vector<ParityLabel>(order.begin(), order.begin() + static_cast<long>(m)));
    }
    if (m != 4) {
        throw Error(ErrorCode::InvalidArgument, "a class selector only applies to k=4");
    }
    QuadrupleClass want;
    if (cls == "xor-closed") {
        want = QuadrupleClass::XorClosed;
    } else if (cls == "open") {
        want = QuadrupleClass::NotXorClosed;
    } else {
        throw Error(ErrorCode::ParseError, "unknown class '" + std::string(cls) + "'");
    }
    // First quadruple of the wanted class in lexicographic order of positions.
    const size_t total = order.size();
    for (size_t a = 0; a < total; a++) {
        for (size_t b = a + 1; b < total; b++) {
            for (size_t c = b + 1; c < total; c++) {
                for (size_t d = c + 1; d < total; d++) {
                    FunctionSet set(n, {order[a], order[b], order[c], order[d]});
                    if (classify_quadruple(set) == want) {
                        return set;
                    }
                }
            }
        }
    }
    throw Error(ErrorCode::WrongCardinality, "no quadruple of class '" + std::string(cls) + "' at this width");
}

ClassicalStrategy best_three_bit_strategy() {
    const FunctionSet set = full_mubs(3);
    ClassicalStrategy s = ClassicalStrategy::identity(BooleanFn::from_bitstring("00001110"), set);
    for (auto &rule : s.decoding) {
        uint32_t b = rule.label.bits();
        if (b == 0b010 || b == 0b001 || b == 0b111) {
            rule.guess = {1, 0};
        }
    }
    return s;
}

ClassicalStrategy majority_three_bit_strategy(bool invert_full_parity) {
    const FunctionSet set = full_mubs(3);
    ClassicalStrategy s = ClassicalStrategy::identity(BooleanFn::from_bitstring("00010111"), set);
    if (invert_full_parity) {
        for (auto &rule : s.decoding) {
            if (rule.label.bits() == 0b111) {
                rule.guess = {1, 0};
            }
        }
    }
    return s;
}

std::string_view table_id_name(TableId id) {
    switch (id) {
        case TableId::I:
            return "I";
        case TableId::II:
            return "II";
        case TableId::III:
            return "III";
        case TableId::IV:
            return "IV";
        case TableId::Q:
            return "Q";
    }
    return "?";
}

TableId parse_table_id(std::string_view s) {
    for (TableId id : all_table_ids()) {
        if (table_id_name(id) == s) {
            return id;
        }
    }
    throw Error(ErrorCode::UnknownCase, "unknown table '" + std::string(s) + "'");
}

std::vector<TableId> all_table_ids() {
    return {TableId::I, TableId::II, TableId::Q, TableId::III, TableId::IV};
}

bool TableReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow &r) { return r.ok; });
}

double TableReport::max_delta() const {
    double m = 0.0;
    for (const auto &r : rows) {
        m = std::max(m, r.delta);
    }
    return m;
}

Json TableReport::to_json() const {
    Json rows_json = Json::array();
    for (const auto &r : rows) {
        rows_json.push_back(Json{{"key", r.key},
                                 {"computed", r.computed},
                                 {"computed_value", r.computed_value},
                                 {"reference", r.reference},
                                 {"reference_value", r.reference_value},
                                 {"delta", r.delta},
                                 {"tolerance", r.tolerance},
                                 {"ok", r.ok}});
    }
    return Json{{"table", std::string(table_id_name(id))}, {"ok", ok()}, {"max_delta", max_delta()},
                {"rows", rows_json}};
}

std::vector<TableReport> reproduce_tables(const std::vector<TableId> &which, const TableOptions &options) {
    QuantumCache cache(options);
    std::vector<TableReport> out;
    for (TableId id : which) {
        switch (id) {
            case TableId::I:
                out.push_back(table_one());
                break;
            case TableId::II:
                out.push_back(table_two());
                break;
            case TableId::Q:
                out.push_back(table_quantum(cache));
                break;
            case TableId::III:
                out.push_back(table_three(cache));
                break;
            case TableId::IV:
                out.push_back(table_four(options));
                break;
        }
    }
    return out;
}

std::string tables_to_csv(const std::vector<TableReport> &reports) {
    std::ostringstream os;
    os << "table,key,computed,computed_value,reference,reference_value,delta,tolerance,ok\n";
    char buf[512];
    for (const auto &rep : reports) {
        for (const auto &r : rep.rows) {
            std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.12f,%s,%.12f,%.3e,%.1e,%s\n",
                          std::string(table_id_name(rep.id)).c_str(), r.key.c_str(), r.computed.c_str(),
                          r.computed_value, r.reference.c_str(), r.reference_value, r.delta, r.tolerance,
                          r.ok ? "true" : "false");
            os << buf;
        }
    }
    return os.str();
}

std::string tables_to_text(const std::vector<TableReport> &reports) {
    std::ostringstream os;
    char buf[512];
    for (const auto &rep : reports) {
        os << "Table " << table_id_name(rep.id) << (rep.ok() ? "  [ok]" : "  [OUT OF TOLERANCE]") << "\n";
        for (const auto &r : rep.rows) {
            std::snprintf(buf, sizeof(buf), "  %-34s %-14s ref %-24s |d| %.2e %s\n", r.key.c_str(),
                          r.computed.c_str(), r.reference.c_str(), r.delta, r.ok ? "" : "<-- FAIL");
            os << buf;
        }
    }
    return os.str();
}

}  // namespace grac
