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

#include "grac/cli.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "grac/eacc.h"
#include "grac/error.h"
#include "grac/noise.h"
#include "grac/report.h"
#include "grac/serialize.h"

namespace grac {

namespace {

struct Outcome {
    std::string summary;
    std::string artifact;
    int status = kExitOk;
};

std::string num(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

void require_format(const RunConfig &c, std::initializer_list<const char *> allowed) {
    for (const char *f : allowed) {
        if (c.format == f) {
            return;
        }
    }
    std::string list;
    for (const char *f : allowed) {
        list += list.empty() ? f : std::string("|") + f;
    }
    throw Error(ErrorCode::InvalidArgument, "command '" + c.command + "' supports --format " + list);
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

BlochVector parse_axis(const std::string &s) {
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw Error(ErrorCode::ParseError, "bad axis component '" + item + "'");
        }
    }
    if (parts.size() != 3) {
        throw Error(ErrorCode::ParseError, "axis needs three comma-separated components");
    }
    return BlochVector{{parts[0], parts[1], parts[2]}};
}

Outcome cmd_mubs(const RunConfig &c) {
    require_format(c, {"json", "text"});
    FunctionSet set = resolve_labels(c.n, c.check.empty() ? c.labels : c.check);
    bool ok = is_mubs(set);
    Json j{{"n", c.n}, {"labels", set.to_string()}, {"size", set.size()}, {"mubs", ok}};
    if (set.size() == 4) {
        j["class"] = std::string(quadruple_class_name(classify_quadruple(set)));
    }
    Outcome o;
    o.summary = std::string("MUBS: ") + (ok ? "true" : "false");
    o.artifact = c.format == "json" ? dump(j) : o.summary + " (" + set.to_string() + ")\n";
    return o;
}

Outcome cmd_classical(const RunConfig &c) {
    require_format(c, {"json", "text"});
    FunctionSet set = resolve_labels(c.n, c.labels);
    ClassicalOptimum opt = classical_optimum(c.n, set, c.cap);
    Json strategies = Json::array();
    for (const auto &s : opt.strategies) {
        Json js = to_json(s);
        js["per_question_wins"] = per_question_wins(s, set);
        strategies.push_back(js);
    }
    Json j{{"n", c.n},
           {"labels", set.to_string()},
           {"value", to_json(opt.value)},
           {"num_optimal_encodings", opt.num_optimal_encodings},
           {"strategies", strategies}};
    if (set.size() >= 2 && set.size() <= static_cast<size_t>(kMaxWidth)) {
        LiftResult lift = best_lift(majority_rac(static_cast<int>(set.size())), set);
        j["lifted_majority_rac"] = to_json(lift.value);
    }
    Outcome o;
    o.summary = "classical optimum " + opt.value.reduced() + " (" + num(opt.value.value()) + ") on " +
                set.to_string() + ", " + std::to_string(opt.num_optimal_encodings) + " optimal encodings";
    o.artifact = c.format == "json" ? dump(j) : o.summary + "\n";
    return o;
}

Outcome cmd_quantum(const RunConfig &c) {
    require_format(c, {"json", "text"});
    Outcome o;
    Json j;
    if (!c.fixture.empty()) {
        Fixture fx = explicit_fixture(parse_fixture_case(c.fixture));
        double v = evaluate_pm(fx.strategy, fx.set);
        j = Json{{"case", c.fixture}, {"labels", fx.set.to_string()}, {"value", v},
                 {"expected", fx.expected}, {"strategy", to_json(fx.strategy)}};
        o.summary = "fixture " + c.fixture + " value " + num(v) + " on " + fx.set.to_string();
    } else {
        FunctionSet set = resolve_labels(c.n, c.labels);
        SeesawOptions so;
        so.seed = c.seed;
        if (c.restarts > 0) {
            so.restarts = c.restarts;
        }
        SeesawReport rep = seesaw(set, so);
        j = Json{{"n", c.n},
                 {"labels", set.to_string()},
                 {"value", rep.value},
                 {"upper_bound", norm_bound(set.size())},
                 {"seed", rep.seed},
                 {"restarts", rep.restarts_used},
                 {"best_restart", rep.best_restart},
                 {"iterations", rep.iterations},
                 {"converged", rep.converged},
                 {"max_decrease", rep.max_decrease},
                 {"strategy", to_json(rep.best_strategy)}};
        o.summary = "quantum value " + num(rep.value) + " on " + set.to_string() + " (bound " +
                    num(norm_bound(set.size())) + ")";
    }
    o.artifact = c.format == "json" ? dump(j) : o.summary + "\n";
    return o;
}

Outcome cmd_noise(const RunConfig &c) {
    ChannelKind kind = parse_channel_kind(c.channel);
    BlochVector axis = parse_axis(c.axis);
    FunctionSet set = resolve_labels(c.n, c.labels);
    if (c.points < 2) {
        throw Error(ErrorCode::InvalidArgument, "--points must be at least 2");
    }
    std::vector<double> grid = uniform_grid(kind, static_cast<size_t>(c.points));
    SweepOptions opts;
    opts.seesaw.seed = c.seed;
    if (c.restarts > 0) {
        opts.seesaw.restarts = c.restarts;
    }
    Outcome o;
    if (!c.compare.empty()) {
        require_format(c, {"json", "text"});
        if (kind != ChannelKind::Dephasing) {
            throw Error(ErrorCode::InvalidChannel, "--compare needs the dephasing channel");
        }
        FunctionSet other = resolve_labels(c.n, c.compare);
        CrossingWindow w = crossing_window(set, other, axis, grid, 1e-4, opts);
        Json j{{"labels", set.to_string()}, {"compare", other.to_string()}, {"axis", c.axis},
               {"window_one_minus_lambda", to_json(w)}};
        o.summary = set.to_string() + " beats " + other.to_string() + " for 1-lambda in (" + num(w.low, 4) + ", " +
                    num(w.high, 4) + ")";
        o.artifact = c.format == "json" ? dump(j) : o.summary + "\n";
        return o;
    }
    require_format(c, {"csv", "json", "text"});
    SweepResult sweep = channel_sweep(set, kind, axis, grid, opts);
    double lc = critical_depolarizing(sweep.classical, sweep.values.front());
    o.summary = std::string(channel_kind_name(kind)) + " sweep on " + set.to_string() + ": " +
                std::to_string(grid.size()) + " points, noiseless " + num(sweep.values.front());
    if (kind == ChannelKind::Depolarizing) {
        o.summary += ", lambda_crit " + num(lc, 5);
    }
    if (c.format == "csv") {
        o.artifact = sweep.to_csv();
    } else if (c.format == "json") {
        Json pts = Json::array();
        for (size_t i = 0; i < grid.size(); i++) {
            pts.push_back(Json{{"lambda", grid[i]}, {"quantum_value", sweep.values[i]}, {"ratio", sweep.ratio[i]}});
        }
        Json j{{"labels", set.to_string()},
               {"channel", std::string(channel_kind_name(kind))},
               {"axis", c.axis},
               {"classical", to_json(sweep.classical)},
               {"points", pts}};
        if (kind == ChannelKind::Depolarizing) {
            j["lambda_crit"] = lc;
        }
        o.artifact = dump(j);
    } else {
        o.artifact = o.summary + "\n";
    }
    return o;
}

Outcome cmd_eacc(const RunConfig &c) {
    require_format(c, {"json", "text"});
    FunctionSet set = resolve_labels(c.n, c.labels);
    EACCSeesawOptions eo;
    eo.local_dim = c.dim;
    eo.seed = c.seed;
    if (c.restarts > 0) {
        eo.restarts = c.restarts;
    }
    EACCSeesawReport rep = eacc_seesaw(set, eo);
    BellValueReport bell = eacc_to_bell(rep.best_strategy, set);
    Json j{{"n", c.n},
           {"labels", set.to_string()},
           {"local_dim", c.dim},
           {"value", rep.value},
           {"bell_value", bell.bell_value},
           {"upper_bound", norm_bound(set.size())},
           {"seed", rep.seed},
           {"best_restart", rep.best_restart},
           {"iterations", rep.iterations},
           {"converged", rep.converged},
           {"max_decrease", rep.max_decrease},
           {"strategy", to_json(rep.best_strategy)}};
    Outcome o;
    o.summary = "entanglement-assisted value " + num(rep.value) + " on " + set.to_string() + " at " +
                std::to_string(c.dim) + "x" + std::to_string(c.dim);
    o.artifact = c.format == "json" ? dump(j) : o.summary + "\n";
    return o;
}

Outcome cmd_tables(const RunConfig &c) {
    require_format(c, {"json", "csv", "text"});
    std::vector<TableId> ids;
    for (const auto &t : c.tables) {
        ids.push_back(parse_table_id(t));
    }
    if (ids.empty()) {
        ids = all_table_ids();
    }
    TableOptions to;
    to.seed = c.seed;
    auto reports = reproduce_tables(ids, to);
    Outcome o;
    std::string failing;
    for (const auto &r : reports) {
        if (!r.ok()) {
            failing += (failing.empty() ? "" : ",") + std::string(table_id_name(r.id));
        }
    }
    o.status = failing.empty() ? kExitOk : kExitTolerance;
    o.summary = std::to_string(reports.size()) + " tables reproduced; " +
                (failing.empty() ? std::string("all within tolerance") : "out of tolerance: " + failing);
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto &r : reports) {
            arr.push_back(r.to_json());
        }
        o.artifact = dump(Json{{"seed", c.seed}, {"tables", arr}});
    } else if (c.format == "csv") {
        o.artifact = tables_to_csv(reports);
    } else {
        o.artifact = tables_to_text(reports);
    }
    return o;
}

}  // namespace

void write_atomically(const std::string &path, const std::string &content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw Error(ErrorCode::IoError, "cannot open '" + tmp.string() + "' for writing");
        }
        f << content;
        f.flush();
        if (!f) {
            throw Error(ErrorCode::IoError, "write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot move artifact into '" + path + "'");
    }
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    static const std::map<std::string, std::function<Outcome(const RunConfig &)>> commands = {
        {"mubs", cmd_mubs},   {"classical", cmd_classical}, {"quantum", cmd_quantum},
        {"noise", cmd_noise}, {"eacc", cmd_eacc},           {"tables", cmd_tables},
    };
    try {
        auto it = commands.find(config.command);
        if (it == commands.end()) {
            throw Error(ErrorCode::InvalidArgument, "unknown command '" + config.command + "'");
        }
        Outcome o = it->second(config);
        if (config.output == "-") {
            out << o.artifact;
        } else {
            if (!config.output.empty()) {
                write_atomically(config.output, o.artifact);
            }
            out << o.summary << "\n";
        }
        return o.status;
    } catch (const Error &e) {
        Json j{{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
        err << j.dump() << "\n";
        return kExitModuleError;
    } catch (const std::exception &e) {
        Json j{{"error", {{"code", "Internal"}, {"message", e.what()}}}};
        err << j.dump() << "\n";
        return kExitModuleError;
    }
}

}  // namespace grac
