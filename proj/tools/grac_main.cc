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

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "grac/cli.h"

int main(int argc, char **argv) {
    grac::RunConfig cfg;
    CLI::App app{"Generalized random access codes: classical, qubit and entanglement-assisted values"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--n", cfg.n, "input width")->capture_default_str();
    app.add_option("--labels", cfg.labels, "all | comma list of bitstrings | k=<m>[:xor-closed|open]")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    app.add_option("--out", cfg.output, "artifact path ('-' for stdout)");
    app.add_option("--format", cfg.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    auto *mubs = app.add_subcommand("mubs", "check mutual unbiasedness of a label set");
    mubs->add_option("--check", cfg.check, "labels to check (defaults to --labels)");

    auto *classical = app.add_subcommand("classical", "exhaustive classical optimum");
    classical->add_option("--cap", cfg.cap, "maximum optimal strategies to list")->capture_default_str();

    auto *quantum = app.add_subcommand("quantum", "qubit prepare-and-measure see-saw");
    quantum->add_option("--restarts", cfg.restarts, "see-saw restarts (default 64)");
    quantum->add_option("--fixture", cfg.fixture, "evaluate an explicit protocol: A B1 B2 C D_box D_planar E");

    auto *noise = app.add_subcommand("noise", "noise sweeps and crossing windows");
    noise->add_option("--channel", cfg.channel, "depolarizing | dephasing")->capture_default_str();
    noise->add_option("--axis", cfg.axis, "dephasing axis x,y,z")->capture_default_str();
    noise->add_option("--points", cfg.points, "grid points")->capture_default_str();
    noise->add_option("--restarts", cfg.restarts, "cold restarts at the first grid point (default 64)");
    noise->add_option("--compare", cfg.compare, "second label set; reports where --labels is ahead");

    auto *eacc = app.add_subcommand("eacc", "entanglement-assisted one-bit see-saw");
    eacc->add_option("--dim", cfg.dim, "local dimension (2..4)")->capture_default_str();
    eacc->add_option("--restarts", cfg.restarts, "see-saw restarts (default 32)");

    auto *tables = app.add_subcommand("tables", "reproduce reference tables I II Q III IV");
    tables->add_option("ids", cfg.tables, "table ids (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        nlohmann::json j{{"error", {{"code", "ParseError"}, {"message", e.what()}}}};
        std::cerr << j.dump() << "\n";
        return grac::kExitModuleError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return grac::run(cfg, std::cout, std::cerr);
}
