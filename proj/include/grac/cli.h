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

#ifndef GRAC_CLI_H
#define GRAC_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace grac {

inline constexpr int kExitOk = 0;
inline constexpr int kExitModuleError = 1;
inline constexpr int kExitTolerance = 2;

struct RunConfig {
    std::string command;  // mubs | classical | quantum | noise | eacc | tables
    int n = 3;
    std::string labels = "all";
    uint64_t seed = 0;
    /// Artifact path; "-" prints the artifact to stdout instead of the summary.
    std::string output;
    std::string format = "json";  // json | csv | text

    // mubs
    std::string check;
    // classical
    size_t cap = 16;
    // quantum / eacc; 0 keeps the module default
    int restarts = 0;
    std::string fixture;
    int dim = 2;
    // noise
    std::string channel = "depolarizing";
    std::string axis = "1,0,0";
    int points = 101;
    std::string compare;
    // tables
    std::vector<std::string> tables;
};

/// Runs one command. Prints a one-line summary to `out`; on failure prints
/// {"error": {"code", "message"}} to `err` and returns kExitModuleError.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Writes `content` to `path` through a sibling temp file and a rename.
void write_atomically(const std::string &path, const std::string &content);

}  // namespace grac

#endif  // GRAC_CLI_H
