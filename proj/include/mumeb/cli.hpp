// Copyright 2026 The mumeb Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mumeb/meb.hpp"

namespace mumeb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;

enum class OutputFormat { Json, Pretty };

struct RunConfig {
    std::string command;
    int s = 2;
    std::string family = "triple";
    std::optional<std::string> custom;
    VerifyMode mode = VerifyMode::Shortcut;
    std::uint64_t budget = 10'000'000;
    unsigned threads = 0;  // 0: hardware concurrency
    std::optional<std::string> out;
    std::optional<OutputFormat> format;
    bool states = false;
    std::optional<std::string> poly_table;
};

/// Throws Error(InvalidConfig) on constraint violations that the parser
/// cannot see, e.g. brute force above the materialization limit.
void validate(const RunConfig &config);

int cmd_build(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_search(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_tables(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses `args` (without the program name) and dispatches. Config errors
/// return kExitConfig, failed verifications kExitFailed.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mumeb
