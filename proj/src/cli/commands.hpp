// Copyright 2026 The altqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <ostream>
#include <string>

#include "altqa/cli/config.hpp"
#include "altqa/common/error.hpp"

namespace CLI {
class App;
}

namespace altqa::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::function<int()> action;  // set by the chosen subcommand's callback
};

void register_score(CLI::App& app, Context& ctx);
void register_estimate(CLI::App& app, Context& ctx);
void register_pipeline(CLI::App& app, Context& ctx);
void register_advantages(CLI::App& app, Context& ctx);
void register_retriever(CLI::App& app, Context& ctx);
void register_parse(CLI::App& app, Context& ctx);

// Prints the error and maps it to an exit code: argument problems give
// kExitConfig, everything else (unreadable or malformed inputs) kExitIngest.
int fail(Context& ctx, const Error& error);

}  // namespace altqa::cli
