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

#include "altqa/cli/app.hpp"

#include <CLI11.hpp>

#include "commands.hpp"

namespace altqa::cli {

int fail(Context& ctx, const Error& error) {
  ctx.err << "error: " << error.what() << '\n';
  return error.code() == ErrorCode::kInvalidArgument ? kExitConfig : kExitIngest;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ambiguity-aware QA toolkit: rollout parsing, multi-answer metrics, GRPO math, "
               "alternative-answer mining and a lexical retriever."};
  app.name("altqa");
  app.set_config("--config", "", "TOML config file; [section] names match subcommands")
      ->envname("ALTQA_CONFIG");
  app.require_subcommand(1);

  Context ctx{out, err, {}};
  register_score(app, ctx);
  register_estimate(app, ctx);
  register_pipeline(app, ctx);
  register_advantages(app, ctx);
  register_retriever(app, ctx);
  register_parse(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (!ctx.action) {
    err << app.help();
    return kExitConfig;
  }
  try {
    return ctx.action();
  } catch (const Error& e) {
    return fail(ctx, e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIngest;
  }
}

}  // namespace altqa::cli
