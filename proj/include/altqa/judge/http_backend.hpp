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

#include <string>

#include "altqa/judge/llm_judge.hpp"

namespace altqa::judge {

// Chat-completions style backend. POSTs
//   {"model": ..., "messages": [{"role": "user", "content": prompt}], "temperature": 0}
// to <base_url>/chat/completions and returns choices[0].message.content.
// When the environment variable named by api_key_env is set its value is sent
// as a bearer token. http:// and https:// are both accepted.
class HttpChatBackend final : public CompletionBackend {
 public:
  explicit HttpChatBackend(JudgeEndpointConfig config);

  std::string complete(const std::string& prompt) override;

 private:
  JudgeEndpointConfig config_;
  std::string origin_;       // scheme://host[:port]
  std::string path_prefix_;  // "" or "/v1" style, no trailing slash
};

}  // namespace altqa::judge
