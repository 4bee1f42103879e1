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

#include "altqa/judge/llm_judge.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "altqa/common/error.hpp"
#include "altqa/judge/prompts.hpp"
#include "altqa/judge/response_parsing.hpp"

namespace altqa::judge {

void JudgeEndpointConfig::validate() const {
  if (max_retries < 0) throw Error(ErrorCode::kInvalidArgument, "max_retries must be >= 0");
  if (timeout.count() <= 0) throw Error(ErrorCode::kInvalidArgument, "timeout must be > 0");
  if (backoff_base.count() < 0) throw Error(ErrorCode::kInvalidArgument, "backoff_base must be >= 0");
  if (max_in_flight == 0) throw Error(ErrorCode::kInvalidArgument, "max_in_flight must be >= 1");
}

Sleeper real_sleeper() {
  return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

LlmJudge::LlmJudge(std::string id, JudgeEndpointConfig config,
                   std::shared_ptr<CompletionBackend> backend, Sleeper sleeper)
    : id_(std::move(id)),
      config_(std::move(config)),
      backend_(std::move(backend)),
      sleeper_(std::move(sleeper)) {
  config_.validate();
  if (!backend_) throw Error(ErrorCode::kInvalidArgument, "judge '" + id_ + "' has no backend");
  in_flight_ = std::make_unique<std::counting_semaphore<>>(
      static_cast<std::ptrdiff_t>(config_.max_in_flight));
}

template <class Parse>
auto LlmJudge::call(const std::string& prompt, Parse parse) -> decltype(parse(std::string())) {
  std::optional<Error> last;
  const int allowed = config_.max_retries + 1;
  for (int attempt = 0; attempt < allowed; ++attempt) {
    if (attempt > 0 && sleeper_) {
      const int shift = std::min(attempt - 1, 20);
      sleeper_(config_.backoff_base * (1LL << shift));
    }
    attempts_.fetch_add(1);

    std::string reply;
    in_flight_->acquire();
    try {
      reply = backend_->complete(prompt);
      in_flight_->release();
    } catch (const Error& e) {
      in_flight_->release();
      last = e;
      continue;
    } catch (const std::exception& e) {
      in_flight_->release();
      last = Error(ErrorCode::kTransportFailure, e.what());
      continue;
    }

    try {
      return parse(reply);
    } catch (const Error& e) {
      last = e;
    }
  }

  const std::string suffix = " (judge '" + id_ + "', " + std::to_string(allowed) + " attempts)";
  if (last->code() == ErrorCode::kParseFailure) {
    throw Error(ErrorCode::kMalformedVerdict, last->what() + suffix);
  }
  throw Error(last->code(), last->what() + suffix);
}

EquivalenceVerdict LlmJudge::judge_equivalence(std::string_view question,
                                               std::span<const std::string> gold,
                                               std::string_view prediction) {
  if (gold.empty()) throw Error(ErrorCode::kInvalidArgument, "gold answer list is empty");
  return call(render_equivalence_prompt(question, gold, prediction),
              [](const std::string& r) { return parse_equivalence_response(r); });
}

EvidenceVerdict LlmJudge::verify_evidence(std::string_view question, std::string_view rollout_text,
                                          std::string_view /*answer*/) {
  return call(render_evidence_prompt(question, rollout_text),
              [](const std::string& r) { return parse_evidence_response(r); });
}

GroupingResult LlmJudge::group_answers(std::span<const std::string> answers) {
  if (answers.empty()) throw Error(ErrorCode::kInvalidArgument, "no answers to group");
  return call(render_grouping_prompt(answers), [answers](const std::string& r) {
    GroupingResult result = parse_grouping_response(r);
    validate_partition(answers, result);
    return result;
  });
}

}  // namespace altqa::judge
