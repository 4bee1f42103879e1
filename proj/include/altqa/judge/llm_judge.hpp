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

#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <semaphore>
#include <string>

#include "altqa/judge/judge.hpp"

namespace altqa::judge {

struct JudgeEndpointConfig {
  std::string base_url;  // e.g. "http://127.0.0.1:8000/v1"
  std::string model_name;
  std::chrono::milliseconds timeout{60'000};
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{500};
  std::string api_key_env = "ALTQA_JUDGE_API_KEY";
  std::size_t max_in_flight = 8;

  // Throws kInvalidArgument when max_retries < 0, timeout <= 0,
  // backoff_base < 0 or max_in_flight == 0.
  void validate() const;
};

// Turns a rendered prompt into the model's reply text. Transport problems are
// reported as Error(kTransportFailure).
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  virtual std::string complete(const std::string& prompt) = 0;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

Sleeper real_sleeper();

// Judge backed by a completion endpoint. Each call makes at most
// max_retries + 1 attempts. Transport errors, unparseable replies, bad labels
// and partition violations all trigger a retry, with a pause of
// backoff_base * 2^n before retry n + 1. When attempts run out the last error
// is rethrown; unparseable replies surface as kMalformedVerdict.
class LlmJudge final : public Judge {
 public:
  LlmJudge(std::string id, JudgeEndpointConfig config, std::shared_ptr<CompletionBackend> backend,
           Sleeper sleeper = real_sleeper());

  const std::string& id() const override { return id_; }

  EquivalenceVerdict judge_equivalence(std::string_view question, std::span<const std::string> gold,
                                       std::string_view prediction) override;
  EvidenceVerdict verify_evidence(std::string_view question, std::string_view rollout_text,
                                  std::string_view answer) override;
  GroupingResult group_answers(std::span<const std::string> answers) override;

  // Backend calls made so far across all threads.
  std::size_t attempts() const { return attempts_.load(); }

  const JudgeEndpointConfig& config() const { return config_; }

 private:
  template <class Parse>
  auto call(const std::string& prompt, Parse parse) -> decltype(parse(std::string()));

  std::string id_;
  JudgeEndpointConfig config_;
  std::shared_ptr<CompletionBackend> backend_;
  Sleeper sleeper_;
  std::unique_ptr<std::counting_semaphore<>> in_flight_;
  std::atomic<std::size_t> attempts_{0};
};

}  // namespace altqa::judge
