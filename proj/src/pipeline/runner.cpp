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

#include "altqa/pipeline/runner.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "altqa/common/error.hpp"

namespace altqa::pipeline {

double PipelineResult::transport_failure_fraction() const {
  std::size_t units = 0;
  std::size_t affected = 0;
  for (const auto& q : questions) {
    units += q.filter.units;
    affected += q.transport_affected;
  }
  return units == 0 ? 0.0 : static_cast<double>(affected) / static_cast<double>(units);
}

std::vector<MinedQuestion> PipelineResult::mined() const {
  std::vector<MinedQuestion> out;
  for (const auto& q : questions) {
    if (q.processed) out.push_back(q.mined);
  }
  return out;
}

void validate_panel(const JudgePanel& panel, const VerificationPolicy& policy) {
  policy.validate();
  if (panel.equivalence == nullptr || panel.grouper == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "judge panel needs equivalence and grouping judges");
  }
  if (panel.verifiers.size() != policy.verifiers) {
    throw Error(ErrorCode::kInvalidArgument,
                "policy expects " + std::to_string(policy.verifiers) + " verifiers, panel has " +
                    std::to_string(panel.verifiers.size()));
  }
  for (const auto* v : panel.verifiers) {
    if (v == nullptr) throw Error(ErrorCode::kInvalidArgument, "null verifier in panel");
  }
}

QuestionResult process_question(const QuestionSamples& samples, const JudgePanel& panel,
                                const VerificationPolicy& policy) {
  QuestionResult result;
  result.question_id = samples.entry.question_id;
  result.source_dataset = samples.entry.source_dataset;
  result.t1 = samples.trajectory_count();

  result.filter = run_filtering(samples, *panel.equivalence);
  result.voted = result.filter.t2;
  result.votes = collect_votes(result.voted, samples.entry.question, panel.verifiers);
  result.t3 = apply_threshold(result.voted, policy.threshold_eta);
  result.mined = run_grouping(samples.entry, result.t3, *panel.grouper);

  result.transport_affected = result.filter.transport_errors;
  for (const auto& c : result.voted) {
    result.transport_affected += std::any_of(c.votes.begin(), c.votes.end(), [](const Vote& v) {
      return v.error_code == ErrorCode::kTransportFailure;
    });
  }
  result.processed = true;
  return result;
}

PipelineResult run_pipeline(const SampleSet& samples, const JudgePanel& panel, const RunOptions& options) {
  validate_panel(panel, options.policy);
  std::vector<const QuestionSamples*> order;
  for (const auto& [qid, q] : samples) order.push_back(&q);

  PipelineResult result;
  result.threshold_eta = options.policy.threshold_eta;
  result.verifiers = options.policy.verifiers;
  result.questions.resize(order.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      if (options.cancel && options.cancel->load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= order.size()) return;
      try {
        result.questions[i] = process_question(*order[i], panel, options.policy);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(order.size(), 1));
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& q = result.questions[i];
    if (!q.processed) {
      q.question_id = order[i]->entry.question_id;
      q.source_dataset = order[i]->entry.source_dataset;
      result.incomplete = true;
    }
  }
  return result;
}

}  // namespace altqa::pipeline
