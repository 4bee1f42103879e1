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

#include "altqa/pipeline/verification.hpp"

#include "altqa/common/error.hpp"
#include "altqa/rollout/codec.hpp"

namespace altqa::pipeline {

void VerificationPolicy::validate() const {
  if (verifiers < 1) throw Error(ErrorCode::kInvalidArgument, "at least one verifier is required");
  if (threshold_eta < 1 || threshold_eta > verifiers) {
    throw Error(ErrorCode::kInvalidArgument,
                "eta must satisfy 1 <= eta <= K (eta=" + std::to_string(threshold_eta) +
                    ", K=" + std::to_string(verifiers) + ")");
  }
}

std::string rollout_text_for_candidate(const rollout::Trajectory& trajectory, std::string_view answer) {
  const rollout::ActionStep* last = nullptr;
  for (const auto& step : trajectory.steps) {
    if (step.kind == rollout::StepKind::kAnswer && step.answer) last = &step;
  }
  if (last == nullptr) return trajectory.raw;

  rollout::AnswerBlock narrowed{last->answer->rationale, {std::string(answer)}};
  const auto tags = rollout::tags_for(trajectory.dialect, rollout::StepKind::kAnswer);
  std::string out = trajectory.raw.substr(0, last->span.begin);
  out += tags.open;
  out += rollout::render_answer_payload(narrowed, trajectory.dialect);
  out += tags.close;
  out += trajectory.raw.substr(last->span.end);
  return out;
}

VoteTally collect_votes(std::vector<CandidateRecord>& candidates, std::string_view question,
                        std::span<judge::Judge* const> verifiers) {
  VoteTally tally;
  for (auto& candidate : candidates) {
    candidate.votes.clear();
    const std::string text = rollout_text_for_candidate(*candidate.trajectory, candidate.answer);
    for (judge::Judge* verifier : verifiers) {
      Vote vote;
      vote.verifier_id = verifier->id();
      try {
        vote.verdict = verifier->verify_evidence(question, text, candidate.answer);
      } catch (const Error& e) {
        vote.error = e.what();
        vote.error_code = e.code();
        ++tally.failures;
        if (e.code() == ErrorCode::kTransportFailure) ++tally.transport_failures;
      }
      candidate.votes.push_back(std::move(vote));
    }
  }
  return tally;
}

std::vector<CandidateRecord> apply_threshold(const std::vector<CandidateRecord>& voted,
                                             std::size_t threshold_eta) {
  std::vector<CandidateRecord> kept;
  for (const auto& candidate : voted) {
    if (candidate.supported_votes() < threshold_eta) continue;
    CandidateRecord copy = candidate;
    copy.stage = Stage::kVerified;
    kept.push_back(std::move(copy));
  }
  return kept;
}

}  // namespace altqa::pipeline
