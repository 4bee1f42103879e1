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

#include "support/synthetic.hpp"

#include <nlohmann/json.hpp>

#include "altqa/common/jsonl.hpp"
#include "altqa/metrics/matching.hpp"
#include "altqa/rollout/codec.hpp"

namespace altqa::testing {

namespace {

using rollout::AnswerBlock;
using rollout::Dialect;
using rollout::TrajectoryBuilder;

const std::vector<std::string>& alphabet() {
  static const std::vector<std::string> chars = {
      "a", "b", "c", "e", "k", "q", "z", "A", "M", "0", "7", " ", " ", ".", ",", "(",
      ")", ":", "'", "\"", "-", "é", "ü", "中", "Ж", "\n", "\t", ">"};
  return chars;
}

std::string random_text(Rng& rng, std::size_t min_len, std::size_t max_len, bool allow_layout) {
  const auto& chars = alphabet();
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    const std::string& c = chars[rng.below(chars.size())];
    if (!allow_layout && (c == "\n" || c == "\t")) continue;
    out += c;
  }
  return out;
}

std::string random_answer(Rng& rng) {
  static const std::vector<std::string> words = {"Paris", "de Gaulle", "1984", "Köln", "acid house",
                                                 "東京", "O'Brien", "St. Louis", "x", "Oliver Leaman"};
  std::string out = words[rng.below(words.size())];
  if (rng.chance(1, 3)) out += " " + words[rng.below(words.size())];
  return out;
}

std::string query_payload(Dialect dialect, const std::string& query) {
  if (dialect == Dialect::kBase) return query;
  nlohmann::json call = {{"name", "search"}, {"arguments", {{"query", query}}}};
  return call.dump();
}

std::string search_results(const std::vector<std::string>& mentions, const std::string& topic) {
  std::string out;
  std::size_t doc = 1;
  for (const auto& m : mentions) {
    out += "Doc " + std::to_string(doc++) + "(Title: \"" + topic + "\") " + "Records list " + m +
           " in connection with " + topic + ".\n";
  }
  out += "Doc " + std::to_string(doc) + "(Title: \"Filler\") Unrelated background text.\n";
  return out;
}

}  // namespace

rollout::Trajectory random_trajectory(Rng& rng, Dialect dialect) {
  TrajectoryBuilder builder(dialect, rng.chance(1, 2) ? "\n" : "\n\n");
  if (rng.chance(1, 2)) builder.text("<|im_start|>assistant\n");
  const std::size_t steps = 1 + rng.below(6);
  for (std::size_t i = 0; i < steps; ++i) {
    switch (rng.below(3)) {
      case 0:
        builder.reasoning(random_text(rng, 0, 60, true));
        break;
      case 1:
        builder.tool_call(dialect == Dialect::kBase ? random_text(rng, 1, 30, false)
                                                    : query_payload(dialect, random_text(rng, 1, 30, false)));
        if (rng.chance(3, 4)) builder.tool_response(random_text(rng, 0, 120, true));
        break;
      default:
        builder.reasoning(random_text(rng, 1, 20, false));
        break;
    }
  }
  if (rng.chance(4, 5)) {
    AnswerBlock block;
    const std::size_t n = 1 + rng.below(4);
    for (std::size_t i = 0; i < n; ++i) block.answers.push_back(random_answer(rng));
    if (dialect == Dialect::kInstruct && rng.chance(1, 2)) block.rationale = random_text(rng, 1, 40, true);
    builder.answer(block);
    if (rng.chance(1, 2)) builder.text("<|im_end|>");
  }
  return builder.build();
}

SyntheticCorpus make_synthetic_corpus(std::size_t questions, std::uint32_t seed) {
  static const std::vector<std::string> models = {"model-a", "model-b", "model-c"};
  static const std::vector<std::string> datasets = {"hotpotqa", "2wiki", "musique", "bamboogle"};
  constexpr std::size_t kRolloutsPerModel = 4;

  Rng rng(seed);
  SyntheticCorpus corpus;
  for (std::size_t q = 0; q < questions; ++q) {
    char id[32];
    std::snprintf(id, sizeof id, "syn-%03zu", q);
    const std::string qid = id;
    const std::string topic = "Topic " + std::to_string(q);

    pipeline::ManifestEntry entry;
    entry.question_id = qid;
    entry.question = "Which entity is linked to " + topic + "?";
    entry.reference.canonical = "Reference " + std::to_string(q);
    if (rng.chance(1, 3)) entry.reference.aliases.insert("Ref. " + std::to_string(q));
    entry.source_dataset = datasets[q % datasets.size()];
    corpus.manifest.push_back(entry);

    std::vector<std::string> alternatives;
    const std::size_t alt_count = rng.below(4);
    for (std::size_t a = 0; a < alt_count; ++a) {
      alternatives.push_back("Alternative " + std::to_string(q) + "-" + std::to_string(a));
    }
    const std::vector<std::string> distractors = {"Distractor " + std::to_string(q) + "-0",
                                                  "Distractor " + std::to_string(q) + "-1"};

    for (std::size_t m = 0; m < models.size(); ++m) {
      // 0: always the reference (case 1), 1: never the reference (case 2),
      // 2: mixed (case 3).
      const std::size_t mode = rng.below(3);
      for (std::size_t r = 0; r < kRolloutsPerModel; ++r) {
        const Dialect dialect = (r % 2 == 0) ? Dialect::kInstruct : Dialect::kBase;
        std::vector<std::string> answers;
        const bool with_reference = mode == 0 || (mode == 2 && r % 2 == 0);
        if (with_reference) {
          answers.push_back(rng.chance(1, 4) && !entry.reference.aliases.empty()
                                ? *entry.reference.aliases.begin()
                                : entry.reference.canonical);
        }
        if (mode != 0) {
          const std::size_t extra = 1 + rng.below(2);
          for (std::size_t e = 0; e < extra; ++e) {
            if (!alternatives.empty() && rng.chance(2, 3)) {
              answers.push_back(alternatives[rng.below(alternatives.size())]);
            } else {
              answers.push_back(distractors[rng.below(distractors.size())]);
            }
          }
        }
        if (dialect == Dialect::kBase && answers.size() > 1 && rng.chance(1, 2)) answers.resize(1);

        // Retrieved text mentions the reference and most alternatives the
        // rollout names; some alternatives are only asserted in reasoning.
        std::vector<std::string> mentioned = {entry.reference.canonical};
        std::string reasoning_tail;
        for (const auto& a : answers) {
          if (a.rfind("Alternative", 0) == 0) {
            if (rng.chance(3, 4)) {
              mentioned.push_back(a);
            } else {
              reasoning_tail += " I believe " + a + " also fits.";
            }
          }
        }

        TrajectoryBuilder builder(dialect);
        builder.text("<|im_start|>assistant\n");
        builder.reasoning("I should search for " + topic + "." + reasoning_tail);
        builder.tool_call(query_payload(dialect, topic));
        builder.tool_response(search_results(mentioned, topic));
        builder.reasoning("The documents point to an answer.");
        AnswerBlock block;
        block.answers = answers;
        if (dialect == Dialect::kInstruct) block.rationale = "Based on the retrieved documents.";
        builder.answer(block);
        builder.text("<|im_end|>");

        rollout::RolloutRecord record;
        record.question_id = qid;
        record.question = entry.question;
        record.dialect = dialect;
        record.raw = builder.build().raw;
        record.terminated_cleanly = true;
        record.source_model = models[m];
        record.sampling_temperature = 1.0;
        corpus.records.push_back(std::move(record));
      }
    }
  }
  return corpus;
}

void write_synthetic_corpus(const SyntheticCorpus& corpus, const std::filesystem::path& manifest,
                            const std::filesystem::path& trajectories) {
  jsonl::Writer m(manifest);
  for (const auto& e : corpus.manifest) {
    nlohmann::ordered_json doc;
    doc["question_id"] = e.question_id;
    doc["question"] = e.question;
    doc["reference"] = metrics::to_json(e.reference);
    doc["source_dataset"] = e.source_dataset;
    m.write(doc);
  }
  m.close();
  jsonl::Writer t(trajectories);
  for (const auto& r : corpus.records) t.write(rollout::to_json(r));
  t.close();
}

}  // namespace altqa::testing
