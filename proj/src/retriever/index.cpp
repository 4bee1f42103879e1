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

#include "altqa/retriever/index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "altqa/common/error.hpp"
#include "altqa/common/jsonl.hpp"
#include "altqa/retriever/tokenizer.hpp"

namespace altqa::retriever {

namespace {

constexpr int kFormatVersion = 1;

}  // namespace

void Bm25Params::validate() const {
  if (!(k1 >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "k1 must be >= 0");
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "b must be in [0, 1]");
}

RetrievalIndex RetrievalIndex::build(std::vector<Chunk> chunks, Bm25Params params) {
  params.validate();
  if (chunks.empty()) throw Error(ErrorCode::kEmptyCorpus, "cannot index an empty corpus");
  RetrievalIndex index;
  index.params_ = params;
  index.chunks_ = std::move(chunks);
  index.lengths_.reserve(index.chunks_.size());

  std::size_t total = 0;
  for (std::size_t i = 0; i < index.chunks_.size(); ++i) {
    const Chunk& c = index.chunks_[i];
    std::vector<std::string> tokens = tokenize(c.body);
    if (params.score_titles) {
      auto title_tokens = tokenize(c.title);
      tokens.insert(tokens.end(), title_tokens.begin(), title_tokens.end());
    }
    std::map<std::string, std::uint32_t> tf;
    for (auto& t : tokens) ++tf[std::move(t)];
    for (auto& [term, count] : tf) {
      index.postings_[term].push_back({static_cast<std::uint32_t>(i), count});
    }
    index.lengths_.push_back(tokens.size());
    total += tokens.size();
  }
  index.avgdl_ = static_cast<double>(total) / static_cast<double>(index.chunks_.size());
  return index;
}

std::size_t RetrievalIndex::document_frequency(const std::string& term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? 0 : it->second.size();
}

double RetrievalIndex::idf(const std::string& term) const {
  const double n = static_cast<double>(chunks_.size());
  const double df = static_cast<double>(document_frequency(term));
  return std::log(1.0 + (n - df + 0.5) / (df + 0.5));
}

std::vector<ScoredChunk> RetrievalIndex::search(std::string_view query, std::size_t top_k) const {
  if (top_k == 0) throw Error(ErrorCode::kInvalidArgument, "top_k must be >= 1");
  const auto tokens = tokenize(query);
  const std::set<std::string> terms(tokens.begin(), tokens.end());

  std::map<std::uint32_t, double> scores;
  for (const auto& term : terms) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double w = idf(term);
    for (const Posting& p : it->second) {
      const double tf = p.tf;
      const double norm = params_.k1 * (1.0 - params_.b +
                                        params_.b * static_cast<double>(lengths_[p.chunk]) / avgdl_);
      scores[p.chunk] += w * tf * (params_.k1 + 1.0) / (tf + norm);
    }
  }

  std::vector<ScoredChunk> ranked;
  ranked.reserve(scores.size());
  for (const auto& [chunk, score] : scores) ranked.push_back({chunk, chunks_[chunk].chunk_id, score});
  auto better = [](const ScoredChunk& a, const ScoredChunk& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.chunk_id < b.chunk_id;
  };
  const std::size_t n = std::min(top_k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n), ranked.end(), better);
  ranked.resize(n);
  return ranked;
}

nlohmann::ordered_json RetrievalIndex::to_json() const {
  nlohmann::ordered_json doc;
  doc["format"] = "altqa-bm25";
  doc["version"] = kFormatVersion;
  doc["params"] = {{"k1", params_.k1}, {"b", params_.b}, {"score_titles", params_.score_titles}};
  auto chunks = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < chunks_.size(); ++i) {
    const Chunk& c = chunks_[i];
    nlohmann::ordered_json entry;
    entry["chunk_id"] = c.chunk_id;
    entry["doc_id"] = c.doc_id;
    entry["title"] = c.title;
    entry["body"] = c.body;
    entry["position"] = c.position;
    entry["word_count"] = c.word_count;
    entry["token_count"] = lengths_[i];
    chunks.push_back(std::move(entry));
  }
  doc["chunks"] = std::move(chunks);
  nlohmann::ordered_json df = nlohmann::ordered_json::object();
  for (const auto& [term, list] : postings_) df[term] = list.size();
  doc["stats"] = {{"chunk_count", chunks_.size()}, {"average_length", avgdl_}, {"df", std::move(df)}};
  return doc;
}

RetrievalIndex RetrievalIndex::from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format").get<std::string>() != "altqa-bm25" || doc.at("version").get<int>() != kFormatVersion) {
      throw Error(ErrorCode::kParseFailure, "not an altqa-bm25 v1 index");
    }
    Bm25Params params;
    params.k1 = doc.at("params").at("k1").get<double>();
    params.b = doc.at("params").at("b").get<double>();
    params.score_titles = doc.at("params").at("score_titles").get<bool>();
    std::vector<Chunk> chunks;
    for (const auto& entry : doc.at("chunks")) {
      Chunk c;
      c.chunk_id = entry.at("chunk_id").get<std::uint64_t>();
      c.doc_id = entry.at("doc_id").get<std::string>();
      c.title = entry.at("title").get<std::string>();
      c.body = entry.at("body").get<std::string>();
      c.position = entry.at("position").get<std::size_t>();
      c.word_count = entry.at("word_count").get<std::size_t>();
      chunks.push_back(std::move(c));
    }
    return build(std::move(chunks), params);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseFailure, std::string("malformed index: ") + e.what());
  }
}

void RetrievalIndex::save(const std::filesystem::path& path) const {
  jsonl::write_json_file(path, to_json());
}

RetrievalIndex RetrievalIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::kParseFailure, path.string() + ": invalid JSON");
  return from_json(doc);
}

}  // namespace altqa::retriever
