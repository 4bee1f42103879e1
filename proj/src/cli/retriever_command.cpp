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

#include <chrono>
#include <memory>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altqa/retriever/corpus.hpp"
#include "altqa/retriever/index.hpp"
#include "altqa/retriever/service.hpp"
#include "commands.hpp"

namespace altqa::cli {

namespace {

struct BuildOptions {
  std::string corpus;
  std::string index;
  std::size_t words_per_chunk = retriever::kWordsPerChunk;
  retriever::Bm25Params params;
};

struct ServeOptions {
  std::string index;
  std::string bind = "127.0.0.1:8080";
  std::size_t top_k = retriever::kDefaultTopK;
};

struct QueryOptions {
  std::string index;
  std::string query;
  std::size_t top_k = retriever::kDefaultTopK;
  std::string format = "json";
};

int run_build(const BuildOptions& opts, Context& ctx) {
  const auto docs = retriever::load_documents(opts.corpus);
  std::vector<std::string> warnings;
  auto chunks = retriever::chunk_corpus(docs, opts.words_per_chunk, &warnings);
  for (const auto& w : warnings) ctx.err << "warning: " << w << '\n';
  if (chunks.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus produced no chunks");
  const auto index = retriever::RetrievalIndex::build(std::move(chunks), opts.params);
  index.save(opts.index);
  ctx.out << opts.index << '\n';
  ctx.out << "indexed " << docs.size() << " documents into " << index.size() << " chunks\n";
  return kExitOk;
}

int run_serve(const ServeOptions& opts, Context& ctx) {
  const auto colon = opts.bind.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "--bind expects host:port");
  const std::string host = opts.bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(opts.bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "--bind port is not a number");
  }
  auto index = std::make_shared<const retriever::RetrievalIndex>(retriever::RetrievalIndex::load(opts.index));
  const auto& interrupted = install_interrupt_flag();
  retriever::RetrieverService service(index, opts.top_k);
  try {
    service.start(host, port);
  } catch (const Error& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  ctx.out << "serving " << index->size() << " chunks on http://" << host << ":" << service.port()
          << "/search" << std::endl;
  while (!interrupted.load()) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  service.stop();
  ctx.out << "stopped\n";
  return kExitOk;
}

int run_query(const QueryOptions& opts, Context& ctx) {
  const auto index = retriever::RetrievalIndex::load(opts.index);
  const auto ranked = index.search(opts.query, opts.top_k);
  if (opts.format == "passages") {
    ctx.out << retriever::format_passages(index, ranked) << '\n';
    return kExitOk;
  }
  auto results = nlohmann::ordered_json::array();
  for (const auto& hit : ranked) {
    const auto& c = index.chunk(hit.index);
    results.push_back({{"chunk_id", c.chunk_id},
                       {"doc_id", c.doc_id},
                       {"title", c.title},
                       {"body", c.body},
                       {"score", hit.score}});
  }
  ctx.out << nlohmann::ordered_json{{"results", results}}.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

void register_retriever(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("retriever", "Lexical retriever: build an index, serve it, query it");
  group->require_subcommand(1);

  auto build = std::make_shared<BuildOptions>();
  auto* b = group->add_subcommand("build", "Chunk a corpus and write a BM25 index");
  b->add_option("--corpus", build->corpus, "JSON Lines of {doc_id, title, text}")->required();
  b->add_option("--index", build->index, "Index file to write")->required();
  b->add_option("--words-per-chunk", build->words_per_chunk, "Chunk window size")->capture_default_str();
  b->add_option("--k1", build->params.k1, "BM25 term-frequency saturation")->capture_default_str();
  b->add_option("--b", build->params.b, "BM25 length normalization")->capture_default_str();
  b->add_flag("--score-titles", build->params.score_titles, "Include titles in scoring");
  b->callback([&ctx, build] { ctx.action = [&ctx, build] { return run_build(*build, ctx); }; });

  auto serve = std::make_shared<ServeOptions>();
  auto* s = group->add_subcommand("serve", "Serve POST /search until interrupted");
  s->add_option("--index", serve->index, "Index file")->required();
  s->add_option("--bind", serve->bind, "host:port (port 0 picks a free port)")->capture_default_str();
  s->add_option("--top-k", serve->top_k, "Default result count")->capture_default_str();
  s->callback([&ctx, serve] { ctx.action = [&ctx, serve] { return run_serve(*serve, ctx); }; });

  auto query = std::make_shared<QueryOptions>();
  auto* q = group->add_subcommand("query", "Run one query against an index");
  q->add_option("--index", query->index, "Index file")->required();
  q->add_option("-q,--query", query->query, "Query text")->required();
  q->add_option("--top-k", query->top_k, "Result count")->capture_default_str();
  q->add_option("--format", query->format, "json or passages")
      ->check(CLI::IsMember({"json", "passages"}))
      ->capture_default_str();
  q->callback([&ctx, query] { ctx.action = [&ctx, query] { return run_query(*query, ctx); }; });
}

}  // namespace altqa::cli
