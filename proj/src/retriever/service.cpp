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

#include "altqa/retriever/service.hpp"

#include <httplib.h>

#include "altqa/common/error.hpp"

namespace altqa::retriever {

SearchResponse handle_search(const RetrievalIndex& index, const std::string& request_body,
                             std::size_t default_top_k) {
  auto bad = [](const std::string& why) {
    SearchResponse r;
    r.status = 400;
    r.body["error"] = why;
    return r;
  };
  const auto doc = nlohmann::json::parse(request_body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return bad("body must be a JSON object");
  auto q = doc.find("query");
  if (q == doc.end() || !q->is_string()) return bad("'query' must be a string");
  std::size_t top_k = default_top_k;
  if (auto k = doc.find("top_k"); k != doc.end() && !k->is_null()) {
    if (!k->is_number_integer() || k->get<long long>() < 1) return bad("'top_k' must be a positive integer");
    top_k = static_cast<std::size_t>(k->get<long long>());
  }

  SearchResponse response;
  auto results = nlohmann::ordered_json::array();
  for (const auto& hit : index.search(q->get<std::string>(), top_k)) {
    const Chunk& c = index.chunk(hit.index);
    nlohmann::ordered_json entry;
    entry["title"] = c.title;
    entry["body"] = c.body;
    entry["score"] = hit.score;
    results.push_back(std::move(entry));
  }
  response.body["results"] = std::move(results);
  return response;
}

std::string format_passages(const RetrievalIndex& index, const std::vector<ScoredChunk>& ranked) {
  std::string out;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const Chunk& c = index.chunk(ranked[i].index);
    if (i > 0) out += "\n\n";
    out += c.title;
    out += '\n';
    out += c.body;
  }
  return out;
}

RetrieverService::RetrieverService(std::shared_ptr<const RetrievalIndex> index, std::size_t default_top_k)
    : index_(std::move(index)), default_top_k_(default_top_k) {
  if (!index_) throw Error(ErrorCode::kInvalidArgument, "retriever service needs an index");
  if (default_top_k_ == 0) throw Error(ErrorCode::kInvalidArgument, "top_k must be >= 1");
}

RetrieverService::~RetrieverService() { stop(); }

void RetrieverService::start(const std::string& host, int port) {
  if (server_) throw Error(ErrorCode::kInvalidArgument, "retriever service already started");
  auto server = std::make_unique<httplib::Server>();
  // httplib defaults to SO_REUSEPORT, which would let a second service share
  // an occupied port instead of failing to bind.
  server->set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  auto index = index_;
  const std::size_t top_k = default_top_k_;
  server->Post("/search", [index, top_k](const httplib::Request& req, httplib::Response& res) {
    SearchResponse r = handle_search(*index, req.body, top_k);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  });

  int bound = port;
  if (port == 0) {
    bound = server->bind_to_any_port(host);
  } else if (!server->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    throw Error(ErrorCode::kBindFailure, "cannot bind " + host + ":" + std::to_string(port));
  }
  port_ = bound;
  server_ = std::move(server);
  thread_ = std::thread([s = server_.get()] { s->listen_after_bind(); });
  server_->wait_until_ready();
}

void RetrieverService::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
  server_.reset();
}

}  // namespace altqa::retriever
