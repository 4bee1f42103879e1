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

#include <cstddef>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "altqa/retriever/index.hpp"

namespace httplib {
class Server;
}

namespace altqa::retriever {

struct SearchResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

// The wire contract without the socket: body {"query": str, "top_k": int?}
// returns {"results": [{"title", "body", "score"}]}; anything malformed gets
// status 400 and {"error": message}.
SearchResponse handle_search(const RetrievalIndex& index, const std::string& request_body,
                             std::size_t default_top_k = kDefaultTopK);

// Tool-response text for a ranked list: each passage is its title line then
// its body, passages separated by a blank line.
std::string format_passages(const RetrievalIndex& index, const std::vector<ScoredChunk>& ranked);

// POST /search over HTTP. The index is shared read-only between requests.
class RetrieverService {
 public:
  explicit RetrieverService(std::shared_ptr<const RetrievalIndex> index,
                            std::size_t default_top_k = kDefaultTopK);
  ~RetrieverService();

  RetrieverService(const RetrieverService&) = delete;
  RetrieverService& operator=(const RetrieverService&) = delete;

  // Binds and starts serving on a background thread. Port 0 picks a free
  // port. Throws kBindFailure.
  void start(const std::string& host, int port);

  // Port actually bound, valid after start().
  int port() const { return port_; }

  void stop();

 private:
  std::shared_ptr<const RetrievalIndex> index_;
  std::size_t default_top_k_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace altqa::retriever
