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

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altqa/common/jsonl.hpp"
#include "altqa/metrics/estimator.hpp"
#include "commands.hpp"

namespace altqa::cli {

namespace {

struct EstimateOptions {
  std::string hits;
  std::string output;
  std::string summary;
  std::size_t g = 0;
  std::size_t k = 3;
};

struct HitsLine {
  std::size_t number = 0;
  std::vector<metrics::HitEntry> hits;
  std::size_t g = 0;
};

// A line is either an array or {"hits": [...], "g": n}. Entries are null, a
// non-negative integer key index, or a string label; labels get indices in
// order of first appearance and cannot be mixed with integers.
HitsLine parse_hits(const nlohmann::json& doc, std::size_t default_g) {
  HitsLine line;
  line.g = default_g;
  const nlohmann::json* arr = &doc;
  if (doc.is_object()) {
    auto h = doc.find("hits");
    if (h == doc.end()) throw Error(ErrorCode::kParseFailure, "object line needs 'hits'");
    arr = &*h;
    if (auto g = doc.find("g"); g != doc.end() && !g->is_null()) {
      if (!g->is_number_unsigned()) throw Error(ErrorCode::kParseFailure, "'g' must be a positive integer");
      line.g = g->get<std::size_t>();
    }
  }
  if (!arr->is_array()) throw Error(ErrorCode::kParseFailure, "hits must be an array");
  std::map<std::string, std::size_t> labels;
  bool saw_int = false;
  for (const auto& e : *arr) {
    if (e.is_null()) {
      line.hits.emplace_back(std::nullopt);
    } else if (e.is_number_unsigned()) {
      saw_int = true;
      line.hits.emplace_back(e.get<std::size_t>());
    } else if (e.is_string()) {
      auto [it, inserted] = labels.emplace(e.get<std::string>(), labels.size());
      line.hits.emplace_back(it->second);
    } else {
      throw Error(ErrorCode::kParseFailure, "hit entries must be null, an index or a label");
    }
  }
  if (saw_int && !labels.empty()) {
    throw Error(ErrorCode::kParseFailure, "cannot mix integer indices and string labels");
  }
  return line;
}

int run_estimate(const EstimateOptions& opts, Context& ctx) {
  std::vector<HitsLine> lines;
  auto errors = nlohmann::ordered_json::array();
  for (const auto& raw : jsonl::read_lines(opts.hits)) {
    try {
      const auto doc = nlohmann::json::parse(raw.text, nullptr, false);
      if (doc.is_discarded()) throw Error(ErrorCode::kParseFailure, "invalid JSON");
      HitsLine line = parse_hits(doc, opts.g);
      line.number = raw.number;
      lines.push_back(std::move(line));
    } catch (const Error& e) {
      ctx.err << opts.hits << ":" << raw.number << ": " << e.what() << '\n';
      errors.push_back({{"line", raw.number}, {"error", e.what()}});
    }
  }

  // k is a configuration choice, so a line it does not fit is a config error.
  if (opts.k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  for (const auto& line : lines) {
    if (opts.k > line.hits.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  opts.hits + ":" + std::to_string(line.number) + ": k must satisfy 1 <= k <= k' (k=" +
                      std::to_string(opts.k) + ", k'=" + std::to_string(line.hits.size()) + ")");
    }
  }

  jsonl::Writer writer(opts.output);
  double sp = 0, sr = 0, sf = 0;
  std::size_t rows = 0;
  for (const auto& line : lines) {
    std::optional<metrics::ExactAtKEstimate> est;
    try {
      est = metrics::estimate_at_k_exact(line.hits, line.g, opts.k);
    } catch (const Error& e) {
      ctx.err << opts.hits << ":" << line.number << ": " << e.what() << '\n';
      errors.push_back({{"line", line.number}, {"error", e.what()}});
      continue;
    }
    const double p = est->precision.convert_to<double>();
    const double r = est->recall.convert_to<double>();
    const double f = est->f1.convert_to<double>();
    nlohmann::ordered_json row;
    row["line"] = line.number;
    row["k"] = opts.k;
    row["k_prime"] = line.hits.size();
    row["g"] = line.g;
    row["precision"] = p;
    row["recall"] = r;
    row["f1"] = f;
    row["exact"] = {{"precision", est->precision.str()},
                    {"recall", est->recall.str()},
                    {"f1", est->f1.str()}};
    writer.write(row);
    ++rows;
    sp += p;
    sr += r;
    sf += f;
  }
  writer.close();

  auto mean = [rows](double sum) { return rows == 0 ? 0.0 : sum / static_cast<double>(rows); };
  nlohmann::ordered_json summary;
  summary["rows"] = rows;
  summary["errors"] = errors;
  summary["macro"] = {{"precision", mean(sp)}, {"recall", mean(sr)}, {"f1", mean(sf)}};
  if (!opts.summary.empty()) jsonl::write_json_file(opts.summary, summary);

  ctx.out << opts.output << '\n';
  ctx.out << "estimated " << rows << " lines at k=" << opts.k << ", " << errors.size()
          << " errors; macro f1 " << mean(sf) << '\n';
  return kExitOk;
}

}  // namespace

void register_estimate(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<EstimateOptions>();
  auto* cmd = app.add_subcommand("estimate", "Exact expected precision/recall/F1 over size-k subsets of a hits list");
  cmd->add_option("--hits", opts->hits, "JSON Lines; each line an array of key ids or null")->required();
  cmd->add_option("-o,--output", opts->output, "Per-line report (JSON Lines)")->required();
  cmd->add_option("--summary", opts->summary, "Macro averages and per-line errors (JSON)");
  cmd->add_option("--g", opts->g, "Number of reference keys (lines may override)")->required();
  cmd->add_option("--k", opts->k, "Subset size")->capture_default_str();
  cmd->callback([&ctx, opts] { ctx.action = [&ctx, opts] { return run_estimate(*opts, ctx); }; });
}

}  // namespace altqa::cli
