#include "equirag/bm25.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "equirag/errors.hpp"
#include "equirag/io.hpp"
#include "equirag/log.hpp"
#include "equirag/tokenize.hpp"

namespace equirag {

using nlohmann::json;

Bm25Index Bm25Index::build(const SnippetStore& store) {
  if (store.empty()) throw EmptyStoreError("cannot build BM25 index over an empty store");
  Bm25Index index;
  index.snippet_ids_.reserve(store.size());
  index.lengths_.reserve(store.size());
  for (const Snippet& snip : store.snippets()) {
    const std::int32_t doc = static_cast<std::int32_t>(index.snippet_ids_.size());
    index.snippet_ids_.push_back(snip.id);
    std::unordered_map<std::string, std::int32_t> tf;
    std::int32_t length = 0;
    for (std::string& tok : tokenize(snip.text)) {
      ++tf[std::move(tok)];
      ++length;
    }
    index.lengths_.push_back(length);
    index.total_tokens_ += length;
    for (auto& [term, count] : tf) {
      index.postings_[term].push_back({doc, count});
    }
  }
  // Docs are visited in ascending order, so postings are already sorted.
  return index;
}

double Bm25Index::avg_doc_length() const {
  return snippet_ids_.empty() ? 0.0 : static_cast<double>(total_tokens_) / static_cast<double>(snippet_ids_.size());
}

double Bm25Index::idf(std::string_view term) const {
  auto it = postings_.find(std::string(term));
  if (it == postings_.end()) return 0.0;
  const double n = static_cast<double>(snippet_ids_.size());
  const double df = static_cast<double>(it->second.size());
  return std::log((n - df + 0.5) / (df + 0.5) + 1.0);
}

RankedList Bm25Index::query(std::string_view query_text, int k, double k1, double b) const {
  RankedList out;
  out.retriever_id = "bm25";
  if (k < 1) throw Error("bm25 query: k must be >= 1");
  const std::vector<std::string> terms = tokenize(query_text);
  if (terms.empty()) {
    log_warn("bm25 query is empty after tokenization");
    return out;
  }
  const double avgdl = avg_doc_length();
  std::unordered_map<std::int32_t, double> scores;
  for (const std::string& term : terms) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double term_idf = idf(term);
    for (const Posting& p : it->second) {
      const double len_norm = 1.0 - b + b * static_cast<double>(lengths_[p.doc]) / avgdl;
      const double tf = static_cast<double>(p.tf);
      scores[p.doc] += term_idf * (tf * (k1 + 1.0)) / (tf + k1 * len_norm);
    }
  }
  std::vector<RankedEntry> entries;
  entries.reserve(scores.size());
  for (const auto& [doc, score] : scores) {
    entries.push_back({snippet_ids_[doc], score});
  }
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.snippet_id < b.snippet_id;
  });
  if (entries.size() > static_cast<std::size_t>(k)) entries.resize(static_cast<std::size_t>(k));
  out.entries = std::move(entries);
  return out;
}

namespace {
constexpr const char* kMagic = "equirag.bm25";
constexpr int kVersion = 1;
}  // namespace

std::string Bm25Index::serialize() const {
  json j;
  j["magic"] = kMagic;
  j["version"] = kVersion;
  j["snippet_ids"] = snippet_ids_;
  j["lengths"] = lengths_;
  j["total_tokens"] = total_tokens_;
  json postings = json::object();
  for (const auto& [term, plist] : postings_) {
    json arr = json::array();
    for (const Posting& p : plist) arr.push_back(json::array({p.doc, p.tf}));
    postings[term] = std::move(arr);
  }
  j["postings"] = std::move(postings);
  return j.dump() + "\n";
}

Bm25Index Bm25Index::deserialize(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(std::string("bm25 index: invalid JSON: ") + e.what());
  }
  if (!j.contains("magic") || j["magic"] != kMagic) throw Error("bm25 index: bad magic header");
  if (j.at("version").get<int>() != kVersion) {
    throw Error("bm25 index: unsupported version " + j["version"].dump());
  }
  Bm25Index index;
  index.snippet_ids_ = j.at("snippet_ids").get<std::vector<std::string>>();
  index.lengths_ = j.at("lengths").get<std::vector<std::int32_t>>();
  index.total_tokens_ = j.at("total_tokens").get<std::int64_t>();
  for (const auto& [term, arr] : j.at("postings").items()) {
    std::vector<Posting> plist;
    plist.reserve(arr.size());
    for (const auto& pair : arr) {
      plist.push_back({pair.at(0).get<std::int32_t>(), pair.at(1).get<std::int32_t>()});
    }
    index.postings_[term] = std::move(plist);
  }
  return index;
}

void Bm25Index::save(const std::filesystem::path& file) const { write_file(file, serialize()); }

Bm25Index Bm25Index::load(const std::filesystem::path& file) { return deserialize(read_file(file)); }

}  // namespace equirag
