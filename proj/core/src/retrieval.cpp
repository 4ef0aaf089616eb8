#include "equirag/retrieval.hpp"

#include <algorithm>

#include "equirag/errors.hpp"

namespace equirag {

namespace {

std::vector<std::vector<double>> embed_store(EmbeddingProvider& provider, const SnippetStore& store) {
  if (store.empty()) throw EmptyStoreError("dense retrieval over an empty store");
  std::vector<std::string> texts;
  texts.reserve(store.size());
  for (const Snippet& snip : store.snippets()) texts.push_back(snip.text);
  auto embeddings = provider.embed(texts);
  if (embeddings.size() != texts.size()) {
    throw ProviderUnavailableError("embedding provider returned " + std::to_string(embeddings.size()) +
                                   " vectors for " + std::to_string(texts.size()) + " texts");
  }
  for (const auto& vec : embeddings) {
    if (vec.size() != embeddings.front().size()) {
      throw EmbeddingDimMismatchError("snippet embeddings disagree on dimension");
    }
  }
  normalize_rows(embeddings);
  return embeddings;
}

RankedList rank_by_cosine(const std::vector<std::string>& ids, const std::vector<std::vector<double>>& unit_rows,
                          const std::vector<double>& query_vec, int k) {
  if (k < 1) throw Error("dense query: k must be >= 1");
  std::vector<RankedEntry> entries;
  entries.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    entries.push_back({ids[i], cosine(unit_rows[i], query_vec)});
  }
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.snippet_id < b.snippet_id;
  });
  if (entries.size() > static_cast<std::size_t>(k)) entries.resize(static_cast<std::size_t>(k));
  RankedList out;
  out.retriever_id = "dense";
  out.entries = std::move(entries);
  return out;
}

}  // namespace

RankedList query_dense(EmbeddingProvider& provider, const SnippetStore& store, std::string_view query_text,
                       int k) {
  auto embeddings = embed_store(provider, store);
  auto query_rows = provider.embed({std::string(query_text)});
  if (query_rows.size() != 1) throw ProviderUnavailableError("embedding provider returned no query vector");
  if (query_rows[0].size() != embeddings.front().size()) {
    throw EmbeddingDimMismatchError("query embedding dimension " + std::to_string(query_rows[0].size()) +
                                    " != snippet dimension " + std::to_string(embeddings.front().size()));
  }
  std::vector<std::string> ids;
  ids.reserve(store.size());
  for (const Snippet& snip : store.snippets()) ids.push_back(snip.id);
  return rank_by_cosine(ids, embeddings, query_rows[0], k);
}

DenseIndex::DenseIndex(std::shared_ptr<EmbeddingProvider> provider, const SnippetStore& store)
    : provider_(std::move(provider)) {
  embeddings_ = embed_store(*provider_, store);
  snippet_ids_.reserve(store.size());
  for (const Snippet& snip : store.snippets()) snippet_ids_.push_back(snip.id);
}

RankedList DenseIndex::query(std::string_view query_text, int k) const {
  auto query_rows = provider_->embed({std::string(query_text)});
  if (query_rows.size() != 1) throw ProviderUnavailableError("embedding provider returned no query vector");
  if (query_rows[0].size() != embeddings_.front().size()) {
    throw EmbeddingDimMismatchError("query embedding dimension " + std::to_string(query_rows[0].size()) +
                                    " != snippet dimension " + std::to_string(embeddings_.front().size()));
  }
  return rank_by_cosine(snippet_ids_, embeddings_, query_rows[0], k);
}

}  // namespace equirag
