#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "equirag/corpus.hpp"
#include "equirag/retrieval_types.hpp"

namespace equirag {

/// Okapi BM25 over a snippet store with the non-negative idf form
/// idf(t) = ln((N - df + 0.5) / (df + 0.5) + 1). Query tokens contribute once
/// per occurrence. Only snippets containing at least one query term are
/// scored, so a query with no vocabulary overlap returns an empty list.
/// Ties break by ascending snippet id.
class Bm25Index {
 public:
  struct Posting {
    std::int32_t doc = 0;  // position in snippet_ids()
    std::int32_t tf = 0;
  };

  static Bm25Index build(const SnippetStore& store);  // throws EmptyStoreError

  RankedList query(std::string_view query_text, int k, double k1 = 1.2, double b = 0.75) const;

  double idf(std::string_view term) const;  // 0 for unknown terms
  double avg_doc_length() const;
  std::size_t doc_count() const { return snippet_ids_.size(); }
  const std::vector<std::string>& snippet_ids() const { return snippet_ids_; }
  const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }

  /// Versioned JSON serialization; identical stores serialize to identical
  /// bytes, and save(load(x)) == save(x).
  void save(const std::filesystem::path& file) const;
  static Bm25Index load(const std::filesystem::path& file);
  std::string serialize() const;
  static Bm25Index deserialize(std::string_view bytes);

 private:
  std::vector<std::string> snippet_ids_;
  std::vector<std::int32_t> lengths_;
  std::int64_t total_tokens_ = 0;
  std::map<std::string, std::vector<Posting>> postings_;  // sorted terms
};

}  // namespace equirag
