#pragma once

#include <set>
#include <string>
#include <vector>

namespace equirag {

struct RankedEntry {
  std::string snippet_id;
  double score = 0.0;
};

/// Ordered retrieved snippets for one (query, retriever) pair. Scores are
/// non-increasing, ids distinct, length bounded by the configured k.
struct RankedList {
  std::string query_key;
  std::string retriever_id;
  std::vector<RankedEntry> entries;

  /// Throws Error if an invariant is violated (used by property tests and
  /// as a debug assertion at retriever boundaries).
  void validate() const;
};

enum class RetrieverKind { bm25, dense };

std::string to_string(RetrieverKind kind);

struct RetrievalConfig {
  int k = 15;
  std::set<RetrieverKind> retrievers = {RetrieverKind::bm25};
  int rrf_constant = 60;
  double bm25_k1 = 1.2;
  double bm25_b = 0.75;

  void validate() const;
};

/// Reciprocal Rank Fusion: fused(d) = sum over lists containing d of
/// 1 / (c + rank), rank 1-based. Top-k by fused score, ties by ascending
/// snippet id. Invariant under permutation of the input lists.
RankedList fuse_rrf(const std::vector<RankedList>& lists, int rrf_constant, int k);

}  // namespace equirag
