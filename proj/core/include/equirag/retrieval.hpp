#pragma once

#include <memory>
#include <string>
#include <vector>

#include "equirag/corpus.hpp"
#include "equirag/embedding.hpp"
#include "equirag/retrieval_types.hpp"

namespace equirag {

/// Top-k snippets by cosine similarity between the query embedding and each
/// snippet embedding; ties break by ascending snippet id. Embeds the whole
/// store per call -- see DenseIndex for the cached form the harness uses.
RankedList query_dense(EmbeddingProvider& provider, const SnippetStore& store, std::string_view query_text,
                       int k);

/// Snippet embeddings computed once per (provider, store); queries then only
/// embed the query text. Produces the same rankings as query_dense.
class DenseIndex {
 public:
  DenseIndex(std::shared_ptr<EmbeddingProvider> provider, const SnippetStore& store);
  RankedList query(std::string_view query_text, int k) const;

 private:
  std::shared_ptr<EmbeddingProvider> provider_;
  std::vector<std::string> snippet_ids_;
  std::vector<std::vector<double>> embeddings_;  // unit rows
};

}  // namespace equirag
