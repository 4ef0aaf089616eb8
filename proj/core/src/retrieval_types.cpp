#include "equirag/retrieval_types.hpp"

#include <algorithm>
#include <map>

#include "equirag/errors.hpp"

namespace equirag {

void RankedList::validate() const {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!seen.insert(entries[i].snippet_id).second) {
      throw Error("RankedList: duplicate snippet id " + entries[i].snippet_id);
    }
    if (i > 0 && entries[i].score > entries[i - 1].score) {
      throw Error("RankedList: scores increase at position " + std::to_string(i));
    }
  }
}

std::string to_string(RetrieverKind kind) { return kind == RetrieverKind::bm25 ? "bm25" : "dense"; }

void RetrievalConfig::validate() const {
  if (k < 1) throw ConfigError("retrieval.k must be >= 1");
  if (rrf_constant < 1) throw ConfigError("retrieval.rrf_constant must be >= 1");
  if (retrievers.empty()) throw ConfigError("retrieval.retrievers must be non-empty");
  if (bm25_k1 <= 0.0) throw ConfigError("retrieval.bm25_k1 must be positive");
  if (bm25_b < 0.0 || bm25_b > 1.0) throw ConfigError("retrieval.bm25_b must be in [0,1]");
}

RankedList fuse_rrf(const std::vector<RankedList>& lists, int rrf_constant, int k) {
  if (lists.empty()) throw Error("fuse_rrf: no input lists");
  if (rrf_constant < 1) throw Error("fuse_rrf: constant must be >= 1");
  if (k < 1) throw Error("fuse_rrf: k must be >= 1");
  // std::map keeps ids sorted, which both removes any dependence on input
  // list order and bakes in the ascending-id tie-break.
  std::map<std::string, double> fused;
  for (const RankedList& list : lists) {
    for (std::size_t rank = 1; rank <= list.entries.size(); ++rank) {
      fused[list.entries[rank - 1].snippet_id] += 1.0 / (static_cast<double>(rrf_constant) + static_cast<double>(rank));
    }
  }
  RankedList out;
  out.query_key = lists.front().query_key;
  out.retriever_id = "rrf";
  out.entries.reserve(fused.size());
  for (const auto& [id, score] : fused) out.entries.push_back({id, score});
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) { return a.score > b.score; });
  if (out.entries.size() > static_cast<std::size_t>(k)) out.entries.resize(static_cast<std::size_t>(k));
  return out;
}

}  // namespace equirag
