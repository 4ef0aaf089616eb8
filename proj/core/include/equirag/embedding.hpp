#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace equirag {

/// Pluggable sentence-embedding source shared by dense retrieval and
/// open-ended answer clustering. Implementations must be deterministic for a
/// fixed configuration; vectors need not be unit-norm (callers normalize).
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::string id() const = 0;
  virtual std::size_t dim() const = 0;
  virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
};

/// Offline embedder: each token hashes to a fixed pseudo-random direction and
/// a text embeds as the normalized sum of its token vectors. Identical texts
/// embed identically, so the dense path is testable without a model.
class HashEmbedder : public EmbeddingProvider {
 public:
  explicit HashEmbedder(std::uint64_t seed = 0, std::size_t dim = 64) : seed_(seed), dim_(dim) {}
  std::string id() const override;
  std::size_t dim() const override { return dim_; }
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

 private:
  std::uint64_t seed_;
  std::size_t dim_;
};

/// Term-frequency / inverse-document-frequency vectors over the given text
/// set itself (smooth idf: ln((1+N)/(1+df)) + 1, weights tf*idf, L2
/// normalized). This is the offline fallback for response clustering; it
/// needs no provider at all. Disjoint vocabularies give orthogonal vectors.
std::vector<std::vector<double>> tfidf_vectors(const std::vector<std::string>& texts);

/// L2-normalizes in place; zero vectors stay zero.
void normalize_rows(std::vector<std::vector<double>>& rows);

/// Cosine of two equal-dimension vectors; 0 if either has zero norm.
/// Throws EmbeddingDimMismatchError on dimension mismatch.
double cosine(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace equirag
