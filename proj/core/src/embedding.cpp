#include "equirag/embedding.hpp"

#include <cmath>
#include <map>

#include "equirag/errors.hpp"
#include "equirag/hash.hpp"
#include "equirag/tokenize.hpp"

namespace equirag {

std::string HashEmbedder::id() const {
  return "hash-" + std::to_string(dim_) + "-" + hex64(seed_);
}

std::vector<std::vector<double>> HashEmbedder::embed(const std::vector<std::string>& texts) {
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) {
    std::vector<double> vec(dim_, 0.0);
    for (const std::string& tok : tokenize(text)) {
      std::uint64_t state = mix64(fnv1a64(tok) ^ mix64(seed_));
      for (std::size_t d = 0; d < dim_; ++d) {
        state = mix64(state);
        // map to [-1, 1)
        vec[d] += static_cast<double>(state >> 11) * (2.0 / 9007199254740992.0) - 1.0;
      }
    }
    out.push_back(std::move(vec));
  }
  normalize_rows(out);
  return out;
}

std::vector<std::vector<double>> tfidf_vectors(const std::vector<std::string>& texts) {
  const std::size_t n = texts.size();
  std::vector<std::map<std::string, int>> tf(n);
  std::map<std::string, int> df;
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::string& tok : tokenize(texts[i])) ++tf[i][tok];
    for (const auto& [term, _] : tf[i]) ++df[term];
  }
  std::map<std::string, std::size_t> term_index;
  for (const auto& [term, _] : df) term_index.emplace(term, term_index.size());
  std::vector<std::vector<double>> out(n, std::vector<double>(term_index.size(), 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [term, count] : tf[i]) {
      const double idf = std::log((1.0 + static_cast<double>(n)) / (1.0 + static_cast<double>(df[term]))) + 1.0;
      out[i][term_index[term]] = static_cast<double>(count) * idf;
    }
  }
  normalize_rows(out);
  return out;
}

void normalize_rows(std::vector<std::vector<double>>& rows) {
  for (std::vector<double>& row : rows) {
    double norm_sq = 0.0;
    for (double x : row) norm_sq += x * x;
    if (norm_sq <= 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& x : row) x *= inv;
  }
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw EmbeddingDimMismatchError("cosine: dimension " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace equirag
