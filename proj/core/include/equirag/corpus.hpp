#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace equirag {

enum class Source { pubmed, textbook, wikipedia };

std::string to_string(Source source);
std::optional<Source> parse_source(std::string_view name);

/// One indexed chunk of corpus text. `id` is `<source>:<doc>:<chunk_index>`
/// and is the unit tracked by the retrieval-overlap metric.
struct Snippet {
  std::string id;
  Source source = Source::pubmed;
  std::string text;
  int token_count = 0;
};

struct ParsedSnippetId {
  Source source;
  std::string doc_id;
  int chunk_index;
};

/// Recovers (source, doc, chunk_index) from a snippet id. Doc ids may contain
/// ':': the source is everything before the first ':' and the chunk index
/// everything after the last. Throws Error on malformed ids.
ParsedSnippetId parse_snippet_id(std::string_view id);

struct ChunkingConfig {
  int window = 512;  // tokens per snippet
  int stride = 512;  // tokens between snippet starts; stride <= window

  void validate() const;
};

struct CorpusManifest {
  std::string name;
  std::set<Source> sources;
  std::int64_t snippet_count = 0;
  int chunk_window = 512;
  int chunk_stride = 512;
};

struct Document {
  Source source = Source::pubmed;
  std::string doc_id;
  std::string text;
};

/// Chunks documents into snippets: windows of `window` tokens starting every
/// `stride` tokens, cut at token boundaries of the original text. Emission
/// stops once a window reaches the end of the document, so every token is
/// covered exactly by the trailing window. Zero-token documents are skipped
/// and logged; duplicate (source, doc_id) pairs throw DuplicateDocIdError.
std::vector<Snippet> ingest_documents(std::span<const Document> docs, const ChunkingConfig& cfg);

/// Manifest-level merge: snippet counts add, source sets union. All inputs
/// must share the chunking config (ChunkConfigMismatchError otherwise).
CorpusManifest merge_corpora(std::span<const CorpusManifest> manifests, const std::string& name);

/// Immutable snippet store: one JSONL file per source plus manifest.json.
/// Write-once; concurrent readers are safe after load.
class SnippetStore {
 public:
  SnippetStore() = default;
  explicit SnippetStore(CorpusManifest manifest) : manifest_(std::move(manifest)) {}

  static SnippetStore open(const std::filesystem::path& dir);
  void save(const std::filesystem::path& dir) const;

  /// Appends snippets produced by ingest_documents. Rejects duplicate ids.
  void add_snippets(std::vector<Snippet> snippets);

  const Snippet& get(std::string_view id) const;  // throws MissingSnippetError
  bool contains(std::string_view id) const;
  const std::vector<Snippet>& snippets() const { return snippets_; }
  const CorpusManifest& manifest() const { return manifest_; }
  CorpusManifest& manifest() { return manifest_; }
  bool empty() const { return snippets_.empty(); }
  std::size_t size() const { return snippets_.size(); }

  /// Full merge including duplicate doc detection across same-source stores.
  static SnippetStore merge(std::span<const SnippetStore* const> stores, const std::string& name);

 private:
  CorpusManifest manifest_;
  std::vector<Snippet> snippets_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Reads a source directory of .txt files (doc_id = filename stem) and .jsonl
/// files ({"doc_id": ..., "text": ...} per line), in sorted filename order.
std::vector<Document> read_documents_dir(const std::filesystem::path& dir, Source source);

}  // namespace equirag
