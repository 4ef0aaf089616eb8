#include "equirag/corpus.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "equirag/errors.hpp"
#include "equirag/io.hpp"
#include "equirag/log.hpp"
#include "equirag/tokenize.hpp"

namespace equirag {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(Source source) {
  switch (source) {
    case Source::pubmed:
      return "pubmed";
    case Source::textbook:
      return "textbook";
    case Source::wikipedia:
      return "wikipedia";
  }
  return "?";
}

std::optional<Source> parse_source(std::string_view name) {
  if (name == "pubmed") return Source::pubmed;
  if (name == "textbook") return Source::textbook;
  if (name == "wikipedia") return Source::wikipedia;
  return std::nullopt;
}

ParsedSnippetId parse_snippet_id(std::string_view id) {
  const std::size_t first = id.find(':');
  const std::size_t last = id.rfind(':');
  if (first == std::string_view::npos || first == last) {
    throw Error("malformed snippet id: " + std::string(id));
  }
  auto source = parse_source(id.substr(0, first));
  if (!source) throw Error("unknown source in snippet id: " + std::string(id));
  ParsedSnippetId parsed;
  parsed.source = *source;
  parsed.doc_id = std::string(id.substr(first + 1, last - first - 1));
  try {
    parsed.chunk_index = std::stoi(std::string(id.substr(last + 1)));
  } catch (const std::exception&) {
    throw Error("non-numeric chunk index in snippet id: " + std::string(id));
  }
  return parsed;
}

void ChunkingConfig::validate() const {
  if (window < 1) throw ConfigError("chunk window must be >= 1");
  if (stride < 1) throw ConfigError("chunk stride must be >= 1");
  if (stride > window) throw ConfigError("chunk stride must not exceed window (text would be skipped)");
}

std::vector<Snippet> ingest_documents(std::span<const Document> docs, const ChunkingConfig& cfg) {
  cfg.validate();
  std::set<std::pair<Source, std::string>> seen;
  std::vector<Snippet> out;
  for (const Document& doc : docs) {
    if (!seen.insert({doc.source, doc.doc_id}).second) {
      throw DuplicateDocIdError("duplicate doc_id '" + doc.doc_id + "' for source " + to_string(doc.source));
    }
    const auto spans = token_spans(doc.text);
    if (spans.empty()) {
      log_warn("skipping empty document " + to_string(doc.source) + ":" + doc.doc_id);
      continue;
    }
    const std::size_t n = spans.size();
    const std::size_t window = static_cast<std::size_t>(cfg.window);
    const std::size_t stride = static_cast<std::size_t>(cfg.stride);
    int chunk_index = 0;
    for (std::size_t start = 0;; start += stride) {
      const std::size_t end = std::min(start + window, n);
      Snippet snip;
      snip.id = to_string(doc.source) + ":" + doc.doc_id + ":" + std::to_string(chunk_index);
      snip.source = doc.source;
      snip.text = doc.text.substr(spans[start].begin, spans[end - 1].end - spans[start].begin);
      snip.token_count = static_cast<int>(end - start);
      out.push_back(std::move(snip));
      ++chunk_index;
      if (start + window >= n) break;  // trailing window covers the rest
    }
  }
  return out;
}

CorpusManifest merge_corpora(std::span<const CorpusManifest> manifests, const std::string& name) {
  if (manifests.empty()) throw Error("merge_corpora: no manifests");
  CorpusManifest merged;
  merged.name = name;
  merged.chunk_window = manifests.front().chunk_window;
  merged.chunk_stride = manifests.front().chunk_stride;
  for (const CorpusManifest& m : manifests) {
    if (m.chunk_window != merged.chunk_window || m.chunk_stride != merged.chunk_stride) {
      throw ChunkConfigMismatchError("manifest '" + m.name + "' uses window/stride " +
                                     std::to_string(m.chunk_window) + "/" + std::to_string(m.chunk_stride) +
                                     ", expected " + std::to_string(merged.chunk_window) + "/" +
                                     std::to_string(merged.chunk_stride));
    }
    merged.snippet_count += m.snippet_count;
    merged.sources.insert(m.sources.begin(), m.sources.end());
  }
  return merged;
}

void SnippetStore::add_snippets(std::vector<Snippet> snippets) {
  for (Snippet& snip : snippets) {
    auto [it, inserted] = index_.try_emplace(snip.id, snippets_.size());
    if (!inserted) throw DuplicateDocIdError("snippet id already present: " + snip.id);
    manifest_.sources.insert(snip.source);
    snippets_.push_back(std::move(snip));
  }
  manifest_.snippet_count = static_cast<std::int64_t>(snippets_.size());
}

const Snippet& SnippetStore::get(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw MissingSnippetError("snippet not in store: " + std::string(id));
  return snippets_[it->second];
}

bool SnippetStore::contains(std::string_view id) const { return index_.count(std::string(id)) > 0; }

namespace {

json snippet_to_json(const Snippet& snip) {
  return json{{"id", snip.id}, {"source", to_string(snip.source)}, {"text", snip.text}, {"token_count", snip.token_count}};
}

Snippet snippet_from_json(const json& j) {
  Snippet snip;
  snip.id = j.at("id").get<std::string>();
  auto source = parse_source(j.at("source").get<std::string>());
  if (!source) throw Error("unknown source in snippet record");
  snip.source = *source;
  snip.text = j.at("text").get<std::string>();
  snip.token_count = j.at("token_count").get<int>();
  return snip;
}

}  // namespace

void SnippetStore::save(const fs::path& dir) const {
  std::error_code ec;
  fs::create_directories(dir, ec);
  json manifest;
  manifest["name"] = manifest_.name;
  manifest["snippet_count"] = manifest_.snippet_count;
  manifest["chunk_window"] = manifest_.chunk_window;
  manifest["chunk_stride"] = manifest_.chunk_stride;
  json sources = json::array();
  for (Source s : manifest_.sources) sources.push_back(to_string(s));
  manifest["sources"] = sources;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  for (Source s : manifest_.sources) {
    std::string lines;
    for (const Snippet& snip : snippets_) {
      if (snip.source != s) continue;
      lines += snippet_to_json(snip).dump();
      lines += '\n';
    }
    write_file(dir / ("snippets." + to_string(s) + ".jsonl"), lines);
  }
}

SnippetStore SnippetStore::open(const fs::path& dir) {
  const json manifest_json = json::parse(read_file(dir / "manifest.json"));
  SnippetStore store;
  store.manifest_.name = manifest_json.at("name").get<std::string>();
  store.manifest_.chunk_window = manifest_json.at("chunk_window").get<int>();
  store.manifest_.chunk_stride = manifest_json.at("chunk_stride").get<int>();
  std::set<Source> sources;
  for (const auto& s : manifest_json.at("sources")) {
    auto source = parse_source(s.get<std::string>());
    if (!source) throw Error("unknown source in manifest: " + s.get<std::string>());
    sources.insert(*source);
  }
  // Sources load in enum order (matches std::set<Source> iteration at save).
  std::vector<Snippet> snippets;
  for (Source s : sources) {
    const fs::path file = dir / ("snippets." + to_string(s) + ".jsonl");
    for (const std::string& line : split_lines(read_file(file))) {
      if (line.empty()) continue;
      snippets.push_back(snippet_from_json(json::parse(line)));
    }
  }
  store.add_snippets(std::move(snippets));
  const auto declared = manifest_json.at("snippet_count").get<std::int64_t>();
  if (declared != store.manifest_.snippet_count) {
    throw Error("manifest snippet_count " + std::to_string(declared) + " != stored " +
                std::to_string(store.manifest_.snippet_count));
  }
  return store;
}

SnippetStore SnippetStore::merge(std::span<const SnippetStore* const> stores, const std::string& name) {
  if (stores.empty()) throw Error("SnippetStore::merge: no stores");
  std::vector<CorpusManifest> manifests;
  std::set<std::pair<Source, std::string>> docs;
  for (const SnippetStore* store : stores) {
    manifests.push_back(store->manifest());
    for (const Snippet& snip : store->snippets()) {
      const ParsedSnippetId parsed = parse_snippet_id(snip.id);
      if (parsed.chunk_index == 0 && !docs.insert({parsed.source, parsed.doc_id}).second) {
        throw DuplicateDocIdError("doc '" + parsed.doc_id + "' of source " + to_string(parsed.source) +
                                  " appears in more than one store");
      }
    }
  }
  SnippetStore merged(merge_corpora(manifests, name));
  merged.manifest_.snippet_count = 0;
  merged.manifest_.sources.clear();
  std::vector<Snippet> all;
  for (const SnippetStore* store : stores) {
    all.insert(all.end(), store->snippets().begin(), store->snippets().end());
  }
  merged.add_snippets(std::move(all));
  return merged;
}

std::vector<Document> read_documents_dir(const fs::path& dir, Source source) {
  std::vector<Document> docs;
  for (const fs::path& file : list_files(dir, {".txt", ".jsonl"})) {
    if (file.extension() == ".txt") {
      docs.push_back({source, file.stem().string(), read_file(file)});
      continue;
    }
    std::size_t line_no = 0;
    for (const std::string& line : split_lines(read_file(file))) {
      ++line_no;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::parse_error& e) {
        throw IoError(file.string() + ":" + std::to_string(line_no) + ": invalid JSON: " + e.what());
      }
      docs.push_back({source, j.at("doc_id").get<std::string>(), j.at("text").get<std::string>()});
    }
  }
  return docs;
}

}  // namespace equirag
