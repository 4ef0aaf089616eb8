#include "equirag/prompts.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "equirag/errors.hpp"
#include "equirag/io.hpp"

namespace equirag {

std::string to_string(FilterStrategy strategy) {
  switch (strategy) {
    case FilterStrategy::plain:
      return "plain";
    case FilterStrategy::cot:
      return "cot";
    case FilterStrategy::counterfactual:
      return "counterfactual";
    case FilterStrategy::adversarial:
      return "adversarial";
  }
  return "?";
}

FilterStrategy parse_strategy(std::string_view name) {
  if (name == "plain") return FilterStrategy::plain;
  if (name == "cot") return FilterStrategy::cot;
  if (name == "counterfactual") return FilterStrategy::counterfactual;
  if (name == "adversarial") return FilterStrategy::adversarial;
  throw ConfigError("unknown filter strategy: " + std::string(name));
}

PromptTemplates PromptTemplates::load(const std::filesystem::path& dir) {
  PromptTemplates t;
  t.plain_ = read_file(dir / "plain.txt");
  t.cot_ = read_file(dir / "cot.txt");
  t.counterfactual_ = read_file(dir / "counterfactual.txt");
  t.adversarial_ = read_file(dir / "adversarial.txt");
  return t;
}

const std::string& PromptTemplates::text_for(FilterStrategy strategy) const {
  switch (strategy) {
    case FilterStrategy::plain:
      return plain_;
    case FilterStrategy::cot:
      return cot_;
    case FilterStrategy::counterfactual:
      return counterfactual_;
    case FilterStrategy::adversarial:
      return adversarial_;
  }
  return plain_;
}

std::string PromptTemplates::fingerprint_payload() const {
  return plain_ + "\x1f" + cot_ + "\x1f" + counterfactual_ + "\x1f" + adversarial_;
}

namespace {

void replace_slot(std::string& text, std::string_view slot, std::string_view value) {
  std::size_t pos = 0;
  while ((pos = text.find(slot, pos)) != std::string::npos) {
    text.replace(pos, slot.size(), value);
    pos += value.size();
  }
}

std::string evidence_block(const RankedList& evidence, const SnippetStore& store) {
  if (evidence.entries.empty()) return "No evidence retrieved.";
  std::string block;
  for (std::size_t i = 0; i < evidence.entries.size(); ++i) {
    if (i > 0) block += '\n';
    block += "[" + std::to_string(i + 1) + "] " + store.get(evidence.entries[i].snippet_id).text;
  }
  return block;
}

std::string options_block(const DatasetItem& item) {
  if (item.task == TaskType::open) return "Answer concisely in plain text.";
  std::string block = "Options:\n";
  for (const auto& [letter, text] : item.options) {
    block += std::string(1, letter) + ". " + text + "\n";
  }
  block += "\nAnswer with a single option letter.";
  return block;
}

std::string render(const std::string& tmpl, const DatasetItem& item, const std::string& question,
                   const std::string& evidence) {
  std::string prompt = tmpl;
  replace_slot(prompt, "{{evidence}}", evidence);
  replace_slot(prompt, "{{question}}", question);
  replace_slot(prompt, "{{options}}", options_block(item));
  return prompt;
}

PromptBundle single_prompt_bundle(FilterStrategy strategy, const PromptTemplates& templates,
                                  const DatasetItem& item, const std::string& question,
                                  const std::string& evidence) {
  PromptBundle bundle;
  bundle.strategy = strategy;
  bundle.prompts.push_back(render(templates.text_for(strategy), item, question, evidence));
  return bundle;
}

inline bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

inline bool ieq(char a, char b) {
  return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
}

bool bounded_match_at(std::string_view text, std::size_t pos, std::string_view value) {
  if (pos + value.size() > text.size()) return false;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!ieq(text[pos + i], value[i])) return false;
  }
  if (pos > 0 && word_char(text[pos - 1])) return false;
  if (pos + value.size() < text.size() && word_char(text[pos + value.size()])) return false;
  return true;
}

std::vector<std::string> values_longest_first(const AttributeSets& sets) {
  std::vector<std::string> values = sets.race;
  values.insert(values.end(), sets.gender.begin(), sets.gender.end());
  std::sort(values.begin(), values.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return values;
}

}  // namespace

std::string neutralize_demographics(std::string_view text, const AttributeSets& sets) {
  const std::vector<std::string> values = values_longest_first(sets);

  struct Span {
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    bool matched = false;
    for (const std::string& value : values) {
      if (bounded_match_at(text, i, value)) {
        spans.push_back({i, i + value.size()});
        i += value.size();
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  if (spans.empty()) return std::string(text);

  // Coalesce spans separated by whitespace only ("Hispanic female" -> one span).
  std::vector<Span> merged;
  for (const Span& span : spans) {
    if (!merged.empty()) {
      const std::string_view gap = text.substr(merged.back().end, span.begin - merged.back().end);
      if (gap.find_first_not_of(" \t") == std::string_view::npos) {
        merged.back().end = span.end;
        continue;
      }
    }
    merged.push_back(span);
  }

  std::string out;
  std::size_t cursor = 0;
  for (const Span& span : merged) {
    out.append(text.substr(cursor, span.begin - cursor));
    out.append("the patient");
    cursor = span.end;
  }
  out.append(text.substr(cursor));

  // Injected clauses ("This <attrs> patient: ...") collapse cleanly.
  replace_slot(out, "This the patient patient", "This patient");
  replace_slot(out, "this the patient patient", "this patient");
  replace_slot(out, "the patient patient", "the patient");
  return out;
}

bool contains_demographic_marker(std::string_view text, const AttributeSets& sets) {
  for (const std::string& value : values_longest_first(sets)) {
    for (std::size_t i = 0; i + value.size() <= text.size(); ++i) {
      if (bounded_match_at(text, i, value)) return true;
    }
  }
  return false;
}

PromptBundle build_plain(const PromptTemplates& templates, const DatasetItem& item, const QueryVariant& variant,
                         const RankedList& evidence, const SnippetStore& store) {
  return single_prompt_bundle(FilterStrategy::plain, templates, item, variant.realized_text,
                              evidence_block(evidence, store));
}

PromptBundle build_cot(const PromptTemplates& templates, const DatasetItem& item, const QueryVariant& variant,
                       const RankedList& evidence, const SnippetStore& store) {
  return single_prompt_bundle(FilterStrategy::cot, templates, item, variant.realized_text,
                              evidence_block(evidence, store));
}

PromptBundle build_counterfactual(const PromptTemplates& templates, const DatasetItem& item,
                                  const QueryVariant& variant, const RankedList& evidence,
                                  const SnippetStore& store, std::span<const Assignment> alternates) {
  if (alternates.empty()) throw std::invalid_argument("counterfactual alternates must be non-empty");
  for (const Assignment& alt : alternates) {
    if (alt == variant.assignment) {
      throw std::invalid_argument("counterfactual alternate equals the variant's own assignment");
    }
  }
  const std::string evidence_text = evidence_block(evidence, store);
  PromptBundle bundle;
  bundle.strategy = FilterStrategy::counterfactual;
  bundle.probe_assignments.push_back(variant.assignment);
  for (const Assignment& alt : alternates) bundle.probe_assignments.push_back(alt);
  const std::string& tmpl = templates.text_for(FilterStrategy::counterfactual);
  for (const Assignment& assignment : bundle.probe_assignments) {
    bundle.prompts.push_back(render(tmpl, item, realize_text(item.question, assignment), evidence_text));
  }
  return bundle;
}

PromptBundle build_adversarial(const PromptTemplates& templates, const DatasetItem& item,
                               const QueryVariant& variant, const RankedList& evidence, const SnippetStore& store,
                               const AttributeSets& sets) {
  const std::string question = neutralize_demographics(variant.realized_text, sets);
  const std::string evidence_text = neutralize_demographics(evidence_block(evidence, store), sets);
  return single_prompt_bundle(FilterStrategy::adversarial, templates, item, question, evidence_text);
}

std::vector<Assignment> counterfactual_alternates(const QueryVariant& variant, const AttributeSets& sets,
                                                  const std::vector<std::string>& axes) {
  std::vector<Assignment> alternates;
  if (variant.assignment.empty()) {
    for (const std::string& axis : canonical_axes()) {
      if (std::find(axes.begin(), axes.end(), axis) == axes.end() && !axes.empty()) continue;
      for (const std::string& value : sets.values(axis)) {
        alternates.push_back({{axis, value}});
      }
    }
    return alternates;
  }
  for (const std::string& axis : canonical_axes()) {
    auto it = variant.assignment.find(axis);
    if (it == variant.assignment.end()) continue;
    for (const std::string& value : sets.values(axis)) {
      if (value == it->second) continue;
      Assignment alt = variant.assignment;
      alt[axis] = value;
      alternates.push_back(std::move(alt));
    }
  }
  return alternates;
}

std::pair<ParsedAnswer, bool> check_counterfactual_consistency(std::span<const ParsedAnswer> answers) {
  if (answers.size() < 2) throw std::invalid_argument("consistency check needs at least 2 answers");
  std::vector<const ParsedAnswer*> parseable;
  for (const ParsedAnswer& answer : answers) {
    if (answer.parseable()) parseable.push_back(&answer);
  }
  if (parseable.empty()) return {ParsedAnswer::unparseable(), false};

  const bool unanimous = parseable.size() == answers.size() &&
                         std::all_of(parseable.begin(), parseable.end(),
                                     [&](const ParsedAnswer* a) { return *a == *parseable.front(); });
  if (unanimous) return {*parseable.front(), true};

  std::map<std::string, int> counts;  // sorted keys give the ascending tie-break
  for (const ParsedAnswer* answer : parseable) ++counts[answer->value()];
  const ParsedAnswer* winner = nullptr;
  int best = 0;
  for (const auto& [value, count] : counts) {
    if (count > best) {
      best = count;
      for (const ParsedAnswer* answer : parseable) {
        if (answer->value() == value) {
          winner = answer;
          break;
        }
      }
    }
  }
  return {*winner, false};
}

}  // namespace equirag
