#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equirag/answer.hpp"
#include "equirag/corpus.hpp"
#include "equirag/dataset.hpp"
#include "equirag/retrieval_types.hpp"
#include "equirag/variants.hpp"

namespace equirag {

enum class FilterStrategy { plain, cot, counterfactual, adversarial };

std::string to_string(FilterStrategy strategy);
FilterStrategy parse_strategy(std::string_view name);  // throws ConfigError

/// Prompt wording lives in template files (one per strategy) with
/// {{evidence}}, {{question}} and {{options}} slots, so runs are auditable
/// against the exact text that was sent.
class PromptTemplates {
 public:
  static PromptTemplates load(const std::filesystem::path& dir);
  const std::string& text_for(FilterStrategy strategy) const;
  /// Concatenated template bytes in strategy order; feeds the config
  /// fingerprint so a template edit changes the run identity.
  std::string fingerprint_payload() const;

 private:
  std::string plain_, cot_, counterfactual_, adversarial_;
};

struct PromptBundle {
  FilterStrategy strategy = FilterStrategy::plain;
  std::vector<std::string> prompts;
  std::vector<Assignment> probe_assignments;  // counterfactual only, aligned 1:1
};

/// Baseline prompt: preamble + enumerated evidence + question (+ options and
/// the single-letter instruction for closed QA). Zero retrieved snippets
/// render as a "No evidence retrieved." block.
PromptBundle build_plain(const PromptTemplates& templates, const DatasetItem& item, const QueryVariant& variant,
                         const RankedList& evidence, const SnippetStore& store);

/// As build_plain plus an instruction block demanding numbered reasoning
/// steps that cite evidence snippets and a terminal "Final Answer:" line.
PromptBundle build_cot(const PromptTemplates& templates, const DatasetItem& item, const QueryVariant& variant,
                       const RankedList& evidence, const SnippetStore& store);

/// One prompt per demographic assignment (the variant's own plus each
/// alternate), identical except for the demographic clause. Alternates must
/// be non-empty and distinct from the variant's assignment.
PromptBundle build_counterfactual(const PromptTemplates& templates, const DatasetItem& item,
                                  const QueryVariant& variant, const RankedList& evidence,
                                  const SnippetStore& store, std::span<const Assignment> alternates);

/// Demographic markers in the question and the evidence snippets are
/// replaced with the neutral token, and the template instructs the model to
/// ignore demographic attributes. The variant's assignment is untouched, so
/// metric grouping still attributes the record to its group.
PromptBundle build_adversarial(const PromptTemplates& templates, const DatasetItem& item,
                               const QueryVariant& variant, const RankedList& evidence, const SnippetStore& store,
                               const AttributeSets& sets);

/// Replaces word-bounded, case-insensitive runs of configured attribute
/// values with "the patient" (injected clauses collapse to "This patient:").
std::string neutralize_demographics(std::string_view text, const AttributeSets& sets);

/// True if any configured attribute value occurs word-bounded
/// (case-insensitive) in the text. The adversarial invariant scan.
bool contains_demographic_marker(std::string_view text, const AttributeSets& sets);

/// Default probe assignments for the counterfactual strategy: for each
/// assigned axis, every other value of that axis with the remaining axes
/// fixed. For the base variant, single-axis probes over every configured
/// value.
std::vector<Assignment> counterfactual_alternates(const QueryVariant& variant, const AttributeSets& sets,
                                                  const std::vector<std::string>& axes);

/// Unanimous parsed answers yield (answer, true); otherwise the plurality
/// answer with ascending tie-break and a false consistency flag. Probes that
/// failed to parse count as disagreement; if nothing parsed, the result is
/// unparseable (scored incorrect downstream).
std::pair<ParsedAnswer, bool> check_counterfactual_consistency(std::span<const ParsedAnswer> answers);

}  // namespace equirag
