#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace equirag {

enum class TaskType { closed, open };

std::string to_string(TaskType task);

/// One QA item. Closed items carry lettered options and a gold letter; open
/// items carry a reference answer text. `answerable` marks questions that
/// genuinely have a correct answer (defaults to 1) and feeds the
/// equal-opportunity conditioning.
struct DatasetItem {
  std::string id;
  TaskType task = TaskType::closed;
  std::string question;  // may contain {race}/{gender}/{demographic} placeholders
  std::map<char, std::string> options;  // letter -> text, closed only
  char gold_letter = '\0';              // closed only
  std::string reference;                // open only
  int answerable = 1;

  std::vector<char> option_letters() const;
};

/// Loads a JSONL dataset. Closed lines: {"id", "question", "options": {"A":
/// ...}, "gold": "C"}; open lines: {"id", "question", "reference": ...}.
/// Optional per-line fields: "answerable" (0/1), "task" (validated against
/// the inferred type). Malformed lines raise SchemaViolationError with their
/// line number; an empty file raises EmptyDatasetError. `dataset_name`
/// defaults to the file stem and is echoed into prediction records.
std::vector<DatasetItem> load_dataset(const std::filesystem::path& path, std::string* dataset_name = nullptr);

}  // namespace equirag
