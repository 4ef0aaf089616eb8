#include "equirag/dataset.hpp"

#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

#include "equirag/errors.hpp"
#include "equirag/io.hpp"

namespace equirag {

using nlohmann::json;

std::string to_string(TaskType task) { return task == TaskType::closed ? "closed" : "open"; }

std::vector<char> DatasetItem::option_letters() const {
  std::vector<char> letters;
  letters.reserve(options.size());
  for (const auto& [letter, _] : options) letters.push_back(letter);
  return letters;
}

namespace {

DatasetItem parse_item(const json& j, std::size_t line_no) {
  auto fail = [&](const std::string& msg) -> void { throw SchemaViolationError(msg, line_no); };

  DatasetItem item;
  if (!j.is_object()) fail("dataset line is not a JSON object");
  if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty()) {
    fail("missing or empty 'id'");
  }
  item.id = j["id"].get<std::string>();
  if (!j.contains("question") || !j["question"].is_string() || j["question"].get<std::string>().empty()) {
    fail("missing or empty 'question'");
  }
  item.question = j["question"].get<std::string>();

  const bool has_options = j.contains("options");
  const bool has_reference = j.contains("reference");
  if (has_options == has_reference) {
    fail("item must have exactly one of 'options' (closed) or 'reference' (open)");
  }

  if (has_options) {
    item.task = TaskType::closed;
    if (!j["options"].is_object()) fail("'options' must be an object of letter -> text");
    for (const auto& [key, value] : j["options"].items()) {
      if (key.size() != 1 || !std::isupper(static_cast<unsigned char>(key[0]))) {
        fail("option key '" + key + "' is not a single uppercase letter");
      }
      if (!value.is_string() || value.get<std::string>().empty()) {
        fail("option '" + key + "' text must be a non-empty string");
      }
      item.options[key[0]] = value.get<std::string>();
    }
    if (item.options.size() < 2) fail("closed item needs at least 2 options");
    if (!j.contains("gold") || !j["gold"].is_string() || j["gold"].get<std::string>().size() != 1) {
      fail("closed item needs a single-letter 'gold'");
    }
    item.gold_letter = j["gold"].get<std::string>()[0];
    if (item.options.find(item.gold_letter) == item.options.end()) {
      fail(std::string("gold letter '") + item.gold_letter + "' is not among the options");
    }
  } else {
    item.task = TaskType::open;
    if (!j["reference"].is_string() || j["reference"].get<std::string>().empty()) {
      fail("open item needs a non-empty 'reference'");
    }
    item.reference = j["reference"].get<std::string>();
  }

  if (j.contains("task")) {
    const std::string declared = j["task"].get<std::string>();
    if (declared != to_string(item.task)) {
      fail("declared task '" + declared + "' contradicts item shape (" + to_string(item.task) + ")");
    }
  }
  if (j.contains("answerable")) {
    if (!j["answerable"].is_number_integer()) fail("'answerable' must be 0 or 1");
    const int answerable = j["answerable"].get<int>();
    if (answerable != 0 && answerable != 1) fail("'answerable' must be 0 or 1");
    item.answerable = answerable;
  }
  return item;
}

}  // namespace

std::vector<DatasetItem> load_dataset(const std::filesystem::path& path, std::string* dataset_name) {
  const std::string contents = read_file(path);
  std::vector<DatasetItem> items;
  std::set<std::string> ids;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(contents)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaViolationError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    DatasetItem item = parse_item(j, line_no);
    if (!ids.insert(item.id).second) {
      throw SchemaViolationError("duplicate item id '" + item.id + "'", line_no);
    }
    items.push_back(std::move(item));
  }
  if (items.empty()) throw EmptyDatasetError("dataset has no items: " + path.string());
  if (dataset_name) *dataset_name = path.stem().string();
  return items;
}

}  // namespace equirag
