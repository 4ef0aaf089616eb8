#include "equirag/variants.hpp"

#include <algorithm>

#include "equirag/errors.hpp"
#include "equirag/log.hpp"

namespace equirag {

const std::vector<std::string>& AttributeSets::values(const std::string& axis) const {
  if (axis == "race") return race;
  if (axis == "gender") return gender;
  throw ConfigError("unknown demographic axis: " + axis);
}

std::string variant_key_for(const Assignment& assignment) {
  if (assignment.empty()) return "base";
  std::string key;
  for (const std::string& axis : canonical_axes()) {
    auto it = assignment.find(axis);
    if (it == assignment.end()) continue;
    if (!key.empty()) key += '|';
    key += axis + "=" + it->second;
  }
  return key;
}

namespace {

bool replace_all(std::string& text, std::string_view needle, std::string_view replacement) {
  bool replaced = false;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    text.replace(pos, needle.size(), replacement);
    pos += replacement.size();
    replaced = true;
  }
  return replaced;
}

/// "<race> <gender>" over the assigned axes, canonical order.
std::string demographic_phrase(const Assignment& assignment) {
  std::string phrase;
  for (const std::string& axis : canonical_axes()) {
    auto it = assignment.find(axis);
    if (it == assignment.end()) continue;
    if (!phrase.empty()) phrase += ' ';
    phrase += it->second;
  }
  return phrase;
}

}  // namespace

std::string realize_text(std::string_view question_template, const Assignment& assignment) {
  std::string text(question_template);
  if (assignment.empty()) return text;

  bool substituted = false;
  for (const std::string& axis : canonical_axes()) {
    auto it = assignment.find(axis);
    if (it == assignment.end()) continue;
    substituted |= replace_all(text, "{" + axis + "}", it->second);
  }
  substituted |= replace_all(text, "{demographic}", demographic_phrase(assignment));
  if (substituted) return text;

  log_debug("no placeholder in question; falling back to prefix injection");
  return "This " + demographic_phrase(assignment) + " patient: " + text;
}

std::vector<QueryVariant> generate_variants(const std::string& base_id, const std::string& question,
                                            const std::vector<std::string>& axes, const AttributeSets& sets) {
  std::vector<std::string> ordered_axes;
  for (const std::string& axis : canonical_axes()) {
    if (std::find(axes.begin(), axes.end(), axis) != axes.end()) ordered_axes.push_back(axis);
  }
  for (const std::string& axis : axes) {
    if (std::find(canonical_axes().begin(), canonical_axes().end(), axis) == canonical_axes().end()) {
      throw ConfigError("unknown demographic axis: " + axis);
    }
    if (sets.values(axis).empty()) throw ConfigError("empty attribute set for axis: " + axis);
  }

  std::vector<Assignment> assignments = {{}};
  for (const std::string& axis : ordered_axes) {
    std::vector<Assignment> next;
    for (const Assignment& partial : assignments) {
      for (const std::string& value : sets.values(axis)) {
        Assignment extended = partial;
        extended[axis] = value;
        next.push_back(std::move(extended));
      }
    }
    assignments = std::move(next);
  }

  std::vector<QueryVariant> out;
  out.reserve(assignments.size());
  for (Assignment& assignment : assignments) {
    QueryVariant variant;
    variant.base_id = base_id;
    variant.realized_text = realize_text(question, assignment);
    variant.variant_key = variant_key_for(assignment);
    variant.assignment = std::move(assignment);
    out.push_back(std::move(variant));
  }
  return out;
}

}  // namespace equirag
