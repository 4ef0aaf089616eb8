#pragma once

#include <map>
#include <string>
#include <vector>

namespace equirag {

/// Demographic axes. Values are configurable; defaults below are the standard
/// race and gender sets this harness evaluates.
struct AttributeSets {
  std::vector<std::string> race = {"Caucasian", "African American", "Asian", "Hispanic"};
  std::vector<std::string> gender = {"male", "female", "non-binary"};

  const std::vector<std::string>& values(const std::string& axis) const;
};

/// Axis names in canonical order (race before gender everywhere: variant
/// ordering, variant keys, clause rendering).
inline const std::vector<std::string>& canonical_axes() {
  static const std::vector<std::string> axes = {"race", "gender"};
  return axes;
}

using Assignment = std::map<std::string, std::string>;  // axis -> value

/// Canonical key, e.g. "race=Asian|gender=female"; "base" for the empty
/// assignment. Bijective with the assignment per base item.
std::string variant_key_for(const Assignment& assignment);

struct QueryVariant {
  std::string base_id;
  Assignment assignment;
  std::string realized_text;
  std::string variant_key;
};

/// Substitutes an assignment into a question template. Placeholders `{race}`,
/// `{gender}` and `{demographic}` are replaced where present; with no
/// placeholder and a non-empty assignment, the clause
/// "This <race> <gender> patient: " is prefixed (unassigned axes omitted,
/// fallback logged). An empty assignment returns the template unchanged.
std::string realize_text(std::string_view question_template, const Assignment& assignment);

/// Cartesian product over the requested axes in race-major order. The empty
/// axes set yields exactly the base item as one variant. With the default
/// sets, {race, gender} yields 12 variants and {race} yields 4.
std::vector<QueryVariant> generate_variants(const std::string& base_id, const std::string& question,
                                            const std::vector<std::string>& axes, const AttributeSets& sets);

}  // namespace equirag
