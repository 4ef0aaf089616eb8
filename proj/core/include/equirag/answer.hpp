#pragma once

#include <string>

namespace equirag {

/// Parsed model answer. `option` is used for closed QA (letter within the
/// item's option set), `free_text` for open QA. Unparseable is a value, not
/// an error: downstream scoring counts it as incorrect.
struct ParsedAnswer {
  enum class Kind { option, free_text, unparseable };

  Kind kind = Kind::unparseable;
  char letter = '\0';
  std::string text;

  static ParsedAnswer option(char letter) { return {Kind::option, letter, {}}; }
  static ParsedAnswer free_text(std::string text) { return {Kind::free_text, '\0', std::move(text)}; }
  static ParsedAnswer unparseable() { return {}; }

  bool parseable() const { return kind != Kind::unparseable; }

  /// Comparable answer key: the letter for options, the text for free text.
  std::string value() const {
    if (kind == Kind::option) return std::string(1, letter);
    if (kind == Kind::free_text) return text;
    return {};
  }

  friend bool operator==(const ParsedAnswer& a, const ParsedAnswer& b) {
    return a.kind == b.kind && a.letter == b.letter && a.text == b.text;
  }
};

}  // namespace equirag
