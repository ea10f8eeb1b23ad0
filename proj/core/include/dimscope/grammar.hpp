#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dimscope {

inline constexpr std::size_t kVocabularySize = 50;

struct Slot {
  enum class Kind { Literal, Category };
  Kind kind = Kind::Literal;
  /// Literal token text, or the referenced category name.
  std::string text;
};

struct Category {
  std::string name;
  std::vector<std::string> words;
};

/// A fixed template of literal tokens and category slots plus one vocabulary
/// per category.
///
/// Vocabularies hold exactly kVocabularySize single-token words and are
/// pairwise disjoint. `length_words` counts the word tokens of a rendered
/// sentence; punctuation-only literals such as "." are tokens but not words.
class GrammarSpec {
 public:
  GrammarSpec(std::string name, std::vector<Slot> slots,
              std::vector<Category> categories);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Slot>& slots() const noexcept { return slots_; }
  const std::vector<Category>& categories() const noexcept {
    return categories_;
  }
  std::size_t length_words() const noexcept { return length_words_; }

  /// Number of category slots, l.
  std::size_t variable_count() const noexcept { return variable_slots_.size(); }
  /// Template positions of the category slots, in order.
  const std::vector<std::size_t>& variable_slots() const noexcept {
    return variable_slots_;
  }
  /// Vocabulary of the i-th variable slot.
  const Category& vocabulary(std::size_t variable) const {
    return categories_[slot_category_[variable]];
  }

  /// Renders the template with one vocabulary index per variable slot.
  std::string render(std::span<const std::uint16_t> indices) const;

 private:
  std::string name_;
  std::vector<Slot> slots_;
  std::vector<Category> categories_;
  std::vector<std::size_t> variable_slots_;
  std::vector<std::size_t> slot_category_;
  std::size_t length_words_ = 0;
};

/// True when the token contains at least one letter or digit.
bool is_word_token(std::string_view token);

std::vector<std::string> split_whitespace(std::string_view text);

/// Parses a grammar document:
///
///   {"name": "...", "length_words": 17,
///    "template": "The {quality1} ... .",
///    "categories": {"quality1": ["good", ...], ...}}
///
/// Template tokens of the form {name} reference a category. Throws
/// InvalidGrammar on any violated invariant.
GrammarSpec load_grammar(std::string_view document);
GrammarSpec load_grammar_file(const std::filesystem::path& path);

}  // namespace dimscope
