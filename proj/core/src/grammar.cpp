#include "dimscope/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include <json.hpp>

#include "dimscope/error.hpp"
#include "dimscope/fileio.hpp"

namespace dimscope {
namespace {

[[noreturn]] void fail(const std::string& grammar, const std::string& what) {
  throw Error(ErrorKind::InvalidGrammar,
              "grammar '" + grammar + "': " + what);
}

bool is_category_ref(std::string_view token) {
  return token.size() > 2 && token.front() == '{' && token.back() == '}';
}

}  // namespace

bool is_word_token(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
  });
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    const std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

GrammarSpec::GrammarSpec(std::string name, std::vector<Slot> slots,
                         std::vector<Category> categories)
    : name_(std::move(name)),
      slots_(std::move(slots)),
      categories_(std::move(categories)) {
  std::map<std::string, std::size_t, std::less<>> by_name;
  std::map<std::string, std::string, std::less<>> owner;
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    const Category& cat = categories_[c];
    if (!by_name.emplace(cat.name, c).second) {
      fail(name_, "category '" + cat.name + "' defined twice");
    }
    if (cat.words.size() != kVocabularySize) {
      fail(name_, "category '" + cat.name + "' has " +
                      std::to_string(cat.words.size()) + " words, expected " +
                      std::to_string(kVocabularySize));
    }
    for (const std::string& w : cat.words) {
      if (w.empty() || split_whitespace(w).size() != 1 || !is_word_token(w)) {
        fail(name_, "category '" + cat.name + "' word '" + w +
                        "' is not a single word token");
      }
      auto [it, inserted] = owner.emplace(w, cat.name);
      if (!inserted) {
        fail(name_, "word '" + w + "' appears in both '" + it->second +
                        "' and '" + cat.name + "'");
      }
    }
  }

  if (slots_.empty()) fail(name_, "template is empty");
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    const Slot& slot = slots_[s];
    if (slot.kind == Slot::Kind::Category) {
      const auto it = by_name.find(slot.text);
      if (it == by_name.end()) {
        fail(name_, "template references undefined category '" + slot.text +
                        "'");
      }
      variable_slots_.push_back(s);
      slot_category_.push_back(it->second);
      ++length_words_;
    } else {
      if (slot.text.empty() || split_whitespace(slot.text).size() != 1) {
        fail(name_, "literal '" + slot.text + "' is not a single token");
      }
      if (is_word_token(slot.text)) ++length_words_;
    }
  }
  if (variable_slots_.empty()) fail(name_, "template has no category slots");
}

std::string GrammarSpec::render(std::span<const std::uint16_t> indices) const {
  if (indices.size() != variable_slots_.size()) {
    throw Error(ErrorKind::InvalidInput, "index count does not match slots");
  }
  std::string out;
  std::size_t v = 0;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (s > 0) out.push_back(' ');
    if (slots_[s].kind == Slot::Kind::Category) {
      const Category& cat = categories_[slot_category_[v]];
      out += cat.words.at(indices[v]);
      ++v;
    } else {
      out += slots_[s].text;
    }
  }
  return out;
}

GrammarSpec load_grammar(std::string_view document) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidGrammar,
                std::string("grammar document does not parse: ") + e.what());
  }
  if (!doc.is_object()) fail("?", "document is not an object");
  if (doc.contains("name") && !doc["name"].is_string()) {
    fail("?", "'name' must be a string");
  }
  const std::string name = doc.value("name", std::string("unnamed"));
  if (!doc.contains("template") || !doc["template"].is_string()) {
    fail(name, "missing 'template' string");
  }
  if (!doc.contains("categories") || !doc["categories"].is_object()) {
    fail(name, "missing 'categories' object");
  }

  std::vector<Slot> slots;
  for (std::string& token :
       split_whitespace(doc["template"].get<std::string>())) {
    if (is_category_ref(token)) {
      slots.push_back({Slot::Kind::Category, token.substr(1, token.size() - 2)});
    } else {
      slots.push_back({Slot::Kind::Literal, std::move(token)});
    }
  }

  std::vector<Category> categories;
  for (const auto& [cat_name, words] : doc["categories"].items()) {
    if (!words.is_array()) fail(name, "category '" + cat_name + "' not a list");
    Category cat{cat_name, {}};
    for (const auto& w : words) {
      if (!w.is_string()) fail(name, "non-string word in '" + cat_name + "'");
      cat.words.push_back(w.get<std::string>());
    }
    categories.push_back(std::move(cat));
  }

  GrammarSpec spec(name, std::move(slots), std::move(categories));
  if (doc.contains("length_words")) {
    if (!doc["length_words"].is_number_unsigned()) {
      fail(name, "'length_words' must be a non-negative integer");
    }
    const auto declared = doc["length_words"].get<std::size_t>();
    if (declared != spec.length_words()) {
      fail(name, "declares " + std::to_string(declared) +
                     " words but the template renders " +
                     std::to_string(spec.length_words()));
    }
  }
  return spec;
}

GrammarSpec load_grammar_file(const std::filesystem::path& path) {
  return load_grammar(read_file(path));
}

}  // namespace dimscope
