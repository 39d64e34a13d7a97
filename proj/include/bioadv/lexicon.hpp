// Copyright 2026 The bioadv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Medical term store: term recognition and category-aware synonym lookup.
//
// File format (UTF-8 TSV), one entry per row:
//
//   term<TAB>category<TAB>syn1|syn2|...
//
// Terms and synonyms may span several whitespace-separated tokens. Lines
// starting with `#` are comments. A comment of the form
//
//   #!categories chemical disease procedure
//
// replaces the declared category set (default: chemical, disease); rows with a
// category outside the declared set are rejected.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bioadv/embedded/starter_lexicon.hpp"
#include "bioadv/error.hpp"
#include "bioadv/rng.hpp"
#include "bioadv/text.hpp"

namespace bioadv {

struct LexiconEntry {
  std::string category;
  std::vector<std::vector<std::string>> synonyms;  // non-empty, never the term itself
};

struct TermMatch {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::string term;
  std::string category;

  friend bool operator==(const TermMatch&, const TermMatch&) = default;
};

class SynonymLexicon {
 public:
  static inline const std::set<std::string> kDefaultCategories{"chemical", "disease"};

  SynonymLexicon() : categories_(kDefaultCategories) {}

  // Adds or replaces an entry. Returns false when the term already existed.
  // Synonyms that normalize to the term are dropped; throws ConfigError when
  // none remain or the category is undeclared.
  bool insert(std::string_view term, std::string category,
              std::vector<std::vector<std::string>> synonyms) {
    const std::string key = text::normalize_term(term);
    if (key.empty()) throw ConfigError("empty lexicon term");
    if (!categories_.contains(category)) throw ConfigError("undeclared category '" + category + "'");
    std::erase_if(synonyms, [&](const auto& syn) { return syn.empty() || text::normalize_term(syn) == key; });
    if (synonyms.empty()) throw ConfigError("term '" + key + "' has no synonyms");
    max_len_ = std::max(max_len_, text::split_ws(key).size());
    const bool fresh = !entries_.contains(key);
    entries_[key] = LexiconEntry{std::move(category), std::move(synonyms)};
    return fresh;
  }

  void set_categories(std::set<std::string> categories) { categories_ = std::move(categories); }
  const std::set<std::string>& categories() const noexcept { return categories_; }

  const LexiconEntry* find(std::string_view normalized) const {
    const auto it = entries_.find(std::string(normalized));
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool contains(std::string_view normalized) const { return find(normalized) != nullptr; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t max_term_tokens() const noexcept { return max_len_; }
  const std::map<std::string, LexiconEntry>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, LexiconEntry> entries_;
  std::set<std::string> categories_;
  std::size_t max_len_ = 0;
};

struct LexiconLoad {
  SynonymLexicon lexicon;
  std::vector<std::string> warnings;
};

inline LexiconLoad load_lexicon(std::string_view data) {
  LexiconLoad result;
  const auto all = text::lines(data);
  for (std::size_t n = 0; n < all.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = all[n];
    if (text::trim(line).empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kDirective = "#!categories";
      if (line.starts_with(kDirective)) {
        const auto names = text::split_ws(line.substr(kDirective.size()));
        if (names.empty()) throw ParseError(line_no, "empty category declaration");
        if (!result.lexicon.empty()) throw ParseError(line_no, "category declaration after entries");
        result.lexicon.set_categories({names.begin(), names.end()});
      }
      continue;
    }
    const auto cols = text::split(line, '\t');
    if (cols.size() != 3)
      throw ParseError(line_no, "expected 3 tab-separated columns, got " + std::to_string(cols.size()));
    const std::string term = text::normalize_term(cols[0]);
    if (term.empty()) throw ParseError(line_no, "empty term");
    const std::string category(text::trim(cols[1]));
    if (!result.lexicon.categories().contains(category))
      throw ParseError(line_no, "unknown category '" + category + "'");

    std::vector<std::vector<std::string>> synonyms;
    for (const auto field : text::split(cols[2], '|')) {
      auto toks = text::split_ws(field);
      if (toks.empty()) continue;
      if (text::normalize_term(std::span<const std::string>(toks)) == term) {
        result.warnings.push_back("line " + std::to_string(line_no) + ": dropped self-synonym of '" + term + "'");
        continue;
      }
      synonyms.push_back(std::move(toks));
    }
    if (synonyms.empty()) throw ParseError(line_no, "empty synonym list for '" + term + "'");
    if (!result.lexicon.insert(term, category, std::move(synonyms)))
      result.warnings.push_back("line " + std::to_string(line_no) + ": duplicate term '" + term +
                                "', last row wins");
  }
  return result;
}

// The lexicon shipped in data/starter_lexicon.tsv.
inline const SynonymLexicon& starter_lexicon() {
  static const SynonymLexicon lex = load_lexicon(embedded::kStarterLexicon).lexicon;
  return lex;
}

// Greedy left-to-right longest match. `lookup(key)` receives the lowercased,
// space-joined candidate and returns a pointer to its payload or nullptr;
// `emit(start, end, key, payload)` is called for every match.
template <typename Lookup, typename Emit>
void greedy_longest_match(std::span<const std::string> tokens, std::size_t max_len, Lookup&& lookup, Emit&& emit) {
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const auto& t : tokens) lowered.push_back(text::ascii_lower(t));
  const std::span<const std::string> low(lowered);

  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    for (std::size_t len = std::min(max_len, tokens.size() - i); len > 0; --len) {
      std::string key = text::join(low.subspan(i, len));
      if (const auto* payload = lookup(key)) {
        emit(i, i + len, std::move(key), *payload);
        matched = len;
        break;
      }
    }
    i += matched ? matched : 1;
  }
}

// Lexicon terms in `tokens`, case-insensitive, greedy longest match.
inline std::vector<TermMatch> find_terms(std::span<const std::string> tokens, const SynonymLexicon& lex) {
  std::vector<TermMatch> matches;
  greedy_longest_match(
      tokens, lex.max_term_tokens(), [&](const std::string& key) { return lex.find(key); },
      [&](std::size_t start, std::size_t end, std::string key, const LexiconEntry& entry) {
        matches.push_back(TermMatch{start, end, std::move(key), entry.category});
      });
  return matches;
}

// Uniform choice among the term's synonyms.
inline const std::vector<std::string>& pick_synonym(std::string_view term, const SynonymLexicon& lex,
                                                    DeterministicRng& rng) {
  const auto* entry = lex.find(text::normalize_term(term));
  if (!entry) throw NotFoundError("term '" + std::string(term) + "' not in lexicon");
  return entry->synonyms[rng.uniform(entry->synonyms.size())];
}

}  // namespace bioadv
