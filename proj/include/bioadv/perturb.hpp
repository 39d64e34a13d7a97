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

// Black-box attacks on NER and STS corpora.
//
//   swap      one adjacent pair of distinct characters is transposed
//   keyboard  one character is replaced by a neighbouring key
//   synonym   a chemical or disease term is replaced by a lexicon synonym
//
// Noise attacks touch every targeted token that has at least
// `min_word_len` characters; labels and token counts never change. The
// synonym attack may change token counts; replacement tokens of an entity are
// relabelled B-<type> I-<type> ...
//
// Every token (span, for synonyms) draws from its own generator seeded with
// derive_seed(spec.seed, sentence index, token index), see rng.hpp.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bioadv/corpus.hpp"
#include "bioadv/error.hpp"
#include "bioadv/keyboard.hpp"
#include "bioadv/lexicon.hpp"
#include "bioadv/parallel.hpp"
#include "bioadv/rng.hpp"
#include "bioadv/text.hpp"

namespace bioadv {

enum class Attack { kSwap, kKeyboard, kSynonym };
enum class Target { kGoldEntities, kLexiconTerms, kAllWords };
enum class StsSide { kFirst, kSecond };

inline std::string_view to_string(Attack a) {
  switch (a) {
    case Attack::kSwap: return "swap";
    case Attack::kKeyboard: return "keyboard";
    case Attack::kSynonym: return "synonym";
  }
  return "?";
}

inline std::string_view to_string(Target t) {
  switch (t) {
    case Target::kGoldEntities: return "gold-entities";
    case Target::kLexiconTerms: return "lexicon-terms";
    case Target::kAllWords: return "all-words";
  }
  return "?";
}

inline std::string_view to_string(StsSide s) { return s == StsSide::kFirst ? "first" : "second"; }

inline std::optional<Attack> parse_attack(std::string_view s) {
  if (s == "swap") return Attack::kSwap;
  if (s == "keyboard") return Attack::kKeyboard;
  if (s == "synonym") return Attack::kSynonym;
  return std::nullopt;
}

// Accepts the long names and the short CLI forms gold / lexicon / all.
inline std::optional<Target> parse_target(std::string_view s) {
  if (s == "gold-entities" || s == "gold") return Target::kGoldEntities;
  if (s == "lexicon-terms" || s == "lexicon") return Target::kLexiconTerms;
  if (s == "all-words" || s == "all") return Target::kAllWords;
  return std::nullopt;
}

inline std::optional<StsSide> parse_sts_side(std::string_view s) {
  if (s == "first") return StsSide::kFirst;
  if (s == "second") return StsSide::kSecond;
  return std::nullopt;
}

struct PerturbSpec {
  Attack attack = Attack::kSwap;
  Target target = Target::kGoldEntities;
  std::uint64_t seed = 13;
  std::size_t min_word_len = 2;
  StsSide sts_side = StsSide::kFirst;

  friend bool operator==(const PerturbSpec&, const PerturbSpec&) = default;
};

// Categories the synonym attack is allowed to replace.
inline bool is_synonym_category(std::string_view category) {
  const std::string c = text::ascii_lower(category);
  return c == "chemical" || c == "disease";
}

inline void validate_spec(const PerturbSpec& spec, bool ner, const SynonymLexicon* lex) {
  if (spec.min_word_len == 0) throw ConfigError("min_word_len must be positive");
  if (!ner && spec.target == Target::kGoldEntities)
    throw ConfigError("gold-entities targeting needs an NER corpus");
  if (spec.attack == Attack::kSynonym && lex == nullptr) throw ConfigError("synonym attack requires a lexicon");
  if (spec.target == Target::kLexiconTerms && lex == nullptr)
    throw ConfigError("lexicon-terms targeting requires a lexicon");
}

// ---------------------------------------------------------------------------
// Word-level noise

inline std::string swap_word(std::string_view word, DeterministicRng& rng) {
  std::u32string cps = text::decode_utf8(word);
  std::vector<std::size_t> pairs;
  for (std::size_t i = 0; i + 1 < cps.size(); ++i)
    if (cps[i] != cps[i + 1]) pairs.push_back(i);
  if (pairs.empty()) return std::string(word);
  const std::size_t i = pairs[rng.uniform(pairs.size())];
  std::swap(cps[i], cps[i + 1]);
  return text::encode_utf8(cps);
}

inline std::string keyboard_typo_word(std::string_view word, const KeyboardLayout& layout, DeterministicRng& rng) {
  std::u32string cps = text::decode_utf8(word);
  const auto lower = [](char32_t c) -> char32_t { return (c >= U'A' && c <= U'Z') ? c - U'A' + U'a' : c; };
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < cps.size(); ++i)
    if (layout.contains(lower(cps[i]))) positions.push_back(i);
  if (positions.empty()) return std::string(word);
  const std::size_t pos = positions[rng.uniform(positions.size())];
  const auto& neighbours = *layout.neighbours(lower(cps[pos]));
  char32_t replacement = neighbours[rng.uniform(neighbours.size())];
  const bool upper = cps[pos] >= U'A' && cps[pos] <= U'Z';
  if (upper && replacement >= U'a' && replacement <= U'z') replacement = replacement - U'a' + U'A';
  cps[pos] = replacement;
  return text::encode_utf8(cps);
}

namespace detail {

inline std::string noise_word(const std::string& word, const PerturbSpec& spec, const KeyboardLayout& layout,
                              std::uint64_t sentence, std::uint64_t token) {
  if (text::char_count(word) < spec.min_word_len) return word;
  DeterministicRng rng(derive_seed(spec.seed, sentence, token));
  return spec.attack == Attack::kSwap ? swap_word(word, rng) : keyboard_typo_word(word, layout, rng);
}

inline bool iequals(std::string_view a, std::string_view b) { return text::ascii_lower(a) == text::ascii_lower(b); }

struct Replacement {
  std::size_t start;
  std::size_t end;
  std::vector<std::string> tokens;
  std::optional<std::string> etype;  // nullopt: replacement tokens are O
};

// Token mask of the tokens selected by a noise attack's targeting policy.
inline std::vector<bool> noise_targets(std::span<const std::string> texts, const NerSentence* ner,
                                       Target target, const SynonymLexicon* lex) {
  std::vector<bool> mask(texts.size(), target == Target::kAllWords);
  if (target == Target::kGoldEntities) {
    for (const auto& span : gold_spans(*ner))
      for (std::size_t i = span.start; i < span.end; ++i) mask[i] = true;
  } else if (target == Target::kLexiconTerms) {
    for (const auto& m : find_terms(texts, *lex))
      for (std::size_t i = m.start; i < m.end; ++i) mask[i] = true;
  }
  return mask;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sentence level

inline NerSentence perturb_ner_sentence(const NerSentence& sentence, std::size_t index, const PerturbSpec& spec,
                                        const KeyboardLayout& layout, const SynonymLexicon* lex) {
  const std::vector<std::string> texts = sentence.texts();
  if (spec.attack != Attack::kSynonym) {
    const auto mask = detail::noise_targets(texts, &sentence, spec.target, lex);
    NerSentence out = sentence;
    for (std::size_t t = 0; t < texts.size(); ++t)
      if (mask[t]) out.tokens[t].text = detail::noise_word(texts[t], spec, layout, index, t);
    return out;
  }

  std::vector<detail::Replacement> plan;
  const auto spans = gold_spans(sentence);
  const auto draw = [&](const std::string& term, std::size_t start) {
    DeterministicRng rng(derive_seed(spec.seed, index, start));
    return pick_synonym(term, *lex, rng);
  };
  if (spec.target == Target::kGoldEntities) {
    for (const auto& span : spans) {
      const std::string term =
          text::normalize_term(std::span<const std::string>(texts).subspan(span.start, span.end - span.start));
      const auto* entry = lex->find(term);
      if (!entry || !is_synonym_category(entry->category) || !detail::iequals(entry->category, span.etype)) continue;
      plan.push_back({span.start, span.end, draw(term, span.start), span.etype});
    }
  } else {
    const auto labels = sentence.labels();
    for (const auto& m : find_terms(texts, *lex)) {
      if (!is_synonym_category(m.category)) continue;
      const auto exact = std::find_if(spans.begin(), spans.end(),
                                      [&](const EntitySpan& s) { return s.start == m.start && s.end == m.end; });
      if (exact != spans.end()) {
        if (!detail::iequals(exact->etype, m.category)) continue;
        plan.push_back({m.start, m.end, draw(m.term, m.start), exact->etype});
        continue;
      }
      const bool outside = std::all_of(labels.begin() + static_cast<std::ptrdiff_t>(m.start),
                                       labels.begin() + static_cast<std::ptrdiff_t>(m.end),
                                       [](const std::string& l) { return l == "O"; });
      if (outside) plan.push_back({m.start, m.end, draw(m.term, m.start), std::nullopt});
    }
  }

  NerSentence out;
  out.source_id = sentence.source_id;
  std::size_t next = 0;
  for (std::size_t t = 0; t < sentence.tokens.size();) {
    if (next < plan.size() && plan[next].start == t) {
      const auto& r = plan[next++];
      for (std::size_t k = 0; k < r.tokens.size(); ++k) {
        std::string label = r.etype ? (k == 0 ? "B-" : "I-") + *r.etype : "O";
        out.tokens.push_back(Token{r.tokens[k], std::move(label)});
      }
      t = r.end;
      continue;
    }
    out.tokens.push_back(sentence.tokens[t]);
    ++t;
  }
  return out;
}

inline std::vector<std::string> perturb_sts_sentence(const std::vector<std::string>& tokens, std::size_t index,
                                                     const PerturbSpec& spec, const KeyboardLayout& layout,
                                                     const SynonymLexicon* lex) {
  if (spec.attack != Attack::kSynonym) {
    const auto mask = detail::noise_targets(tokens, nullptr, spec.target, lex);
    std::vector<std::string> out = tokens;
    for (std::size_t t = 0; t < tokens.size(); ++t)
      if (mask[t]) out[t] = detail::noise_word(tokens[t], spec, layout, index, t);
    return out;
  }
  std::vector<std::string> out;
  std::size_t t = 0;
  for (const auto& m : find_terms(tokens, *lex)) {
    if (!is_synonym_category(m.category)) continue;
    out.insert(out.end(), tokens.begin() + static_cast<std::ptrdiff_t>(t),
               tokens.begin() + static_cast<std::ptrdiff_t>(m.start));
    DeterministicRng rng(derive_seed(spec.seed, index, m.start));
    const auto& syn = pick_synonym(m.term, *lex, rng);
    out.insert(out.end(), syn.begin(), syn.end());
    t = m.end;
  }
  out.insert(out.end(), tokens.begin() + static_cast<std::ptrdiff_t>(t), tokens.end());
  return out;
}

// ---------------------------------------------------------------------------
// Corpus level

inline NerCorpus perturb_ner(const NerCorpus& corpus, const PerturbSpec& spec, const KeyboardLayout& layout,
                             const SynonymLexicon* lex = nullptr, std::size_t workers = 1) {
  validate_spec(spec, true, lex);
  NerCorpus out;
  out.name = corpus.name;
  out.sentences.resize(corpus.sentences.size());
  parallel_for(corpus.sentences.size(), workers, [&](std::size_t i) {
    out.sentences[i] = perturb_ner_sentence(corpus.sentences[i], i, spec, layout, lex);
  });
  return out;
}

inline StsCorpus perturb_sts(const StsCorpus& corpus, const PerturbSpec& spec, const KeyboardLayout& layout,
                             const SynonymLexicon* lex = nullptr, std::size_t workers = 1) {
  validate_spec(spec, false, lex);
  StsCorpus out = corpus;
  parallel_for(corpus.pairs.size(), workers, [&](std::size_t i) {
    auto& side = spec.sts_side == StsSide::kFirst ? out.pairs[i].s1 : out.pairs[i].s2;
    side = perturb_sts_sentence(side, i, spec, layout, lex);
  });
  return out;
}

}  // namespace bioadv
