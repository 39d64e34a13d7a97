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

// NER (two-column CoNLL, IOB labels) and STS (four-column TSV) corpora.
//
// NER files hold one `token label` pair per line with a blank line between
// sentences; `-DOCSTART-` lines are skipped. Labels are repaired on load: an
// I-X that does not continue an open X chunk becomes B-X, so everything past the
// parser sees well-formed IOB.
//
// STS files hold `id<TAB>sentence1<TAB>sentence2<TAB>score` rows; a first row
// whose first cell is literally `id` is a header and is skipped. Sentences are
// split on whitespace.
//
// Serialization is canonical: single space / single tab separators, `\n` line
// endings, one blank line between NER sentences and nothing after the last
// newline. Parsing canonical output reproduces the corpus exactly.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bioadv/error.hpp"
#include "bioadv/text.hpp"

namespace bioadv {

struct Token {
  std::string text;
  std::optional<std::string> label;

  friend bool operator==(const Token&, const Token&) = default;
};

struct NerSentence {
  std::vector<Token> tokens;
  std::optional<std::string> source_id;

  std::vector<std::string> texts() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.text);
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.label.value_or("O"));
    return out;
  }

  friend bool operator==(const NerSentence&, const NerSentence&) = default;
};

struct EntitySpan {
  std::size_t start = 0;  // inclusive
  std::size_t end = 0;    // exclusive
  std::string etype;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
  friend auto operator<=>(const EntitySpan&, const EntitySpan&) = default;
};

struct NerCorpus {
  std::vector<NerSentence> sentences;
  std::string name;

  std::size_t size() const noexcept { return sentences.size(); }

  friend bool operator==(const NerCorpus&, const NerCorpus&) = default;
};

struct StsPair {
  std::string id;
  std::vector<std::string> s1;
  std::vector<std::string> s2;
  double gold_score = 0.0;

  friend bool operator==(const StsPair&, const StsPair&) = default;
};

struct StsCorpus {
  std::vector<StsPair> pairs;
  std::string name;

  std::size_t size() const noexcept { return pairs.size(); }

  friend bool operator==(const StsCorpus&, const StsCorpus&) = default;
};

// ---------------------------------------------------------------------------
// Labels

struct IobTag {
  char prefix = 'O';      // 'O', 'B' or 'I'
  std::string_view type;  // empty for 'O'
};

inline std::optional<IobTag> parse_label(std::string_view label) {
  if (label == "O") return IobTag{};
  if (label.size() < 3 || label[1] != '-') return std::nullopt;
  if (label[0] != 'B' && label[0] != 'I') return std::nullopt;
  const std::string_view type = label.substr(2);
  if (text::has_space(type)) return std::nullopt;
  return IobTag{label[0], type};
}

inline bool is_valid_label(std::string_view label) { return parse_label(label).has_value(); }

// Rewrites I-X labels that do not continue an X chunk as B-X. Labels must be
// syntactically valid.
inline void repair_iob(std::span<std::string> labels) {
  std::string_view open;
  for (auto& label : labels) {
    const auto tag = parse_label(label);
    if (!tag || tag->prefix == 'O') {
      open = {};
      continue;
    }
    if (tag->prefix == 'I' && tag->type != open) label[0] = 'B';
    open = parse_label(label)->type;
  }
}

// Maximal chunks of a label sequence. B-X opens, contiguous I-X extends, an
// I-X with no open X chunk opens one (CoNLL convention), anything else closes.
// Invalid labels are treated as O.
inline std::vector<EntitySpan> chunk_spans(std::span<const std::string> labels) {
  std::vector<EntitySpan> spans;
  std::optional<EntitySpan> open;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto tag = parse_label(labels[i]);
    if (tag && tag->prefix == 'I' && open && open->etype == tag->type) {
      open->end = i + 1;
      continue;
    }
    if (open) {
      spans.push_back(std::move(*open));
      open.reset();
    }
    if (tag && tag->prefix != 'O') open = EntitySpan{i, i + 1, std::string(tag->type)};
  }
  if (open) spans.push_back(std::move(*open));
  return spans;
}

inline std::vector<EntitySpan> gold_spans(const NerSentence& sentence) {
  const auto labels = sentence.labels();
  return chunk_spans(labels);
}

// ---------------------------------------------------------------------------
// NER

inline NerCorpus parse_ner(std::string_view data, std::string name = {}) {
  NerCorpus corpus;
  corpus.name = std::move(name);
  NerSentence current;
  const auto flush = [&] {
    if (current.tokens.empty()) return;
    std::vector<std::string> labels = current.labels();
    repair_iob(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) current.tokens[i].label = std::move(labels[i]);
    corpus.sentences.push_back(std::move(current));
    current = NerSentence{};
  };

  const auto all = text::lines(data);
  for (std::size_t n = 0; n < all.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = all[n];
    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    auto cols = text::split_ws(line);
    if (cols.front() == "-DOCSTART-") continue;
    if (cols.size() != 2)
      throw ParseError(line_no, "expected 2 columns (token label), got " + std::to_string(cols.size()));
    if (!is_valid_label(cols[1])) throw ParseError(line_no, "invalid IOB label '" + cols[1] + "'");
    current.tokens.push_back(Token{std::move(cols[0]), std::move(cols[1])});
  }
  flush();
  return corpus;
}

inline std::string serialize_ner(const NerCorpus& corpus) {
  std::string out;
  for (std::size_t s = 0; s < corpus.sentences.size(); ++s) {
    if (s) out += '\n';
    for (const auto& tok : corpus.sentences[s].tokens) {
      out += tok.text;
      out += ' ';
      out += tok.label.value_or("O");
      out += '\n';
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// STS

// Shortest decimal that parses back to the same double.
inline std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::optional<double> parse_real(std::string_view s) {
  s = text::trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline StsCorpus parse_sts(std::string_view data, std::string name = {}) {
  StsCorpus corpus;
  corpus.name = std::move(name);
  std::unordered_set<std::string> seen;
  const auto all = text::lines(data);
  bool first_row = true;
  for (std::size_t n = 0; n < all.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = all[n];
    if (text::trim(line).empty()) continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() != 4)
      throw ParseError(line_no, "expected 4 tab-separated columns, got " + std::to_string(cols.size()));
    if (first_row && cols[0] == "id") {
      first_row = false;
      continue;
    }
    first_row = false;
    StsPair pair;
    pair.id = std::string(text::trim(cols[0]));
    if (pair.id.empty()) throw ParseError(line_no, "empty pair id");
    pair.s1 = text::split_ws(cols[1]);
    pair.s2 = text::split_ws(cols[2]);
    if (pair.s1.empty() || pair.s2.empty()) throw ParseError(line_no, "empty sentence");
    const auto score = parse_real(cols[3]);
    if (!score) throw ParseError(line_no, "non-numeric score '" + std::string(cols[3]) + "'");
    if (!std::isfinite(*score)) throw ParseError(line_no, "score is not finite");
    pair.gold_score = *score;
    if (!seen.insert(pair.id).second) throw ParseError(line_no, "duplicate pair id '" + pair.id + "'");
    corpus.pairs.push_back(std::move(pair));
  }
  return corpus;
}

inline std::string serialize_sts(const StsCorpus& corpus) {
  std::string out;
  for (const auto& p : corpus.pairs) {
    out += p.id;
    out += '\t';
    out += text::join(p.s1);
    out += '\t';
    out += text::join(p.s2);
    out += '\t';
    out += format_real(p.gold_score);
    out += '\n';
  }
  return out;
}

}  // namespace bioadv
