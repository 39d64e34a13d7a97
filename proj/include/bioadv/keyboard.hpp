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

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bioadv/embedded/qwerty_layout.hpp"
#include "bioadv/error.hpp"
#include "bioadv/text.hpp"

namespace bioadv {

// Key adjacency for keyboard-typo noise. Symmetric and irreflexive; every key
// has at least one neighbour. Neighbour lists are kept sorted by code point.
class KeyboardLayout {
 public:
  using Adjacency = std::map<char32_t, std::vector<char32_t>>;

  KeyboardLayout() = default;

  // Builds the symmetric closure of `edges` and validates it.
  static KeyboardLayout from_edges(const std::map<char32_t, std::vector<char32_t>>& edges) {
    KeyboardLayout layout;
    for (const auto& [key, neighbours] : edges) {
      for (const char32_t n : neighbours) {
        if (n == key) throw ConfigError("key '" + text::encode_utf8(std::u32string(1, key)) + "' lists itself");
        layout.link(key, n);
        layout.link(n, key);
      }
    }
    for (const auto& [key, neighbours] : layout.adjacency_)
      if (neighbours.empty())
        throw ConfigError("key '" + text::encode_utf8(std::u32string(1, key)) + "' has no neighbours");
    return layout;
  }

  const std::vector<char32_t>* neighbours(char32_t key) const {
    const auto it = adjacency_.find(key);
    return it == adjacency_.end() ? nullptr : &it->second;
  }

  bool contains(char32_t key) const { return adjacency_.contains(key); }
  const Adjacency& adjacency() const noexcept { return adjacency_; }

  friend bool operator==(const KeyboardLayout&, const KeyboardLayout&) = default;

 private:
  void link(char32_t a, char32_t b) {
    auto& list = adjacency_[a];
    const auto pos = std::lower_bound(list.begin(), list.end(), b);
    if (pos == list.end() || *pos != b) list.insert(pos, b);
  }

  Adjacency adjacency_;
};

// Parses `key:neighbours` lines (e.g. `a:qwsz`). `#` lines and blank lines are
// ignored. Keys and neighbours are single code points; uppercase ASCII is
// folded to lowercase. A key may appear on several lines.
inline KeyboardLayout parse_layout(std::string_view data) {
  std::map<char32_t, std::vector<char32_t>> edges;
  const auto lower = [](char32_t c) -> char32_t { return (c >= U'A' && c <= U'Z') ? c - U'A' + U'a' : c; };
  const auto all = text::lines(data);
  for (std::size_t n = 0; n < all.size(); ++n) {
    const std::string_view line = text::trim(all[n]);
    if (line.empty() || line.front() == '#') continue;
    const std::u32string cps = text::decode_utf8(line);
    if (cps.size() < 3 || cps[1] != U':')
      throw ParseError(n + 1, "expected 'key:neighbours'");
    if (cps[0] < 0x80 && text::is_space(static_cast<char>(cps[0])))
      throw ParseError(n + 1, "whitespace key");
    auto& list = edges[lower(cps[0])];
    for (std::size_t i = 2; i < cps.size(); ++i) {
      if (cps[i] < 0x80 && text::is_space(static_cast<char>(cps[i])))
        throw ParseError(n + 1, "whitespace in neighbour list");
      list.push_back(lower(cps[i]));
    }
  }
  try {
    return KeyboardLayout::from_edges(edges);
  } catch (const ConfigError& e) {
    throw ParseError(0, e.what());
  }
}

inline const KeyboardLayout& default_layout() {
  static const KeyboardLayout layout = parse_layout(embedded::kQwertyLayout);
  return layout;
}

}  // namespace bioadv
