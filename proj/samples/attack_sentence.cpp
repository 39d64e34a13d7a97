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

// Prints a sentence under each attack, targeting starter-lexicon terms.
//
//   attack_sentence [--seed N] [sentence words...]

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "bioadv/bioadv.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 13;
  std::vector<std::string> words;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      for (auto& w : bioadv::text::split_ws(arg)) words.push_back(std::move(w));
    }
  }
  if (words.empty())
    words = bioadv::text::split_ws(
        "Two mothers with heart valve prosthesis were treated with warfarin during pregnancy .");

  const auto& lex = bioadv::starter_lexicon();
  const auto& layout = bioadv::default_layout();
  std::cout << "Original  " << bioadv::text::join(words) << "\n";
  for (const auto attack : {bioadv::Attack::kSwap, bioadv::Attack::kKeyboard, bioadv::Attack::kSynonym}) {
    bioadv::PerturbSpec spec;
    spec.attack = attack;
    spec.target = bioadv::Target::kLexiconTerms;
    spec.seed = seed;
    const auto out = bioadv::perturb_sts_sentence(words, 0, spec, layout, &lex);
    std::cout << bioadv::to_string(attack) << std::string(10 - bioadv::to_string(attack).size(), ' ')
              << bioadv::text::join(out) << "\n";
  }
}
