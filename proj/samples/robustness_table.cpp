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

// Evaluates the memorizing baseline on an NER test file, with and without
// adversarial training, and prints both tables as markdown.
//
//   robustness_table <train.conll> <test.conll> [seed]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bioadv/bioadv.hpp"

namespace {

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bioadv::Error(std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: robustness_table <train.conll> <test.conll> [seed]\n";
    return 2;
  }
  try {
    const std::uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 13;
    const auto train = bioadv::parse_ner(slurp(argv[1]), "train");
    const auto test = bioadv::parse_ner(slurp(argv[2]), "test");
    const auto& layout = bioadv::default_layout();

    for (const auto attack : {bioadv::Attack::kKeyboard, bioadv::Attack::kSwap}) {
      bioadv::PerturbSpec spec;
      spec.attack = attack;
      spec.target = bioadv::Target::kGoldEntities;
      spec.seed = seed;
      const std::vector<bioadv::PerturbSpec> specs{spec};

      const auto plain = bioadv::train_memorizing_tagger(train);
      const auto hardened = bioadv::train_memorizing_tagger(bioadv::make_adversarial_training_set(train, spec, layout));
      bioadv::EvalOptions options;
      options.seed = seed;
      options.dataset = "original train";
      std::cout << bioadv::render_report(bioadv::evaluate_ner(plain, test, specs, layout, nullptr, options),
                                         bioadv::ReportFormat::kMarkdown)
                << "\n";
      options.dataset = "train + " + std::string(bioadv::to_string(attack));
      std::cout << bioadv::render_report(bioadv::evaluate_ner(hardened, test, specs, layout, nullptr, options),
                                         bioadv::ReportFormat::kMarkdown)
                << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
