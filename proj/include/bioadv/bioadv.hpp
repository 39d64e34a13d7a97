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

// Convenience header pulling in the whole library except the CLI.

#pragma once

#include "bioadv/corpus.hpp"
#include "bioadv/error.hpp"
#include "bioadv/harness.hpp"
#include "bioadv/keyboard.hpp"
#include "bioadv/lexicon.hpp"
#include "bioadv/metrics.hpp"
#include "bioadv/models.hpp"
#include "bioadv/perturb.hpp"
#include "bioadv/remote.hpp"
#include "bioadv/rng.hpp"
#include "bioadv/text.hpp"
