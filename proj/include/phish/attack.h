// Copyright 2026 The phish Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Phonetic substitution attack on Hangul text.
//
// A syllable is vulnerable when at least one of its jamos has alternatives
// in the lookup table. Vulnerable syllables with two or more substitutable
// jamos are "double" targets, those with exactly one are "single" targets.
// Phish() shuffles both target lists, drains the double list first and then
// the single list, attacking one syllable at a time until the attacked
// fraction of vulnerable syllables reaches the requested ratio.
//
// Random draws happen in this order, all from one Rng seeded with
// PerturbationConfig::seed: shuffle double targets, shuffle single targets,
// then for each attacked syllable shuffle its jamo list and make one
// Uniform() draw per substituted jamo.

#ifndef PHISH_ATTACK_H_
#define PHISH_ATTACK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phish/hangul.h"
#include "phish/lookup.h"
#include "phish/random.h"

namespace phish {

enum class AttackMode { kSingle, kDual };

// Jamos substituted per attacked syllable: 1 for single, 2 for dual.
int JamoBudget(AttackMode mode);
std::string_view AttackModeName(AttackMode mode);
std::optional<AttackMode> ParseAttackMode(std::string_view name);

struct PerturbationConfig {
  double ratio = 0.0;  // fraction of vulnerable syllables, in [0, 1]
  AttackMode mode = AttackMode::kSingle;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument unless 0 <= ratio <= 1.
void ValidateRatio(double ratio);

struct AttackPlan {
  std::vector<std::size_t> double_indices;
  std::vector<std::size_t> single_indices;

  std::size_t vulnerable_count() const {
    return double_indices.size() + single_indices.size();
  }
};

struct Substitution {
  std::size_t unit_index = 0;
  JamoPosition position = JamoPosition::kOnset;
  Jamo original;
  Jamo replacement;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct AttackOutcome {
  std::string perturbed_text;
  std::size_t vulnerable = 0;  // n_V
  std::size_t attacked = 0;    // n_A
  // In attack order; all substitutions of one syllable are adjacent.
  std::vector<Substitution> substitutions;

  std::vector<std::size_t> AttackedUnits() const;

  friend bool operator==(const AttackOutcome&, const AttackOutcome&) = default;
};

// Number of jamos of `syllable` that have alternatives.
int SubstitutableCount(const Syllable& syllable, const LookupTable& table);

// Indices (ascending) of syllable units with >= 2 and exactly 1
// substitutable jamos. Non-syllable units are skipped.
AttackPlan VulnerableSearch(std::span<const TextUnit> units,
                            const LookupTable& table);

// Substitutes up to JamoBudget(mode) jamos of `syllable`, each with a
// uniformly drawn alternative, visiting jamos in shuffled order. Records the
// changes in `changes` when non-null (unit_index is left 0).
// Throws std::invalid_argument if no jamo is substitutable.
Syllable AttackSyllable(const Syllable& syllable, AttackMode mode,
                        const LookupTable& table, Rng& rng,
                        std::vector<Substitution>* changes = nullptr);

// Number of syllables Phish() attacks for `vulnerable` targets: the first
// count n with n / vulnerable >= ratio evaluated in double precision, capped
// at `vulnerable`. Equals min(ceil(ratio * vulnerable), vulnerable) whenever
// ratio * vulnerable is computed exactly.
std::size_t ExpectedAttackCount(double ratio, std::size_t vulnerable);

AttackOutcome Phish(std::string_view text, const PerturbationConfig& config,
                    const LookupTable& table = LookupTable::Default());

}  // namespace phish

#endif  // PHISH_ATTACK_H_
