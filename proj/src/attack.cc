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

#include "phish/attack.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace phish {
namespace {

// The loop guard of the attack, kept in one place so ExpectedAttackCount()
// and Phish() cannot drift apart.
bool BelowRatio(std::size_t attacked, std::size_t vulnerable, double ratio) {
  return static_cast<double>(attacked) / static_cast<double>(vulnerable) <
         ratio;
}

}  // namespace

int JamoBudget(AttackMode mode) { return mode == AttackMode::kSingle ? 1 : 2; }

std::string_view AttackModeName(AttackMode mode) {
  return mode == AttackMode::kSingle ? "single" : "dual";
}

std::optional<AttackMode> ParseAttackMode(std::string_view name) {
  if (name == "single") return AttackMode::kSingle;
  if (name == "dual") return AttackMode::kDual;
  return std::nullopt;
}

void ValidateRatio(double ratio) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw std::invalid_argument("perturbation ratio must be in [0, 1], got " +
                                std::to_string(ratio));
  }
}

std::vector<std::size_t> AttackOutcome::AttackedUnits() const {
  std::vector<std::size_t> units;
  for (const Substitution& s : substitutions) {
    if (units.empty() || units.back() != s.unit_index) {
      units.push_back(s.unit_index);
    }
  }
  return units;
}

int SubstitutableCount(const Syllable& syllable, const LookupTable& table) {
  int count = 0;
  for (const Jamo& j : syllable.PresentJamos()) {
    if (table.IsSubstitutable(j)) ++count;
  }
  return count;
}

AttackPlan VulnerableSearch(std::span<const TextUnit> units,
                            const LookupTable& table) {
  AttackPlan plan;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!units[i].IsSyllable()) continue;
    const int c = SubstitutableCount(units[i].syllable(), table);
    if (c >= 2) {
      plan.double_indices.push_back(i);
    } else if (c == 1) {
      plan.single_indices.push_back(i);
    }
  }
  return plan;
}

Syllable AttackSyllable(const Syllable& syllable, AttackMode mode,
                        const LookupTable& table, Rng& rng,
                        std::vector<Substitution>* changes) {
  if (SubstitutableCount(syllable, table) == 0) {
    throw std::invalid_argument("syllable has no substitutable jamo");
  }
  const int budget = JamoBudget(mode);
  std::vector<Jamo> jamos = syllable.PresentJamos();
  rng.Shuffle(std::span<Jamo>(jamos));

  Syllable result = syllable;
  int substituted = 0;
  for (const Jamo& j : jamos) {
    const auto alternatives = table.Alternatives(j);
    if (!alternatives.empty()) {
      const Jamo replacement = alternatives[rng.Uniform(alternatives.size())];
      result.at(j.position) = replacement;
      if (changes != nullptr) {
        changes->push_back({0, j.position, j, replacement});
      }
      ++substituted;
    }
    if (substituted == budget) break;
  }
  return result;
}

std::size_t ExpectedAttackCount(double ratio, std::size_t vulnerable) {
  ValidateRatio(ratio);
  if (vulnerable == 0) return 0;
  // Start near the closed form, then settle on the exact guard boundary.
  auto n = static_cast<std::size_t>(
      std::ceil(ratio * static_cast<double>(vulnerable)));
  if (n > vulnerable) n = vulnerable;
  while (n > 0 && !BelowRatio(n - 1, vulnerable, ratio)) --n;
  while (n < vulnerable && BelowRatio(n, vulnerable, ratio)) ++n;
  return n;
}

AttackOutcome Phish(std::string_view text, const PerturbationConfig& config,
                    const LookupTable& table) {
  ValidateRatio(config.ratio);
  std::vector<TextUnit> units = Segment(text);
  AttackPlan plan = VulnerableSearch(units, table);

  Rng rng(config.seed);
  rng.Shuffle(std::span<std::size_t>(plan.double_indices));
  rng.Shuffle(std::span<std::size_t>(plan.single_indices));

  AttackOutcome outcome;
  outcome.vulnerable = plan.vulnerable_count();
  if (outcome.vulnerable > 0) {
    // Targets are popped from the back of each shuffled list.
    auto drain = [&](std::vector<std::size_t>& targets) {
      while (!targets.empty() &&
             BelowRatio(outcome.attacked, outcome.vulnerable, config.ratio)) {
        const std::size_t i = targets.back();
        targets.pop_back();
        const std::size_t first_change = outcome.substitutions.size();
        Syllable& syllable = units[i].syllable();
        syllable = AttackSyllable(syllable, config.mode, table, rng,
                                  &outcome.substitutions);
        for (std::size_t k = first_change; k < outcome.substitutions.size();
             ++k) {
          outcome.substitutions[k].unit_index = i;
        }
        ++outcome.attacked;
      }
    };
    drain(plan.double_indices);
    drain(plan.single_indices);
  }
  outcome.perturbed_text = Serialize(units);
  return outcome;
}

}  // namespace phish
