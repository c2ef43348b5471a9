# Copyright 2026 The phish Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Phonetic jamo substitution attack on Korean text."""

from phish._phish import (
    AttackOutcome,
    DataError,
    TableError,
    UnkReport,
    Vocabulary,
    alternatives,
    canonicalize,
    compose,
    decompose,
    inspect,
    phish,
    tokenize,
    transcribe,
    unk_report,
    vulnerable_search,
)

__version__ = "0.1.0"

__all__ = [
    "AttackOutcome",
    "DataError",
    "TableError",
    "UnkReport",
    "Vocabulary",
    "alternatives",
    "canonicalize",
    "compose",
    "decompose",
    "inspect",
    "phish",
    "tokenize",
    "transcribe",
    "unk_report",
    "vulnerable_search",
]
