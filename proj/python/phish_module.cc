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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "phish/attack.h"
#include "phish/corpus.h"
#include "phish/hangul.h"
#include "phish/io.h"
#include "phish/lookup.h"
#include "phish/normalize.h"
#include "phish/tokenizer.h"
#include "phish/utf8.h"

namespace py = pybind11;

namespace {

char32_t SingleCharacter(const std::string& s) {
  const std::u32string decoded = phish::utf8::Decode(s);
  if (decoded.size() != 1) {
    throw std::invalid_argument("expected exactly one character, got '" + s +
                                "'");
  }
  return decoded[0];
}

phish::JamoPosition PositionArg(const std::string& name) {
  const auto position = phish::ParsePosition(name);
  if (!position) {
    throw std::invalid_argument("position must be onset, nucleus or coda");
  }
  return *position;
}

phish::AttackMode ModeArg(const std::string& name) {
  const auto mode = phish::ParseAttackMode(name);
  if (!mode) throw std::invalid_argument("mode must be single or dual");
  return *mode;
}

phish::LookupTable TableArg(const std::string& coda_overlap,
                            const std::optional<std::string>& path) {
  phish::CodaOverlap overlap;
  if (coda_overlap == "union") {
    overlap = phish::CodaOverlap::kUnion;
  } else if (coda_overlap == "first-set") {
    overlap = phish::CodaOverlap::kFirstSet;
  } else {
    throw std::invalid_argument("coda_overlap must be union or first-set");
  }
  if (path) return phish::LookupTable::Load(*path, overlap);
  return phish::LookupTable::Default(overlap);
}

phish::Jamo JamoArg(const std::string& position, const std::string& jamo) {
  const phish::JamoPosition p = PositionArg(position);
  const auto j = phish::Jamo::FromDisplayChar(p, SingleCharacter(jamo));
  if (!j) {
    throw std::invalid_argument("'" + jamo + "' is not a " + position +
                                " jamo");
  }
  return *j;
}

py::object Decompose(const std::string& character) {
  const auto s = phish::Decompose(SingleCharacter(character));
  if (!s) return py::none();
  return py::make_tuple(s->onset.ToString(), s->nucleus.ToString(),
                        s->coda.ToString());
}

std::string Compose(const std::string& onset, const std::string& nucleus,
                    const std::string& coda) {
  phish::Syllable s{JamoArg("onset", onset), JamoArg("nucleus", nucleus)};
  if (!coda.empty()) s.coda = JamoArg("coda", coda);
  return phish::utf8::Encode(phish::Compose(s));
}

}  // namespace

PYBIND11_MODULE(_phish, m) {
  m.doc() = "Phonetic jamo substitution attack on Korean text";

  py::register_exception<phish::DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<phish::TableError>(m, "TableError", PyExc_ValueError);

  m.def("decompose", &Decompose, py::arg("character"),
        "(onset, nucleus, coda) of a precomposed syllable, coda '' if "
        "absent; None for any other character.");
  m.def("compose", &Compose, py::arg("onset"), py::arg("nucleus"),
        py::arg("coda") = "");

  m.def(
      "alternatives",
      [](const std::string& position, const std::string& jamo,
         const std::string& coda_overlap) {
        const phish::LookupTable table = TableArg(coda_overlap, std::nullopt);
        std::vector<std::string> out;
        for (const phish::Jamo& j : table.Alternatives(JamoArg(position, jamo))) {
          out.push_back(j.ToString());
        }
        return out;
      },
      py::arg("position"), py::arg("jamo"), py::arg("coda_overlap") = "union");

  m.def(
      "vulnerable_search",
      [](const std::string& text) {
        const phish::AttackPlan plan = phish::VulnerableSearch(
            phish::Segment(text), phish::LookupTable::Default());
        return std::make_tuple(plan.double_indices, plan.single_indices);
      },
      py::arg("text"),
      "Unit indices of syllables with two or more substitutable jamos and "
      "with exactly one.");

  py::class_<phish::AttackOutcome>(m, "AttackOutcome")
      .def_readonly("perturbed_text", &phish::AttackOutcome::perturbed_text)
      .def_readonly("vulnerable", &phish::AttackOutcome::vulnerable)
      .def_readonly("attacked", &phish::AttackOutcome::attacked)
      .def_property_readonly(
          "substitutions",
          [](const phish::AttackOutcome& o) {
            std::vector<std::tuple<std::size_t, std::string, std::string,
                                   std::string>>
                out;
            for (const phish::Substitution& s : o.substitutions) {
              out.emplace_back(s.unit_index,
                               std::string(phish::PositionName(s.position)),
                               s.original.ToString(), s.replacement.ToString());
            }
            return out;
          })
      .def("__repr__", [](const phish::AttackOutcome& o) {
        return "AttackOutcome(perturbed_text='" + o.perturbed_text +
               "', vulnerable=" + std::to_string(o.vulnerable) +
               ", attacked=" + std::to_string(o.attacked) + ")";
      });

  m.def(
      "phish",
      [](const std::string& text, double ratio, const std::string& mode,
         std::uint64_t seed, const std::string& coda_overlap,
         const std::optional<std::string>& lookup_table) {
        return phish::Phish(text, {ratio, ModeArg(mode), seed},
                            TableArg(coda_overlap, lookup_table));
      },
      py::arg("text"), py::arg("ratio"), py::arg("mode") = "single",
      py::arg("seed") = 0, py::arg("coda_overlap") = "union",
      py::arg("lookup_table") = py::none());

  m.def(
      "canonicalize",
      [](const std::string& text) { return phish::Canonicalize(text).text; },
      py::arg("text"));
  m.def(
      "transcribe",
      [](const std::string& text) { return phish::Transcribe(text).phones; },
      py::arg("text"));
  m.def(
      "inspect",
      [](const std::string& text) { return phish::Inspect(text); },
      py::arg("text"));

  py::class_<phish::Vocabulary>(m, "Vocabulary")
      .def(py::init([](std::vector<std::string> tokens,
                       const std::string& unk_token) {
             phish::VocabularyOptions options;
             options.unk_token = unk_token;
             return phish::Vocabulary::FromTokens(std::move(tokens), options);
           }),
           py::arg("tokens"), py::arg("unk_token") = "[UNK]")
      .def_static(
          "load",
          [](const std::string& path, const std::string& unk_token) {
            phish::VocabularyOptions options;
            options.unk_token = unk_token;
            return phish::Vocabulary::Load(path, options);
          },
          py::arg("path"), py::arg("unk_token") = "[UNK]")
      .def("__len__", &phish::Vocabulary::size)
      .def("__contains__", &phish::Vocabulary::Contains);

  m.def(
      "tokenize",
      [](const std::string& text, const phish::Vocabulary& vocab) {
        return phish::Tokenize(text, vocab);
      },
      py::arg("text"), py::arg("vocab"));

  py::class_<phish::UnkReport>(m, "UnkReport")
      .def_readonly("per_text_rate", &phish::UnkReport::per_text_rate)
      .def_readonly("mean", &phish::UnkReport::mean)
      .def_readonly("std", &phish::UnkReport::std);

  m.def(
      "unk_report",
      [](const std::vector<std::string>& texts, const phish::Vocabulary& vocab) {
        return phish::ComputeUnkReport(texts, vocab);
      },
      py::arg("texts"), py::arg("vocab"),
      "Percentage of [UNK] tokens per text, with mean and population std.");
}
