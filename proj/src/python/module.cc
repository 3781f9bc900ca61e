//
// Copyright 2026 The lexsimp Authors
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
//

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lexsimp/cli.h"
#include "lexsimp/corpus.h"
#include "lexsimp/embeddings.h"
#include "lexsimp/morphology.h"
#include "lexsimp/pairenc.h"
#include "lexsimp/paraphrase.h"
#include "lexsimp/resources.h"
#include "lexsimp/simplify.h"
#include "lexsimp/sweep.h"
#include "lexsimp/text.h"

namespace py = pybind11;

namespace lexsimp {
namespace {

std::string LemmatizeWord(const Resources& res, const std::string& word,
                          const std::string& pos) {
  Token token;
  token.surface = word;
  token.key = ToLower(word);
  if (pos == "NOUN") {
    token.coarse_tag = CoarseTag::kNoun;
  } else if (pos == "VERB") {
    token.coarse_tag = CoarseTag::kVerb;
  } else {
    throw py::value_error("pos must be NOUN or VERB");
  }
  return Lemmatize(token, res.lexicons, res.frequency);
}

py::dict RecordToDict(const PairRecord& record) {
  return py::module_::import("json").attr("loads")(FormatRecord(record));
}

py::tuple Cli(const std::vector<std::string>& args, const std::string& stdin_text) {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int code;
  {
    py::gil_scoped_release release;
    code = RunCli(args, in, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace lexsimp

PYBIND11_MODULE(_core, m) {
  using namespace lexsimp;
  m.doc() = "Rule-based lexical simplification";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<Resources>(m, "Resources")
      .def_property_readonly("vocabulary_size",
                             [](const Resources& r) { return r.frequency.size(); })
      .def_property_readonly("embedding_size",
                             [](const Resources& r) { return r.embeddings.size(); })
      .def_property_readonly("embedding_dim",
                             [](const Resources& r) { return r.embeddings.dim(); })
      .def("frequency",
           [](const Resources& r, const std::string& w) { return r.frequency.Frequency(w); });

  m.def(
      "load_resources",
      [](const std::string& freq, const std::string& emb, const std::string& tags,
         const std::string& noun_exc, const std::string& verb_exc) {
        return LoadResources({freq, emb, tags, noun_exc, verb_exc});
      },
      py::arg("freq"), py::arg("emb") = "", py::arg("tags") = "",
      py::arg("noun_exc") = "", py::arg("verb_exc") = "");

  py::class_<SimplifyConfig>(m, "SimplifyConfig")
      .def(py::init([](Count n_f, std::size_t n_s, const std::string& mode,
                       bool require_gain, bool preserve_case) {
             SimplifyConfig cfg;
             cfg.n_f = n_f;
             cfg.n_s = n_s;
             cfg.mode = ParseSimplifyMode(mode);
             cfg.require_gain = require_gain;
             cfg.preserve_case = preserve_case;
             cfg.Validate();
             return cfg;
           }),
           py::arg("n_f") = 1000, py::arg("n_s") = 10, py::arg("mode") = "lrls",
           py::arg("require_gain") = true, py::arg("preserve_case") = true)
      .def_readonly("n_f", &SimplifyConfig::n_f)
      .def_readonly("n_s", &SimplifyConfig::n_s)
      .def_property_readonly("mode", [](const SimplifyConfig& c) {
        return std::string(SimplifyModeName(c.mode));
      });

  py::class_<Replacement>(m, "Replacement")
      .def_readonly("position", &Replacement::position)
      .def_readonly("original", &Replacement::original)
      .def_readonly("replacement", &Replacement::replacement)
      .def_readonly("original_freq", &Replacement::original_freq)
      .def_readonly("replacement_freq", &Replacement::replacement_freq)
      .def_readonly("similarity", &Replacement::similarity);

  py::class_<SimplifyResult>(m, "SimplifyResult")
      .def_readonly("text", &SimplifyResult::text)
      .def_readonly("replacements", &SimplifyResult::replacements)
      .def_readonly("lemma_changes", &SimplifyResult::lemma_changes)
      .def_property_readonly("tokens", [](const SimplifyResult& r) {
        std::vector<std::string> out;
        for (const Token& t : r.tokens) out.push_back(t.surface);
        return out;
      });

  py::class_<Simplifier>(m, "Simplifier")
      .def(py::init([](const Resources& r, const SimplifyConfig& cfg) {
             return std::make_unique<Simplifier>(r, cfg);
           }),
           py::arg("resources"), py::arg("config") = SimplifyConfig{},
           py::keep_alive<1, 2>())
      .def("simplify", &Simplifier::Simplify, py::arg("sentence"))
      .def(
          "simplify_batch",
          [](const Simplifier& s, const std::vector<std::string>& sentences,
             std::size_t threads) {
            py::gil_scoped_release release;
            return s.SimplifyBatch(sentences, threads);
          },
          py::arg("sentences"), py::arg("threads") = 1);

  m.def(
      "top_k_synonyms",
      [](const Resources& r, const std::string& word, std::size_t k) {
        py::list out;
        for (const SynonymCandidate& c :
             TopKSynonyms(r.embeddings, word, k, &r.frequency, &r.lexicons)) {
          out.append(py::make_tuple(c.word, c.similarity, c.frequency, c.fine_tag));
        }
        return out;
      },
      py::arg("resources"), py::arg("word"), py::arg("k"));

  m.def("lemmatize", &LemmatizeWord, py::arg("resources"), py::arg("word"),
        py::arg("pos"));

  m.def(
      "paraphrase",
      [](const Resources& r, const std::string& sentence, const std::string& method,
         std::size_t k, double p, std::uint64_t seed, std::size_t n_s) {
        ParaphraseConfig cfg;
        cfg.method = ParseParaphraseMethod(method);
        cfg.k = k;
        cfg.p = p;
        cfg.seed = seed;
        cfg.n_s = n_s;
        return Paraphraser(r, cfg).Paraphrase(sentence, seed);
      },
      py::arg("resources"), py::arg("sentence"), py::arg("method") = "random_replace",
      py::arg("k") = 1, py::arg("p") = 0.1, py::arg("seed") = 0, py::arg("n_s") = 10);

  m.def(
      "make_record",
      [](const std::string& text, const std::string& label, std::size_t id,
         const SimplifyResult& simplified) {
        return RecordToDict(MakeRecord({text, label, id}, simplified));
      },
      py::arg("text"), py::arg("label"), py::arg("id"), py::arg("simplified"));

  m.def(
      "run_sweep",
      [](const Resources& r, const std::vector<std::string>& sentences,
         const std::vector<Count>& nf_grid, const std::vector<std::size_t>& ns_grid) {
        Dataset data;
        for (std::size_t i = 0; i < sentences.size(); ++i) {
          data.examples.push_back({sentences[i], "", i});
        }
        py::list out;
        for (const SweepPoint& p : RunSweep(data, nf_grid, ns_grid, r)) {
          py::dict row;
          row["n_f"] = p.n_f;
          row["n_s"] = p.n_s;
          row["replaced_fraction"] = p.replaced_fraction;
          row["lemma_fraction"] = p.lemma_fraction;
          row["mean_similarity"] = p.mean_similarity;
          row["mean_freq_gain"] = p.mean_freq_gain;
          out.append(row);
        }
        return out;
      },
      py::arg("resources"), py::arg("sentences"), py::arg("nf_grid"),
      py::arg("ns_grid"));

  m.def("run_cli", &Cli, py::arg("args"), py::arg("stdin") = "",
        "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
