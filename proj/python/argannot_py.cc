#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "argannot/agreement.h"
#include "argannot/analysis.h"
#include "argannot/annotation.h"
#include "argannot/corpus.h"
#include "argannot/error.h"
#include "argannot/format.h"
#include "argannot/scheme.h"

namespace py = pybind11;
using namespace pybind11::literals;

namespace argannot {
namespace {

py::dict SegmentDict(const Segment &s) {
  return py::dict("id"_a = s.id, "paragraph"_a = s.paragraph_index,
                  "sentence"_a = s.sentence_index, "start"_a = s.span.begin,
                  "end"_a = s.span.end, "text"_a = s.text);
}

template <typename Finding, typename NameFn>
py::list FindingList(const std::vector<Finding> &findings, NameFn name) {
  py::list out;
  for (const Finding &f : findings) {
    out.append(py::dict("code"_a = std::string(name(f.code)),
                        "location"_a = f.location, "message"_a = f.message));
  }
  return out;
}

KappaLevel ParseKappaLevel(const std::string &name) {
  for (KappaLevel level :
       {KappaLevel::kArg, KappaLevel::kDomainMain, KappaLevel::kDomainSub}) {
    if (Render(level) == name) return level;
  }
  throw Error(ErrorCode::kUnknownLabel, "no kappa level '" + name + "'");
}

LabelSet MakeLabels(const std::string &arg, const std::string &rhet,
                    const std::string &domain) {
  return {ParseArgLabel(arg), ParseRhetLabel(rhet), ParseDomainLabel(domain)};
}

void DeclareDocument(py::module_ &m) {
  py::class_<Document>(m, "Document")
      .def_property_readonly("id", &Document::id)
      .def_property_readonly("title", &Document::title)
      .def_property_readonly("source_text", &Document::SourceUtf8)
      .def_property_readonly("num_segments", &Document::num_segments)
      .def_property_readonly("num_paragraphs",
                             [](const Document &d) { return d.paragraphs().size(); })
      .def("segments",
           [](const Document &d) {
             py::list out;
             for (const Segment *s : d.segments()) out.append(SegmentDict(*s));
             return out;
           })
      .def("segment", [](const Document &d,
                         const std::string &id) { return SegmentDict(d.Get(id)); })
      .def("to_json", &SaveDocument)
      .def("__len__", &Document::num_segments)
      .def("__eq__", [](const Document &a, const Document &b) { return a == b; })
      .def("__repr__", [](const Document &d) {
        return "<Document " + d.id() + ": " + std::to_string(d.num_segments()) +
               " segments>";
      });
}

void DeclareLayer(py::module_ &m) {
  py::class_<AnnotationLayer>(m, "Layer")
      .def(py::init<std::string, std::string>(), "document_id"_a, "annotator"_a)
      .def_property_readonly("document_id", &AnnotationLayer::document_id)
      .def_property_readonly("annotator", &AnnotationLayer::annotator)
      .def("set_labels",
           [](AnnotationLayer &l, const Document &doc, const std::string &id,
              const std::string &arg, const std::string &rhet,
              const std::string &domain) {
             l.SetLabels(doc, id, MakeLabels(arg, rhet, domain));
           },
           "doc"_a, "segment_id"_a, "arg"_a = "None", "rhet"_a = "None",
           "domain"_a = "None")
      .def("clear_labels", &AnnotationLayer::ClearLabels, "doc"_a, "segment_id"_a)
      .def("add_relation",
           [](AnnotationLayer &l, const Document &doc, const std::string &src,
              const std::string &tgt, const std::string &kind) {
             l.AddRelation(doc, src, tgt, ParseRelationKind(kind));
           },
           "doc"_a, "src"_a, "tgt"_a, "kind"_a = "Support")
      .def("remove_relation", &AnnotationLayer::RemoveRelation, "src"_a, "tgt"_a)
      .def("add_elaboration", &AnnotationLayer::AddElaboration, "doc"_a, "src"_a,
           "tgt"_a)
      .def("remove_elaboration", &AnnotationLayer::RemoveElaboration, "src"_a)
      .def("labels",
           [](const AnnotationLayer &l) {
             py::dict out;
             for (const auto &[id, labels] : l.labels()) {
               out[py::str(id)] = py::dict(
                   "arg"_a = std::string(Render(labels.arg)),
                   "rhet"_a = std::string(Render(labels.rhet)),
                   "domain"_a = std::string(Render(labels.domain)));
             }
             return out;
           })
      .def("relations",
           [](const AnnotationLayer &l) {
             py::list out;
             for (const ArgRelation &r : l.relations()) {
               out.append(py::make_tuple(r.src, r.tgt, std::string(Render(r.kind))));
             }
             return out;
           })
      .def("elaborations",
           [](const AnnotationLayer &l) {
             py::list out;
             for (const ElaborationEdge &e : l.elaborations()) {
               out.append(py::make_tuple(e.src, e.tgt));
             }
             return out;
           })
      .def("to_json", &SerializeLayer)
      .def("__eq__", [](const AnnotationLayer &a, const AnnotationLayer &b) {
        return a == b;
      });
}

}  // namespace
}  // namespace argannot

PYBIND11_MODULE(_argannot, m) {
  using namespace argannot;
  m.doc() = "Segmentation, validation, agreement and reporting for argument layers";
  m.attr("SCHEME_VERSION") = std::string(kSchemeVersion);

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  DeclareDocument(m);
  DeclareLayer(m);

  m.def(
      "segment_text",
      [](const std::string &text, const std::string &doc_id,
         const std::string &title,
         const std::optional<std::vector<std::string>> &abbreviations,
         bool split_semicolons, bool split_colons, bool split_dashes) {
        AbbreviationSet abbrevs = DefaultAbbreviations();
        if (abbreviations) abbrevs = {abbreviations->begin(), abbreviations->end()};
        SegmentationOptions options;
        options.split_semicolons = split_semicolons;
        options.split_colons = split_colons;
        options.split_dashes = split_dashes;
        return SegmentText(text, abbrevs, options, doc_id, title);
      },
      "text"_a, "doc_id"_a = "doc", "title"_a = "", "abbreviations"_a = py::none(),
      "split_semicolons"_a = true, "split_colons"_a = true, "split_dashes"_a = true);
  m.def("split_segment", &SplitSegment, "doc"_a, "segment_id"_a, "offset"_a);
  m.def("merge_segments", &MergeSegments, "doc"_a, "left_id"_a, "right_id"_a);
  m.def("load_document", [](const std::string &s) { return LoadDocument(s); },
        "json"_a);
  m.def("text_descriptives", [](const Document &doc) {
    TextDescriptives t = ComputeTextDescriptives(doc);
    return py::dict("n_sentences"_a = t.n_sentences, "n_words"_a = t.n_words,
                    "n_distinct_words"_a = t.n_distinct_words);
  });

  m.def(
      "load_layer",
      [](const std::string &json, const Document *doc) {
        return doc ? LoadLayer(json, *doc) : ParseLayer(json);
      },
      "json"_a, "doc"_a = nullptr);
  m.def("validate", [](const AnnotationLayer &l, const Document &doc) {
    return FindingList(Validate(l, doc), ViolationCodeName);
  });
  m.def("lint", [](const AnnotationLayer &l, const Document &doc) {
    return FindingList(Lint(l, doc), LintCodeName);
  });

  m.def("diff", [](const AnnotationLayer &a, const AnnotationLayer &b,
                   const Document &doc) {
    py::list out;
    for (const Disagreement &d : DiffLayers(a, b, doc)) {
      out.append(py::dict("kind"_a = std::string(Render(d.kind)),
                          "location"_a = d.location, "value_a"_a = d.value_a,
                          "value_b"_a = d.value_b));
    }
    return out;
  });
  m.def("disagreement_summary", [](const AnnotationLayer &a,
                                   const AnnotationLayer &b, const Document &doc) {
    DisagreementSummary s = SummarizeDisagreements(DiffLayers(a, b, doc), doc);
    py::dict counts;
    for (size_t k = 0; k < kNumDisagreementKinds; ++k) {
      counts[py::str(std::string(Render(static_cast<DisagreementKind>(k))))] =
          s.counts[k];
    }
    return py::dict("counts"_a = counts, "total"_a = s.total,
                    "n_segments"_a = s.n_segments,
                    "domain_disagreements"_a = s.domain_disagreements,
                    "domain_rate_pct"_a = s.domain_rate_pct);
  });
  m.def(
      "cohens_kappa",
      [](const AnnotationLayer &a, const AnnotationLayer &b,
         const std::string &level) {
        KappaResult r = CohensKappa(a, b, ParseKappaLevel(level));
        return py::dict("kappa"_a = r.kappa, "observed"_a = r.observed,
                        "expected"_a = r.expected, "n_items"_a = r.n_items,
                        "n_excluded"_a = r.n_excluded);
      },
      "a"_a, "b"_a, "level"_a = "arg");
  m.def(
      "merge",
      [](const AnnotationLayer &a, const AnnotationLayer &b,
         const std::string &resolutions, const Document &doc,
         const std::string &annotator) {
        std::vector<Resolution> parsed;
        if (!resolutions.empty()) parsed = ParseResolutions(resolutions);
        return SerializeGold(Merge(a, b, parsed, doc, annotator));
      },
      "a"_a, "b"_a, "resolutions"_a, "doc"_a, "annotator"_a = "gold");
  m.def(
      "render_diff",
      [](const AnnotationLayer &a, const AnnotationLayer &b, const Document &doc,
         const std::string &format) {
        return RenderDiffReport(a, b, doc, ParseOutputFormat(format));
      },
      "a"_a, "b"_a, "doc"_a, "format"_a = "json");
  m.def(
      "report",
      [](const Document &doc, const AnnotationLayer &layer,
         const std::string &format) {
        return RenderReport(FullReport(doc, layer), ParseOutputFormat(format));
      },
      "doc"_a, "layer"_a, "format"_a = "json");
  m.def("scheme_catalog", &RenderCatalogJson);
}
