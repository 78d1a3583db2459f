#include "argannot/store.h"

#include <atomic>
#include <functional>
#include <thread>

#include "doctest.h"
#include "fixtures.h"
#include "json.hpp"

using namespace argannot;
using argannot::testing::TempDir;

namespace {

Document Doc() {
  return SegmentText("A holds. B holds.\n\nC holds. D holds.",
                     DefaultAbbreviations(), {}, "d");
}

LabelSet Claim(DomainLabel domain = DomainLabel::kTheoryStatement) {
  return {ArgLabel::kClaim, RhetLabel::kNone, domain};
}

std::string LayerBytes(const Document &doc, const std::string &annotator,
                       DomainLabel domain = DomainLabel::kTheoryStatement) {
  AnnotationLayer layer(doc.id(), annotator);
  layer.SetLabels(doc, "d-0001", Claim(domain));
  layer.SetLabels(doc, "d-0002", Claim());
  layer.AddRelation(doc, "d-0002", "d-0001", RelationKind::kSupport);
  return SerializeLayer(layer);
}

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kIoError;
}

struct Fixture {
  TempDir dir;
  CorpusStore store{dir.path()};
  Document doc = Doc();
  Fixture() { store.PutDocument(doc); }
};

}  // namespace

TEST_CASE("documents round-trip through the store") {
  Fixture f;
  CHECK(f.store.HasDocument("d"));
  CHECK_FALSE(f.store.HasDocument("e"));
  CHECK(f.store.GetDocument("d") == f.doc);
  CHECK(f.store.GetDocumentBytes("d") == SaveDocument(f.doc));
  std::vector<DocumentInfo> docs = f.store.ListDocuments();
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].id == "d");
  CHECK(docs[0].n_paragraphs == 2);
  CHECK(docs[0].n_segments == 4);
  CHECK(CodeOf([&] { f.store.GetDocument("missing"); }) == ErrorCode::kNotFound);
}

TEST_CASE("a document file naming another id is refused") {
  Fixture f;
  WriteFileAtomic(f.dir.path() / "documents" / "other.json", SaveDocument(f.doc));
  CHECK(CodeOf([&] { f.store.GetDocument("other"); }) ==
        ErrorCode::kDocumentMismatch);
}

TEST_CASE("layer revisions advance and stale writes conflict") {
  Fixture f;
  CHECK(f.store.Revision("d", "ann1") == 0);
  CHECK_FALSE(f.store.GetLayer("d", "ann1").has_value());
  CHECK(f.store.PutLayer("d", "ann1", LayerBytes(f.doc, "ann1"), 0) == 1);
  CHECK(f.store.PutLayer("d", "ann1", LayerBytes(f.doc, "ann1"), 1) == 2);
  CHECK(CodeOf([&] {
          f.store.PutLayer("d", "ann1", LayerBytes(f.doc, "ann1"), 1);
        }) == ErrorCode::kConflict);
  CHECK(f.store.Revision("d", "ann1") == 2);

  auto stored = f.store.GetLayer("d", "ann1");
  REQUIRE(stored.has_value());
  CHECK(stored->revision == 2);
  CHECK(stored->bytes == LayerBytes(f.doc, "ann1"));
  CHECK(stored->layer.annotator() == "ann1");

  f.store.PutLayer("d", "ann0", LayerBytes(f.doc, "ann0"), 0);
  std::vector<LayerInfo> layers = f.store.ListLayers("d");
  REQUIRE(layers.size() == 2);
  CHECK(layers[0].annotator == "ann0");
  CHECK(layers[0].revision == 1);
  CHECK(layers[1].annotator == "ann1");
  CHECK(layers[1].revision == 2);
}

TEST_CASE("a layer without a revision file counts as revision 1") {
  Fixture f;
  std::filesystem::create_directories(f.dir.path() / "layers" / "d");
  WriteFileAtomic(f.dir.path() / "layers" / "d" / "ann1.json",
                  LayerBytes(f.doc, "ann1"));
  CHECK(f.store.Revision("d", "ann1") == 1);
  CHECK(CodeOf([&] {
          f.store.PutLayer("d", "ann1", LayerBytes(f.doc, "ann1"), 0);
        }) == ErrorCode::kConflict);
  CHECK(f.store.PutLayer("d", "ann1", LayerBytes(f.doc, "ann1"), 1) == 2);
}

TEST_CASE("invalid layers are rejected with their violations") {
  Fixture f;
  AnnotationLayer layer(f.doc.id(), "ann1");
  layer.RawSetLabels("d-0001", Claim());
  layer.RawSetLabels("d-0003", Claim());
  layer.RawAddRelation({"d-0003", "d-0001", RelationKind::kSupport});
  try {
    f.store.PutLayer("d", "ann1", SerializeLayer(layer), 0);
    FAIL("expected LayerRejected");
  } catch (const LayerRejected &e) {
    CHECK(e.code() == ErrorCode::kValidationError);
    REQUIRE(e.violations().size() == 1);
    CHECK(e.violations()[0].code == ViolationCode::kCrossParagraph);
    CHECK(std::string(e.what()).find("1 violation") != std::string::npos);
  }
  CHECK(f.store.Revision("d", "ann1") == 0);
  CHECK_FALSE(std::filesystem::exists(f.dir.path() / "layers" / "d" / "ann1.json"));
}

TEST_CASE("layer identity must match the request") {
  Fixture f;
  CHECK(CodeOf([&] {
          f.store.PutLayer("d", "ann2", LayerBytes(f.doc, "ann1"), 0);
        }) == ErrorCode::kDocumentMismatch);
  CHECK(CodeOf([&] {
          f.store.PutLayer("d", "gold", LayerBytes(f.doc, "gold"), 0);
        }) == ErrorCode::kDocumentMismatch);
  Document other = SegmentText("X holds.", DefaultAbbreviations(), {}, "e");
  f.store.PutDocument(other);
  CHECK(CodeOf([&] {
          f.store.PutLayer("e", "ann1", LayerBytes(f.doc, "ann1"), 0);
        }) == ErrorCode::kDocumentMismatch);
  CHECK(CodeOf([&] { f.store.PutLayer("d", "ann1", "{", 0); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("unsafe ids never reach the file system") {
  CHECK(CorpusStore::IsSafeId("chapter-6_v2.draft"));
  CHECK_FALSE(CorpusStore::IsSafeId(""));
  CHECK_FALSE(CorpusStore::IsSafeId(".hidden"));
  CHECK_FALSE(CorpusStore::IsSafeId("../etc"));
  CHECK_FALSE(CorpusStore::IsSafeId("a/b"));
  CHECK_FALSE(CorpusStore::IsSafeId("a b"));
  CHECK_FALSE(CorpusStore::IsSafeId(std::string(201, 'a')));
  Fixture f;
  CHECK_FALSE(f.store.HasDocument("../d"));
  CHECK(CodeOf([&] { f.store.GetDocument("../documents/d"); }) ==
        ErrorCode::kNotFound);
  CHECK(CodeOf([&] { f.store.GetLayer("d", "../../x"); }) ==
        ErrorCode::kNotFound);
}

TEST_CASE("gold layers are merged, stored and reported") {
  Fixture f;
  f.store.PutLayer("d", "ann1", LayerBytes(f.doc, "ann1"), 0);
  f.store.PutLayer("d", "ann2",
                   LayerBytes(f.doc, "ann2", DomainLabel::kDataEvaluative), 0);
  CHECK_FALSE(f.store.GetGoldBytes("d").has_value());
  CHECK(CodeOf([&] { f.store.GetNamedLayer("d", "gold"); }) ==
        ErrorCode::kNotFound);

  AnnotationLayer a = f.store.GetNamedLayer("d", "ann1");
  AnnotationLayer b = f.store.GetNamedLayer("d", "ann2");
  std::string resolutions = SerializeResolutions(
      argannot::testing::ResolveAll(a, b, f.doc, ResolutionChoice::kB));
  std::string gold = f.store.CreateGold("d", "ann1", "ann2", resolutions);
  CHECK(f.store.GetGoldBytes("d") == gold);
  AnnotationLayer stored = f.store.GetNamedLayer("d", "gold");
  CHECK(stored.Labels("d-0001")->domain == DomainLabel::kDataEvaluative);
  CHECK(DiffLayers(stored, stored, f.doc).empty());

  std::string report = f.store.RenderReport("d", "gold", OutputFormat::kJson);
  CHECK(nlohmann::json::parse(report)["coverage"]["n_claims"] == 2);
  std::string diff = f.store.RenderDiff("d", "ann1", "ann2", OutputFormat::kJson);
  CHECK(diff == RenderDiffReport(a, b, f.doc, OutputFormat::kJson));
}

TEST_CASE("progress counts reviewed segments per paragraph") {
  Fixture f;
  std::vector<ParagraphProgress> none = f.store.Progress("d", "ann1");
  REQUIRE(none.size() == 2);
  CHECK(none[0].reviewed == 0);
  CHECK(none[0].total == 2);
  f.store.PutLayer("d", "ann1", LayerBytes(f.doc, "ann1"), 0);
  std::vector<ParagraphProgress> some = f.store.Progress("d", "ann1");
  CHECK(some[0].index == 0);
  CHECK(some[0].reviewed == 2);
  CHECK(some[1].index == 1);
  CHECK(some[1].reviewed == 0);
  CHECK(some[1].total == 2);
}

TEST_CASE("atomic writes leave no temporary files") {
  TempDir dir;
  std::filesystem::path target = dir.path() / "f.txt";
  WriteFileAtomic(target, "one");
  WriteFileAtomic(target, "two");
  CHECK(ReadFile(target) == "two");
  size_t entries = 0;
  for (const auto &entry : std::filesystem::directory_iterator(dir.path())) {
    (void)entry;
    ++entries;
  }
  CHECK(entries == 1);
  CHECK(CodeOf([&] { ReadFile(dir.path() / "missing"); }) == ErrorCode::kIoError);
}

TEST_CASE("concurrent writers on one key never lose an update") {
  Fixture f;
  const std::string bytes = LayerBytes(f.doc, "ann1");
  constexpr int kThreads = 4;
  constexpr int kWritesPerThread = 25;
  std::atomic<int> conflicts{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&] {
      int written = 0;
      while (written < kWritesPerThread) {
        uint64_t rev = f.store.Revision("d", "ann1");
        try {
          f.store.PutLayer("d", "ann1", bytes, rev);
          ++written;
        } catch (const Error &e) {
          if (e.code() != ErrorCode::kConflict) throw;
          ++conflicts;
        }
      }
    });
  }
  std::atomic<bool> stop{false};
  std::atomic<int> torn{0};
  std::thread reader([&] {
    while (!stop) {
      auto stored = f.store.GetLayer("d", "ann1");
      if (stored && stored->bytes != bytes) ++torn;
    }
  });
  for (std::thread &t : threads) t.join();
  stop = true;
  reader.join();
  CHECK(f.store.Revision("d", "ann1") == kThreads * kWritesPerThread);
  CHECK(torn == 0);
}
