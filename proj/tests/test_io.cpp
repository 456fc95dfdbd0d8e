#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace swlab;

TEST(Parse, TetrahedronText) {
  const auto x = io::parse_complex_string("0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  EXPECT_EQ(x, gen::sphere(2));
}

TEST(Parse, CommentsAndBlanks) {
  const auto x = io::parse_complex_string("# header\n\n  0 1\n\t# indented comment\n1 2\n");
  EXPECT_EQ(x.f_vector(), (std::vector<std::size_t>{3, 2}));
}

TEST(Parse, CommentsOnlyIsEmpty) {
  try {
    io::parse_complex_string("# nothing\n# here\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(Parse, RepeatedVertexReportsLocation) {
  try {
    io::parse_complex_string("0 0 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("MalformedFacet"), std::string::npos);
  }
}

TEST(Parse, BadTokenReportsLocation) {
  try {
    io::parse_complex_string("0 1 2\n0 x 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(io::parse_complex_string("0 -1\n"), ParseError);
  EXPECT_THROW(io::parse_complex_string("0 99999999999\n"), ParseError);
}

TEST(Parse, MissingFile) { EXPECT_THROW(io::parse_complex_file("/nonexistent/file.tri"), ParseError); }

TEST(RoundTrip, Corpus) {
  for (const auto& name : gen::corpus_list()) {
    const auto x = gen::corpus_complex(name);
    const auto text = io::to_facet_text(x);
    const auto y = io::parse_complex_string(text);
    EXPECT_EQ(x, y);
    EXPECT_EQ(io::to_facet_text(y), text);
  }
}

TEST(Corpus, ShippedFilesMatchEntries) {
  for (const auto& name : gen::corpus_list()) {
    const auto x = io::parse_complex_file(std::string(SWLAB_DATA_DIR) + "/" + name + ".tri");
    EXPECT_EQ(x, gen::corpus_complex(name)) << name;
  }
}

TEST(Corpus, Entries) {
  const auto s2 = io::corpus("s2");
  EXPECT_EQ(s2.complex(), gen::sphere(2));
  EXPECT_EQ(s2.betti, (std::vector<std::size_t>{1, 0, 1}));
  const auto rp2 = io::corpus("rp2-6");
  EXPECT_EQ(rp2.complex().count(0), 6u);
  EXPECT_EQ(rp2.facets.size(), 10u);
  EXPECT_EQ(homology(rp2.complex()).betti(), (std::vector<std::size_t>{1, 1, 1}));
  const auto t2 = io::corpus("t2-7");
  EXPECT_EQ(t2.complex().count(0), 7u);
  EXPECT_EQ(t2.facets.size(), 14u);
  EXPECT_EQ(homology(t2.complex()).betti(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(io::corpus_names().size(), 6u);
}

TEST(Corpus, UnknownName) {
  try {
    io::corpus("nosuch");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCorpusEntry);
  }
}

TEST(Corpus, CorruptedEntryFailsValidation) {
  auto e = io::corpus("t2-7");
  e.facets.pop_back();
  try {
    io::validate_corpus_entry(e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::CorpusValidationFailed);
  }
  auto f = io::corpus("rp2-6");
  f.betti = {1, 0, 1};
  EXPECT_THROW(io::validate_corpus_entry(f), Error);
  auto g = io::corpus("s2");
  g.facets.push_back({0, 0, 1});
  EXPECT_THROW(io::validate_corpus_entry(g), Error);
}

TEST(Json, Fnv1a) {
  EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Json, ReportLayout) {
  const auto x = gen::corpus_complex("rp2-6");
  const auto r = compute_report(x);
  const auto j = io::report_json(r, "corpus:rp2-6", io::input_hash(x), false);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["tool"]["name"], "swlab");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][1]["class_nonzero"], true);
  EXPECT_EQ(j["rows"][1]["matches_oracle"], true);
  EXPECT_FALSE(j.contains("diagnostics"));
  EXPECT_EQ(j.begin().key(), "schema");
  const auto d = io::report_json(r, "corpus:rp2-6", io::input_hash(x), true);
  EXPECT_TRUE(d["diagnostics"].contains("timings_ms"));
  // formatting of the input does not change the hash
  EXPECT_EQ(io::input_hash(x), io::input_hash(io::parse_complex_string("# c\n" + io::to_facet_text(x))));
}

TEST(Json, ErrorDocument) {
  try {
    io::parse_complex_string("0 0");
  } catch (const Error& e) {
    const auto j = io::error_json(e);
    EXPECT_EQ(j["status"], "error");
    EXPECT_EQ(j["error"]["kind"], "ParseError");
    EXPECT_EQ(j["error"]["location"]["line"], 1);
  }
}

TEST(Errors, KindNames) {
  EXPECT_EQ(to_string(ErrorKind::OracleConflict), "OracleConflict");
  const Error e(ErrorKind::NotACycle, "x");
  EXPECT_EQ(std::string(e.what()), "NotACycle: x");
}
