#include "parab/cli.hpp"
#include "parab/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace parab;

namespace {

const std::string kChiDoc = R"({
  "curve": {"genus": 2, "points": [{"degree": 1, "ramification": 3, "weights": [2, 1, 1, 0]}]},
  "bundle": {"rank": 2, "degree": 1}
})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "", const char* env = nullptr) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err, env);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(PARAB_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(ParseDocument, FullDocument) {
  const auto doc = read_document(R"({
    "curve": {"genus": 3, "points": [{"degree": 2, "ramification": 2, "weights": [2, 1, 0]}]},
    "bundle": {"rank": 2, "degree": -3},
    "pieces": [{"rank": 1, "weights_per_point": [[1, 1, 0]]}, {"rank": 1, "weights_per_point": [[1, 0, 0]]}]
  })");
  EXPECT_EQ(doc.curve.genus, 3);
  ASSERT_EQ(doc.curve.points.size(), 1u);
  EXPECT_EQ(doc.curve.points[0].f, 2);
  EXPECT_EQ(doc.curve.points[0].weights, Weights({2, 1, 0}));
  ASSERT_TRUE(doc.bundle);
  EXPECT_EQ(doc.bundle->degree, -3);
  ASSERT_EQ(doc.pieces.size(), 2u);
  EXPECT_EQ(doc.to_bundle().rank(), 2);
}

TEST(ParseDocument, SchemaErrors) {
  EXPECT_THROW(read_document(R"({"bundle": {"rank": 1, "degree": 0}})"), InputError);
  EXPECT_THROW(read_document(R"({"curve": {"genus": -1}})"), InputError);
  EXPECT_THROW(read_document(R"({"curve": {"genus": 1.5}})"), InputError);
  EXPECT_THROW(read_document(R"({"curve": {"genus": 1, "points": [{"degree": 1, "ramification": 3,
                                   "weights": [2, 1, 0]}]}})"),
               InputError);
  EXPECT_THROW(read_document(R"({"curve": {"genus": 1, "points": [{"degree": 1, "ramification": 2,
                                   "weights": [2, 3, 0]}]}})"),
               InputError);
  EXPECT_THROW(read_document(R"({"curve": {"genus": 1, "points": [{"degree": 1, "ramification": 2,
                                   "weights": [2, 1, 0]}]}, "bundle": {"rank": 3, "degree": 0}})"),
               InputError);
  EXPECT_THROW(read_document(R"({"curve": {"genus": 1}, "pieces": [{"rank": 1, "weights_per_point": [[1, 0]]}]})"),
               InputError);
  EXPECT_THROW(read_document(R"({"curve": {"genus": 1}})").to_bundle(), InputError);
  try {
    read_document(std::string("{\"curve\": "));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(Serialization, RationalsAsStrings) {
  OrbifoldCurve c{2, {}};
  c.points.emplace_back(1, Weights({2, 1, 1, 0}));
  const Json j = to_json(euler_char(ParabolicBundle(c, 2, 1)));
  EXPECT_EQ(j["chi"], "-1");
  EXPECT_EQ(j["stacky_degree"], "5/3");
  EXPECT_EQ(j["corrections"], Json::parse(R"([["0", "2/3"]])"));
  EXPECT_EQ(to_json(Weights({3, 1, 0})), Json::parse("[3, 1, 0]"));
  EXPECT_EQ(to_json(inertia_term(5, 1, 2)).size(), 4u);
}

TEST(Serialization, BundleDocumentRoundTrips) {
  Lcg64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const auto b = random_bundle(rng);
    const auto back = parse_document(to_json(b)).to_bundle();
    ASSERT_EQ(to_json(back), to_json(b));
    const auto end = parse_document(to_json(endomorphism_bundle(b))).to_bundle();
    ASSERT_EQ(end.rank(), b.rank() * b.rank());
  }
}

TEST(Cli, ChiFromStdin) {
  const auto r = call({"chi"}, kChiDoc);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["chi"], "-1");
  EXPECT_EQ(j["stacky_degree"], "5/3");
  EXPECT_EQ(j["classical_part"], "-1/3");
}

TEST(Cli, SubcommandsOnSamples) {
  const auto ed = call({"ed-bound", "-i", sample("ed_r12.json")});
  ASSERT_EQ(ed.code, 0) << ed.err;
  EXPECT_EQ(Json::parse(ed.out)["total"], 150);
  EXPECT_EQ(Json::parse(ed.out)["h"], 12);
  EXPECT_EQ(Json::parse(ed.out)["conjectural"], true);

  for (const auto& [p, v] : std::vector<std::pair<std::string, int>>{{"2", 148}, {"3", 147}, {"5", 145}}) {
    const auto r = call({"ed-p", "--prime", p, "-i", sample("ed_r12.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["total"], v);
  }

  EXPECT_EQ(Json::parse(call({"end-chi"}, kChiDoc).out)["end_chi"], "-5");
  EXPECT_EQ(Json::parse(call({"flag-dim"}, kChiDoc).out)["flag_total"], 1);
  EXPECT_EQ(Json::parse(call({"stacky-degree"}, kChiDoc).out)["stacky_degree"], "5/3");
  EXPECT_EQ(Json::parse(call({"index"}, kChiDoc).out)["h"], 1);
  EXPECT_EQ(Json::parse(call({"nil-dim", "-i", sample("nil_pieces.json")}).out)["nil_dimension"], 2);
  EXPECT_EQ(Json::parse(call({"trdeg-bound", "-i", sample("nil_pieces.json")}).out)["trdeg_bound"], 4);
  EXPECT_EQ(Json::parse(call({"trdeg-bound", "--nonsimple", "-i", sample("nil_pieces.json")}).out)["trdeg_bound"], 5);
  EXPECT_EQ(Json::parse(call({"gerbe-ed", "12"}).out)["ed_upper"], 5);
  EXPECT_EQ(Json::parse(call({"gerbe-ed-p", "27", "--prime", "3"}).out)["ed_p"], 26);
}

TEST(Cli, HomDatumOutputReparses) {
  const auto r = call({"hom-datum"}, kChiDoc);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = read_document(r.out);
  EXPECT_EQ(doc.curve.points[0].weights, Weights({4, 2, 1, 0}));
  EXPECT_EQ(doc.bundle->rank, 4);
  EXPECT_EQ(doc.bundle->degree, -1);
  // Feeding it back in gives chi(End F) = (1 - g) r^2 - flag total.
  EXPECT_EQ(Json::parse(call({"chi"}, r.out).out)["chi"], "-5");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, cli::kInputError);
  EXPECT_EQ(call({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(call({"chi"}, "{\"curve\": [").code, cli::kInputError);
  EXPECT_NE(call({"chi"}, "{\"curve\": [").err.find("byte"), std::string::npos);
  EXPECT_EQ(call({"chi", "-i", "/nonexistent/x.json"}).code, cli::kInputError);
  EXPECT_EQ(call({"ed-p", "--prime", "4"}, kChiDoc).code, cli::kInputError);
  EXPECT_EQ(call({"ed-p"}, kChiDoc).code, cli::kInputError);
  EXPECT_EQ(call({"gerbe-ed", "0"}).code, cli::kInputError);

  const std::string genus_one = R"({"curve": {"genus": 1}, "bundle": {"rank": 2, "degree": 0}})";
  EXPECT_EQ(call({"ed-bound"}, genus_one).code, cli::kHypothesis);
  EXPECT_EQ(call({"trdeg-bound", "--nonsimple"}, genus_one).code, cli::kHypothesis);
  EXPECT_EQ(call({"--help"}).code, cli::kOk);
}

TEST(Cli, TextFormatAndEnvironmentOverride) {
  const auto text = call({"chi", "--format", "text"}, kChiDoc);
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("chi"), std::string::npos);
  EXPECT_NE(text.out.find("5/3"), std::string::npos);
  EXPECT_FALSE(Json::accept(text.out));

  const auto env = call({"chi"}, kChiDoc, "text");
  EXPECT_EQ(env.out, text.out);
  const auto env_over = call({"chi", "--format", "text"}, kChiDoc, "json");
  EXPECT_EQ(Json::parse(env_over.out)["chi"], "-1");
  EXPECT_EQ(call({"chi"}, kChiDoc, "xml").code, cli::kInputError);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = call({"verify", "--e-max", "8", "--random", "30", "--seed", "5"});
  const auto b = call({"verify", "--e-max", "8", "--random", "30", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["reports"].size(), 7u);
}
