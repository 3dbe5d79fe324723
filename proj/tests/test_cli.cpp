#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "fdl/fdl.hpp"
#include "fdl/fixtures.hpp"

using namespace fdl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome fdl_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("fdl_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    Interpretation succ = fixtures::three_successors();
    write("succ.json", to_json(succ).dump(2));
    auto [fl, fr] = fixtures::swapped_fans();
    write("fans_l.json", to_json(fl).dump(2));
    write("fans_r.json", to_json(fr).dump(2));
    write("two.json", to_json(fixtures::two_components()).dump(2));
    auto [wl, wr] = fixtures::extra_weak_successor();
    write("weak_l.json", to_json(wl).dump(2));
    write("weak_r.json", to_json(wr).dump(2));
    write("broken.json", "{\"domain\": [\"u\"],,}");
    write("kb.json", R"({"tbox": [{"lhs": "A", "rhs": "0.8", "p": "1"}],
                         "abox": [{"kind": "concept", "c": "exists r . A", "a": "a", "cmp": ">=", "p": "0.8"}]})");
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static fs::path dir_;
};

fs::path CliTest::dir_;

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(CliTest, EvalPrintsAnAlignedTable) {
  Outcome o = fdl_run({"eval", "-m", path("succ.json"), "-c", "forall r . A"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "element  degree");
  EXPECT_EQ(ls[1], "u        0.5");
  Outcome one = fdl_run({"eval", "-m", path("succ.json"), "-c", ">= 2 r . A", "-e", "u", "--json"});
  json doc = parse_json(one.out);
  EXPECT_EQ(doc["values"]["u"], "0.6");
  EXPECT_EQ(doc["values"].size(), 1u);
}

TEST_F(CliTest, BisimMatrixAndRelationDocument) {
  Outcome o = fdl_run({"bisim", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "--features", "", "--mode",
                       "fuzzy", "-o", path("z.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[1], "u  0.8  0    0");
  auto [l, r] = fixtures::swapped_fans();
  CandidateRelation z = relation_from_json(parse_json(read_file(path("z.json"))), l, r);
  EXPECT_EQ(z.z.at("u", "u'"), Degree::parse("0.8"));

  Outcome j = fdl_run({"--json", "bisim", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "--features", ""});
  EXPECT_EQ(relation_from_json(parse_json(j.out), l, r).z, z.z);

  Outcome ok = fdl_run({"check", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "-z", path("z.json"),
                        "--features", ""});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "satisfied: all conditions hold\n");
  Outcome bad = fdl_run({"check", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "-z", path("z.json"),
                         "--features", "U,O", "--json"});
  EXPECT_EQ(bad.code, 1);  // FB8: nothing on the left reaches Z(v, v′) = 1 from u
  write("z_high.json", R"({"mode": "fuzzy", "entries": [["u", "u'", "0.9"]]})");
  Outcome high = fdl_run({"check", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "-z", path("z_high.json"),
                          "--features", "", "--json"});
  EXPECT_EQ(high.code, 1);
  EXPECT_FALSE(parse_json(high.out)["satisfied"].get<bool>());
}

TEST_F(CliTest, BisimilarExitCodes) {
  Outcome yes = fdl_run({"bisimilar", "-l", path("weak_l.json"), "-r", path("weak_r.json"), "--features",
                         "O,U,Self,N2", "--mode", "crisp"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "bisimilar: yes\n");
  Outcome no = fdl_run({"bisimilar", "-l", path("weak_l.json"), "-r", path("weak_r.json"), "--features", "Q3",
                        "--mode", "crisp", "--json"});
  EXPECT_EQ(no.code, 1);
  json doc = parse_json(no.out);
  EXPECT_EQ(doc["failing_individual"], "a");
  EXPECT_EQ(doc["witness"]["mode"], "crisp");
}

TEST_F(CliTest, MinimizeAndPruneEmitModelDocuments) {
  Outcome q = fdl_run({"minimize", "-m", path("two.json"), "--features", "O"});
  ASSERT_EQ(q.code, 0) << q.err;
  Interpretation m = load_interpretation(q.out);
  EXPECT_EQ(m.domain(), (Labels{"{u}", "{v1,v'1}", "{v2,v3,v'2}", "{u'}"}));
  EXPECT_EQ(m.role_value("r", m.index_of("{u'}"), m.index_of("{v2,v3,v'2}")), Degree::parse("0.6"));

  Outcome p = fdl_run({"prune", "-m", path("two.json"), "--features", ""});
  EXPECT_EQ(load_interpretation(p.out).size(), 4u);
  Outcome both = fdl_run({"minimize", "-m", path("two.json"), "--features", "O", "--prune"});
  EXPECT_EQ(load_interpretation(both.out).size(), 3u);

  Outcome unsupported = fdl_run({"minimize", "-m", path("two.json"), "--features", "Self"});
  EXPECT_EQ(unsupported.code, 2);
}

TEST_F(CliTest, ValidateBoxes) {
  Interpretation succ = fixtures::three_successors();
  succ.set_individual("a", "u");
  write("succ_named.json", to_json(succ).dump());
  Outcome abox = fdl_run({"validate", "-m", path("succ_named.json"), "--abox", path("kb.json")});
  EXPECT_EQ(abox.code, 0);
  EXPECT_EQ(abox.out, "valid\n");
  Outcome tbox = fdl_run({"validate", "-m", path("succ_named.json"), "--tbox", path("kb.json"), "--json"});
  EXPECT_EQ(tbox.code, 1);
  EXPECT_EQ(parse_json(tbox.out)["element"], "v2");
  EXPECT_EQ(fdl_run({"validate", "-m", path("succ_named.json")}).code, 2);
  EXPECT_EQ(fdl_run({"validate", "-m", path("succ_named.json"), "--tbox", path("kb.json"), "--abox", path("kb.json")}).code,
            2);
}

TEST_F(CliTest, HmReportsSeparators) {
  Outcome o = fdl_run({"hm", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "--features", "", "--fragment",
                       "prime", "--depth", "3", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = parse_json(o.out);
  EXPECT_TRUE(doc["reached_bisimulation"].get<bool>());
  auto [l, r] = fixtures::swapped_fans();
  EXPECT_EQ(relation_from_json(doc["matrix"], l, r).z, greatest_bisim(l, r, FeatureSet{}, Mode::Fuzzy).z);
  for (const auto& s : doc["separators"]) EXPECT_NO_THROW(parse_concept(s[2].get<std::string>()));
  Outcome human = fdl_run({"hm", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "--features", ""});
  EXPECT_NE(human.out.find("separators:"), std::string::npos);
}

TEST_F(CliTest, ErrorsNameTheFileAndPosition) {
  Outcome o = fdl_run({"eval", "-m", path("broken.json"), "-c", "A"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("broken.json"), std::string::npos);
  EXPECT_NE(o.err.find("at position 17"), std::string::npos) << o.err;

  Outcome c = fdl_run({"eval", "-m", path("succ.json"), "-c", "exists r . "});
  EXPECT_EQ(c.code, 2);
  EXPECT_NE(c.err.find("position 11"), std::string::npos) << c.err;

  EXPECT_EQ(fdl_run({"eval", "-m", path("missing.json"), "-c", "A"}).code, 2);
  EXPECT_EQ(fdl_run({"frobnicate"}).code, 2);
  EXPECT_EQ(fdl_run({}).code, 2);
  EXPECT_EQ(fdl_run({"bisim", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "--features", "Z"}).code, 2);
  EXPECT_EQ(fdl_run({"bisim", "-l", path("fans_l.json"), "-r", path("fans_r.json"), "--features", "", "--mode",
                     "strong"})
                .code,
            2);
  EXPECT_EQ(fdl_run({"--help"}).code, 0);
  EXPECT_EQ(fdl_run({"eval", "--help"}).code, 0);
}

TEST_F(CliTest, OutputIsDeterministic) {
  std::vector<std::string> args{"hm", "-l", path("weak_l.json"), "-r", path("weak_r.json"), "--features", "O,Q2",
                                "--fragment", "delta", "--depth", "2"};
  Outcome a = fdl_run(args), b = fdl_run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST_F(CliTest, SelftestTableMatchesExitCode) {
  Outcome o = fdl_run({"selftest", "--json"});
  json doc = parse_json(o.out);
  ASSERT_EQ(doc.size(), 5u);
  bool all = true;
  for (const auto& c : doc) all = all && c["pass"].get<bool>();
  EXPECT_EQ(o.code, all ? 0 : 1);
}
