#include "selftest.hpp"

#include <sstream>

#include "fdl/fdl.hpp"
#include "fdl/fixtures.hpp"

namespace fdl::selftest {
namespace {

// Collects mismatches; the first one becomes the check's detail line.
class Tally {
 public:
  explicit Tally(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && check_.detail.empty()) check_.detail = what;
    failed_ += ok ? 0 : 1;
  }
  void expect_degree(Degree got, Degree want, const std::string& what) {
    expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
  }

  Check done() {
    check_.pass = failed_ == 0;
    if (check_.pass) check_.detail = std::to_string(total_) + " checks passed";
    else check_.detail = std::to_string(failed_) + "/" + std::to_string(total_) + " mismatched; first: " + check_.detail;
    return check_;
  }

  template <class F>
  void guard(F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, std::string("threw: ") + e.what());
    }
  }

 private:
  Check check_;
  int total_ = 0, failed_ = 0;
};

Degree d(const char* s) { return Degree::parse(s); }

}  // namespace

Check evaluation_check() {
  Tally t("evaluation of the three-successor model");
  t.guard([&] {
    const Interpretation m = fixtures::three_successors();
    auto at = [&](const char* c, const char* x) { return eval_concept(m, parse_concept(c)).at(x); };
    t.expect_degree(at("forall r . A", "u"), d("0.5"), "(forall r.A)(u)");
    t.expect_degree(at("exists r . A", "u"), d("0.8"), "(exists r.A)(u)");
    t.expect_degree(at("< 2 r . A", "u"), d("0"), "(<2 r.A)(u)");
    t.expect_degree(at(">= 2 r . A", "u"), d("0.6"), "(>=2 r.A)(u)");
    const char* want_ex[] = {"0.8", "0.9", "0.7"};
    const char* vs[] = {"v1", "v2", "v3"};
    for (int i = 0; i < 3; ++i) {
      t.expect_degree(at("exists (r | r-)* . A", vs[i]), d(want_ex[i]), std::string("(exists (r|r-)*.A)(") + vs[i] + ")");
      t.expect_degree(at("forall (r | r-)* . A", vs[i]), d("0"), std::string("(forall (r|r-)*.A)(") + vs[i] + ")");
    }
  });
  return t.done();
}

Check fuzzy_bisimulation_check() {
  Tally t("greatest fuzzy bisimulation of the swapped fans");
  t.guard([&] {
    const auto [l, r] = fixtures::swapped_fans();
    const FeatureSet none;
    const FuzzyRelation z = greatest_bisim(l, r, none, Mode::Fuzzy).z;
    FuzzyRelation want(l.domain(), r.domain());
    want.set("v", "v'", d("1"));
    want.set("w", "w'", d("1"));
    want.set("v", "w'", d("0.8"));
    want.set("w", "v'", d("0.8"));
    want.set("u", "u'", d("0.8"));
    for (const auto& x : l.domain())
      for (const auto& x2 : r.domain())
        t.expect_degree(z.at(x, x2), want.at(x, x2), "fixpoint Z(" + x + "," + x2 + ")");
    t.expect(check_bisim(l, r, z, none).satisfied(), "fixpoint result fails the bisimulation conditions");
    t.expect(brute_force_greatest(l, r, none, Mode::Fuzzy).z == z, "brute-force oracle disagrees with the fixpoint");
  });
  return t.done();
}

Check crisp_bisimilarity_check() {
  Tally t("strong bisimilarity with an extra weak successor");
  t.guard([&] {
    const auto [l, r] = fixtures::extra_weak_successor();
    auto holds = [&](const char* f) { return bisimilar(l, r, FeatureSet::parse(f), Mode::Crisp).holds; };
    t.expect(holds("O,U,Self,Q2,N2"), "Phi={O,U,Self,Q2,N2}: expected strongly bisimilar, got not bisimilar");
    for (const char* f : {"I", "Q3", "N3"})
      t.expect(!holds(f), std::string("Phi={") + f + "}: expected not strongly bisimilar, got bisimilar");
  });
  return t.done();
}

Check quotient_check() {
  Tally t("quotients of the two-component model");
  t.guard([&] {
    const Interpretation m = fixtures::two_components();
    auto blocks_of = [&](const Quotient& q) {
      std::ostringstream s;
      for (const auto& b : q.partition.blocks) s << block_label(m, b);
      return s.str();
    };
    auto edge = [](const Quotient& q, const char* x, const char* y) {
      return q.model.role_value("r", q.model.index_of(x), q.model.index_of(y));
    };
    for (const char* f : {"", "U"}) {
      Quotient q = quotient_with_partition(m, FeatureSet::parse(f));
      std::string got = blocks_of(q);
      t.expect(got == "{u,u'}{v1,v'1}{v2,v3,v'2}", std::string("Phi={") + f + "} blocks " + got);
      if (q.model.size() == 3) {
        t.expect_degree(edge(q, "{u,u'}", "{v1,v'1}"), d("0.5"), "r([u],[v1])");
        t.expect_degree(edge(q, "{u,u'}", "{v2,v3,v'2}"), d("0.6"), "r([u],[v2])");
        t.expect(q.model.individual("a") == q.model.index_of("{u,u'}"), "a is not mapped to [u]");
      }
    }
    for (const char* f : {"O", "O,U"}) {
      Quotient q = quotient_with_partition(m, FeatureSet::parse(f));
      std::string got = blocks_of(q);
      t.expect(got == "{u}{v1,v'1}{v2,v3,v'2}{u'}", std::string("Phi={") + f + "} blocks " + got);
      if (q.model.size() == 4)
        for (const char* root : {"{u}", "{u'}"}) {
          t.expect_degree(edge(q, root, "{v1,v'1}"), d("0.5"), std::string("r(") + root + ",[v1])");
          t.expect_degree(edge(q, root, "{v2,v3,v'2}"), d("0.6"), std::string("r(") + root + ",[v2])");
        }
    }
    for (const char* f : {"I", "I,O", "I,U", "I,O,U"})
      t.expect(quotient_with_partition(m, FeatureSet::parse(f)).partition.is_identity(),
               std::string("Phi={") + f + "}: quotient is not the identity");
  });
  return t.done();
}

Check separation_check() {
  Tally t("separation matrices for the expressivity fixtures");
  t.guard([&] {
    const FeatureSet all = FeatureSet::full(3);
    {
      const auto [l, r] = fixtures::half_versus_full();
      t.expect_degree(greatest_bisim(l, r, all, Mode::Fuzzy).z(0, 0), d("0.5"), "half/full Z(v,v)");
    }
    {
      const auto [l, r] = fixtures::single_edge();
      FeatureSet f = all;
      f.universal = false;
      const FuzzyRelation z = greatest_bisim(l, r, f, Mode::Fuzzy).z;
      t.expect_degree(z.at("u", "u'"), d("1"), "single edge Z(u,u')");
      t.expect_degree(z.at("v", "v'"), d("0.9"), "single edge Z(v,v')");
      t.expect_degree(z.at("u", "v'"), d("0"), "single edge Z(u,v')");
      t.expect_degree(z.at("v", "u'"), d("0"), "single edge Z(v,u')");
    }
    {
      const auto [l, r] = fixtures::three_leaves();
      const FuzzyRelation z = greatest_bisim(l, r, all, Mode::Fuzzy).z;
      for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t x2 = 0; x2 < r.size(); ++x2) {
          Degree want;
          if (x == 0 || x2 == 0) want = x == x2 ? d("1") : d("0");
          else want = l.concept_value("A", x) == r.concept_value("A", x2) ? d("1") : d("0.9");
          t.expect_degree(z(x, x2), want, "three leaves Z(" + l.domain()[x] + "," + r.domain()[x2] + ")");
        }
    }
  });
  return t.done();
}

std::vector<Check> fixture_checks() {
  return {evaluation_check(), fuzzy_bisimulation_check(), crisp_bisimilarity_check(), quotient_check(),
          separation_check()};
}

}  // namespace fdl::selftest
