// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "fdl/fixtures.hpp"
#include "selftest.hpp"
#include "support/random_models.hpp"

using namespace fdl;

namespace {

struct Tally {
  std::size_t runs = 0, fails = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++runs;
    if (!ok && fails++ == 0) first = what();
  }
  std::string detail(const std::string& unit) const {
    if (!fails) return std::to_string(runs) + " " + unit + " passed";
    return std::to_string(fails) + "/" + std::to_string(runs) + " failed; first: " + first;
  }
};

int failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail, double seconds) {
  if (!pass) ++failures;
  std::printf("%s %2d %s (%.1fs): %s\n", pass ? "PASS" : "FAIL", n, name.c_str(), seconds, detail.c_str());
  std::fflush(stdout);
}

template <class F>
void criterion(int n, const std::string& name, F body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    Tally t = body();
    pass = t.fails == 0 && t.runs > 0;
    detail = t.detail("checks");
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(n, name, pass, detail, s);
}

std::string where(const Interpretation& l, const Interpretation& r, const FeatureSet& f, const std::string& what) {
  return what + " {" + f.to_string() + "} on " + std::to_string(l.size()) + "x" + std::to_string(r.size());
}

FuzzyRelation identity(const Interpretation& m) {
  FuzzyRelation z(m.domain(), m.domain());
  for (std::size_t x = 0; x < m.size(); ++x) z.set(x, x, Degree::one());
  return z;
}

bool passes(const Interpretation& l, const Interpretation& r, const FuzzyRelation& z, const FeatureSet& f, Mode mode) {
  return check_bisim(l, r, CandidateRelation(z, mode), f).satisfied();
}

// Every probe across the randomized suites feeds this tally.
Tally probes;

void probe(const Interpretation& l, const Interpretation& r, const FeatureSet& f, const KnowledgeBase& kb) {
  for (Mode mode : {Mode::Fuzzy, Mode::Crisp}) {
    ProbeReport rep = invariance_probe(l, r, f, mode, kb);
    probes.expect(!rep.violation, [&] { return where(l, r, f, "violation in " + to_string(mode) + " probe"); });
  }
}

KnowledgeBase random_kb(gen::Rng& rng, const FeatureSet& f, gen::ConceptShape cs) {
  KnowledgeBase kb;
  cs.inv_neg = gen::chance(rng, 0.5);
  kb.tbox = gen::random_tbox(rng, f, cs, 2, 2);
  kb.abox.push_back(FuzzyAssertion::of_concept(gen::random_concept(rng, f, cs, 2), "a", Comparison::Ge,
                                               cs.constants[gen::below(rng, cs.constants.size())]));
  return kb;
}

// Identity, inverse, composition and finite sups of bisimulations are
// bisimulations again, in both modes.
Tally closure_suite() {
  Tally t;
  gen::Rng rng(1001);
  gen::ModelShape ms;
  ms.max_elements = 6;
  ms.roles = {"r", "s"};
  const auto sets = gen::feature_sets();
  for (int i = 0; i < 120; ++i) {
    ms.values = gen::pick_values(rng);
    Interpretation a = gen::random_model(rng, ms, "x");
    Interpretation b = gen::partner(rng, a, ms);
    Interpretation c = gen::partner(rng, b, ms);
    for (const auto& f : sets) {
      FeatureSet richer = f.with_universal();
      richer.inverse = true;
      for (Mode mode : {Mode::Fuzzy, Mode::Crisp}) {
        const std::string m = to_string(mode);
        FuzzyRelation ab = greatest_bisim(a, b, f, mode).z, bc = greatest_bisim(b, c, f, mode).z;
        FuzzyRelation ab_rich = greatest_bisim(a, b, richer, mode).z;
        FuzzyRelation ab_crisp = greatest_bisim(a, b, f, Mode::Crisp).z;
        t.expect(passes(a, b, ab, f, mode), [&] { return where(a, b, f, m + " greatest"); });
        t.expect(passes(a, a, identity(a), f, mode), [&] { return where(a, a, f, m + " identity"); });
        t.expect(passes(b, a, rel_inverse(ab), f, mode), [&] { return where(b, a, f, m + " inverse"); });
        t.expect(passes(a, c, rel_compose(ab, bc), f, mode), [&] { return where(a, c, f, m + " composition"); });
        t.expect(passes(a, b, rel_sup({ab_rich, ab_crisp, ab}), f, mode), [&] { return where(a, b, f, m + " sup"); });
        t.expect(passes(a, b, rel_sup({ab_rich, ab_crisp}), f, mode), [&] { return where(a, b, f, m + " sup"); });
      }
    }
  }
  return t;
}

// Z ≤ (C ⇔ C′) for fuzzy-fragment concepts; strong bisimilarity preserves
// every value, involutive negation and Δ included.
Tally invariance_suite() {
  Tally t;
  gen::Rng rng(2002);
  gen::ModelShape ms;
  ms.max_elements = 5;
  ms.roles = {"r", "s"};
  ms.individuals = {"a", "b"};
  gen::ConceptShape cs;
  cs.roles = ms.roles;
  cs.individuals = ms.individuals;
  const auto sets = gen::feature_sets();
  for (int i = 0; i < 110; ++i) {
    const FeatureSet& f = sets[i % sets.size()];
    ms.values = gen::pick_values(rng);
    cs.constants = ms.values;
    Interpretation l = gen::random_model(rng, ms, "x"), r = gen::partner(rng, l, ms);
    FuzzyRelation z = greatest_bisim(l, r, f, Mode::Fuzzy).z, c = greatest_bisim(l, r, f, Mode::Crisp).z;
    for (int k = 0; k < 200; ++k) {
      cs.inv_neg = false;
      ConceptPtr base = gen::random_concept(rng, f, cs, 3);
      cs.inv_neg = true;
      ConceptPtr strong = gen::random_concept(rng, f, cs, 3);
      Extension bl = extension(l, *base), br = extension(r, *base);
      Extension sl = extension(l, *strong), sr = extension(r, *strong);
      for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t x2 = 0; x2 < r.size(); ++x2) {
          t.expect(z(x, x2) <= iff(bl[x], br[x2]), [&] { return where(l, r, f, "fuzzy " + to_string(base)); });
          if (c(x, x2).is_one())
            t.expect(sl[x] == sr[x2], [&] { return where(l, r, f, "crisp " + to_string(strong)); });
        }
    }
    probe(l, r, f, random_kb(rng, f, cs));
  }
  return t;
}

// Greatest bisimulation = exhaustive oracle = stabilised indistinguishability
// matrix, on small models over V = {0, 1/2, 1}.
Tally oracle_suite() {
  Tally t;
  gen::Rng rng(3003);
  gen::ModelShape ms;
  ms.min_elements = 1;
  ms.max_elements = 3;
  ms.concepts = {"A"};
  ms.edge_density = 0.5;
  gen::ConceptShape cs;
  cs.concepts = ms.concepts;
  std::vector<FeatureSet> sets;
  for (const char* s : {"", "I", "O", "U", "Self", "Q2", "N2"}) sets.push_back(FeatureSet::parse(s));
  for (const auto& f : sets)
    for (int i = 0; i < 2000; ++i) {
      Interpretation l = gen::random_model(rng, ms, "x");
      Interpretation r = gen::below(rng, 3) == 0 ? gen::isomorphic_copy(rng, l)
                         : l.size() < 3 && gen::chance(rng, 0.5) ? gen::with_clone(rng, l)
                                                                  : gen::random_model(rng, ms, "y");
      for (Mode mode : {Mode::Fuzzy, Mode::Crisp}) {
        const std::string m = to_string(mode);
        FuzzyRelation g = greatest_bisim(l, r, f, mode).z;
        t.expect(g == brute_force_greatest(l, r, f, mode).z, [&] { return where(l, r, f, m + " brute force"); });
        HmResult hm = hm_matrix(l, r, f, mode == Mode::Fuzzy ? Sublanguage::BasePrime : Sublanguage::DeltaPrime, 12);
        t.expect(hm.matrix == g && hm.reached_bisimulation, [&] { return where(l, r, f, m + " hm matrix"); });
      }
      probe(l, r, f, random_kb(rng, f, cs));
    }
  return t;
}

// The quotient is strongly bisimilar to the model via x ↦ [x], validates the
// same TBoxes, and is itself reduced.
Tally quotient_suite() {
  Tally t;
  gen::Rng rng(4004);
  gen::ModelShape ms;
  ms.max_elements = 6;
  ms.roles = {"r", "s"};
  ms.individuals = {"a", "b"};
  gen::ConceptShape cs;
  cs.roles = ms.roles;
  cs.individuals = ms.individuals;
  cs.inv_neg = true;
  std::vector<FeatureSet> sets;
  for (const char* s : {"", "I", "O", "U", "I,O", "I,U", "O,U", "I,O,U"}) sets.push_back(FeatureSet::parse(s));
  for (int i = 0; i < 60; ++i) {
    ms.values = gen::pick_values(rng);
    cs.constants = ms.values;
    Interpretation base = gen::random_model(rng, ms, "x");
    // clones guarantee something to merge
    Interpretation m = gen::with_clone(rng, gen::with_clone(rng, base, "y"), "z");
    for (const auto& f : sets) {
      Quotient q = quotient_with_partition(m, f);
      FuzzyRelation z = block_relation(m, q);
      t.expect(passes(m, q.model, z, f, Mode::Crisp), [&] { return where(m, q.model, f, "block relation"); });
      t.expect(passes(m, q.model, z, f.with_universal(), Mode::Crisp),
               [&] { return where(m, q.model, f, "block relation with U"); });
      const FeatureSet fu = f.with_universal();
      for (int k = 0; k < 4; ++k) {
        auto tbox = gen::random_tbox(rng, fu, cs, 3, 3);
        t.expect(validates(m, tbox).valid == validates(q.model, tbox).valid,
                 [&] { return where(m, q.model, f, "TBox " + to_string(tbox.front())); });
      }
      t.expect(minimality_certificate(q.model, f).is_reduced, [&] { return where(m, q.model, f, "minimality"); });
      probe(m, q.model, fu, random_kb(rng, fu, cs));
    }
  }
  return t;
}

// No violation anywhere, and the expressivity fixtures are reported as
// outside the fragment rather than as counterexamples.
Tally probe_suite() {
  Tally t = probes;
  auto outside = [&](const fixtures::Pair& p, const FeatureSet& f, const char* c, const char* deg, const char* label) {
    KnowledgeBase kb;
    kb.abox.push_back(FuzzyAssertion::of_concept(parse_concept(c), "a", Comparison::Ge, Degree::parse(deg)));
    ProbeReport rep = invariance_probe(p.first, p.second, f, Mode::Fuzzy, kb);
    bool noted = !rep.notes.empty() && rep.notes.front().rfind("outside fragment", 0) == 0;
    t.expect(noted && !rep.applicable && !rep.agree && !rep.violation,
             [&] { return std::string(label) + ": expected an outside-fragment report without violation"; });
  };
  FeatureSet no_u = FeatureSet::full(3);
  no_u.universal = false;
  outside(fixtures::half_versus_full(), FeatureSet::full(3), "delta A", "1", "half versus full");
  outside(fixtures::single_edge(), no_u, "exists r . inv A", "0.1", "single edge");
  outside(fixtures::three_leaves(), FeatureSet::full(3), ">= 2 r . delta A", "0.9", "three leaves");
  return t;
}

}  // namespace

int main() {
  const std::pair<const char*, selftest::Check (*)()> fixtures[] = {
      {"evaluation suite", selftest::evaluation_check},
      {"greatest fuzzy bisimulation", selftest::fuzzy_bisimulation_check},
      {"crisp bisimilarity suite", selftest::crisp_bisimilarity_check},
      {"quotients", selftest::quotient_check},
      {"separation matrices", selftest::separation_check}};
  int n = 0;
  for (const auto& [name, run] : fixtures) {
    auto t0 = std::chrono::steady_clock::now();
    selftest::Check c = run();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(++n, name, c.pass, c.name + ": " + c.detail, s);
  }
  criterion(6, "closure properties", closure_suite);
  criterion(7, "invariance", invariance_suite);
  criterion(8, "oracle equivalence", oracle_suite);
  criterion(9, "quotient laws", quotient_suite);
  criterion(10, "invariance-probe soundness", probe_suite);
  return failures ? 1 : 0;
}
