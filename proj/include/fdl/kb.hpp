#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdl/bisim.hpp"
#include "fdl/enumerate.hpp"
#include "fdl/eval.hpp"
#include "fdl/parser.hpp"
#include "fdl/print.hpp"
#include "fdl/sublanguage.hpp"

namespace fdl {

enum class Comparison { Ge, Gt, Le, Lt };

inline std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Ge: return ">=";
    case Comparison::Gt: return ">";
    case Comparison::Le: return "<=";
    case Comparison::Lt: return "<";
  }
  return {};
}

inline Comparison parse_comparison(const std::string& s) {
  if (s == ">=") return Comparison::Ge;
  if (s == ">") return Comparison::Gt;
  if (s == "<=") return Comparison::Le;
  if (s == "<") return Comparison::Lt;
  throw InputError("unknown comparison '" + s + "'");
}

inline bool compare(Degree v, Comparison c, Degree p) {
  switch (c) {
    case Comparison::Ge: return v >= p;
    case Comparison::Gt: return v > p;
    case Comparison::Le: return v <= p;
    case Comparison::Lt: return v < p;
  }
  return false;
}

/// a ≐ b, a ≭ b, C(a) ⋈ p or R(a,b) ⋈ p.
struct FuzzyAssertion {
  enum class Kind { Same, Distinct, Concept, Role };
  Kind kind = Kind::Concept;
  std::string a, b;
  ConceptPtr expr;  // Concept
  RolePtr role;      // Role
  Comparison cmp = Comparison::Ge;
  Degree p;

  static FuzzyAssertion same(std::string a, std::string b) {
    return {Kind::Same, std::move(a), std::move(b), nullptr, nullptr, Comparison::Ge, Degree{}};
  }
  static FuzzyAssertion distinct(std::string a, std::string b) {
    return {Kind::Distinct, std::move(a), std::move(b), nullptr, nullptr, Comparison::Ge, Degree{}};
  }
  static FuzzyAssertion of_concept(ConceptPtr c, std::string a, Comparison cmp, Degree p) {
    return {Kind::Concept, std::move(a), {}, std::move(c), nullptr, cmp, p};
  }
  static FuzzyAssertion of_role(RolePtr r, std::string a, std::string b, Comparison cmp, Degree p) {
    return {Kind::Role, std::move(a), std::move(b), nullptr, std::move(r), cmp, p};
  }
};

/// (C ⊑ D) ▷ p with ▷ ∈ {≥, >} and p ∈ (0,1].
struct FuzzyGCI {
  ConceptPtr lhs, rhs;
  bool strict = false;
  Degree p = Degree::one();

  FuzzyGCI() = default;
  FuzzyGCI(ConceptPtr c, ConceptPtr d, bool strict_, Degree p_) : lhs(std::move(c)), rhs(std::move(d)), strict(strict_), p(p_) {
    if (p.is_zero()) throw InputError("the degree of a GCI must be positive");
  }
};

struct KnowledgeBase {
  std::vector<FuzzyGCI> tbox;
  std::vector<FuzzyAssertion> abox;
};

inline std::string to_string(const FuzzyAssertion& f) {
  switch (f.kind) {
    case FuzzyAssertion::Kind::Same: return f.a + " = " + f.b;
    case FuzzyAssertion::Kind::Distinct: return f.a + " != " + f.b;
    case FuzzyAssertion::Kind::Concept:
      return "(" + to_string(*f.expr) + ")(" + f.a + ") " + to_string(f.cmp) + " " + f.p.to_string();
    case FuzzyAssertion::Kind::Role:
      return "(" + to_string(*f.role) + ")(" + f.a + ", " + f.b + ") " + to_string(f.cmp) + " " + f.p.to_string();
  }
  return {};
}

inline std::string to_string(const FuzzyGCI& g) {
  return "(" + to_string(*g.lhs) + " <= " + to_string(*g.rhs) + ") " + (g.strict ? ">" : ">=") + " " +
         g.p.to_string();
}

inline bool holds(const Interpretation& m, const FuzzyAssertion& f) {
  switch (f.kind) {
    case FuzzyAssertion::Kind::Same: return m.individual(f.a) == m.individual(f.b);
    case FuzzyAssertion::Kind::Distinct: return m.individual(f.a) != m.individual(f.b);
    case FuzzyAssertion::Kind::Concept: return compare(extension(m, *f.expr)[m.individual(f.a)], f.cmp, f.p);
    case FuzzyAssertion::Kind::Role: {
      std::size_t x = m.individual(f.a), y = m.individual(f.b);
      return compare(eval_role(m, *f.role)(x, y), f.cmp, f.p);
    }
  }
  return false;
}

/// First element where (C → D)(x) ▷ p fails, if any.
inline std::optional<std::size_t> gci_counterexample(const Interpretation& m, const FuzzyGCI& g) {
  Extension v = extension(m, *ast::implies(g.lhs, g.rhs));
  for (std::size_t x = 0; x < v.size(); ++x)
    if (g.strict ? !(v[x] > g.p) : !(v[x] >= g.p)) return x;
  return std::nullopt;
}

inline bool holds(const Interpretation& m, const FuzzyGCI& g) { return !gci_counterexample(m, g); }

struct ValidationResult {
  bool valid = true;
  std::optional<std::string> failing_item;
  std::optional<std::string> element;  // for GCIs
};

inline ValidationResult validates(const Interpretation& m, const std::vector<FuzzyGCI>& tbox) {
  for (const auto& g : tbox)
    if (auto x = gci_counterexample(m, g)) return {false, to_string(g), m.domain()[*x]};
  return {};
}

inline ValidationResult validates(const Interpretation& m, const std::vector<FuzzyAssertion>& abox) {
  for (const auto& f : abox)
    if (!holds(m, f)) return {false, to_string(f), std::nullopt};
  return {};
}

inline ValidationResult validates(const Interpretation& m, const KnowledgeBase& kb) {
  auto t = validates(m, kb.tbox);
  return t.valid ? validates(m, kb.abox) : t;
}

// ---------------------------------------------------------------------------
// Hennessy–Milner oracle

namespace detail {

// Enumeration policy that evaluates on both interpretations at once and
// identifies concepts with equal extensions: a concept whose extension pair
// was already seen cannot change any iff value or any later composition.
class ExtensionPolicy {
 public:
  using Value = std::vector<Degree>;  // left domain, then right domain
  using Key = Value;

  ExtensionPolicy(const Interpretation& l, const Interpretation& r) : l_(&l), r_(&r) {}

  Value leaf(const ConceptPtr& c) const { return join(extension(*l_, *c), extension(*r_, *c)); }
  Value conj(const Value& a, const Value& b) const { return zip(a, b, [](Degree p, Degree q) { return fdl::conj(p, q); }); }
  Value implies(const Value& a, const Value& b) const {
    return zip(a, b, [](Degree p, Degree q) { return fdl::implies(p, q); });
  }
  Value delta(const Value& a) const {
    Value out = a;
    for (auto& d : out) d = fdl::delta(d);
    return out;
  }
  Value exists(const RolePtr& r, const Value& a) const {
    const auto& [lr, rr] = roles(r);
    return join(exists_step(lr, left(a)), exists_step(rr, right(a)));
  }
  Value at_least(unsigned n, const RolePtr& r, const Value& a) const {
    const auto& [lr, rr] = roles(r);
    return join(at_least_step(n, lr, left(a)), at_least_step(n, rr, right(a)));
  }
  Key key(const Value& v) const { return v; }

  Extension left(const Value& v) const { return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l_->size())}; }
  Extension right(const Value& v) const { return {v.begin() + static_cast<std::ptrdiff_t>(l_->size()), v.end()}; }

 private:
  static Value join(Extension a, const Extension& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  template <class Op>
  static Value zip(const Value& a, const Value& b, Op op) {
    Value out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
  }
  const std::pair<FuzzyRelation, FuzzyRelation>& roles(const RolePtr& r) const {
    std::string k = to_string(*r);
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, std::pair{eval_role(*l_, *r), eval_role(*r_, *r)}).first;
    return it->second;
  }

  const Interpretation* l_;
  const Interpretation* r_;
  mutable std::map<std::string, std::pair<FuzzyRelation, FuzzyRelation>> cache_;
};

}  // namespace detail

struct HmResult {
  FuzzyRelation matrix;
  std::vector<std::optional<ConceptPtr>> separators;  // row-major
  unsigned depth = 0;           // levels actually built
  bool saturated = false;       // no new extensions appeared at the last level
  bool reached_bisimulation = false;
  std::size_t concepts = 0;     // extension-distinct concepts examined

  const std::optional<ConceptPtr>& separator(std::size_t x, std::size_t x2) const {
    return separators[x * matrix.col_count() + x2];
  }
};

/// Indistinguishability by the fragment's concepts up to the given height:
///   BasePrime  → min over C of (C(x) ⇔ C′(x′))
///   DeltaPrime → 1 iff every C agrees at x and x′, else 0.
/// Concepts are explored in enumeration order with extension-level dedup.
/// Stops early once the matrix meets the greatest bisimulation (its lower
/// bound) — in the crisp case also requiring each separated pair to have a
/// separator with values exactly 0 and 1, preferred when one exists.
inline HmResult hm_matrix(const Interpretation& l, const Interpretation& r, const FeatureSet& features,
                          Sublanguage fragment, unsigned depth, std::size_t budget = 200000) {
  require_same_individuals(l, r);
  const bool crisp = fragment == Sublanguage::DeltaPrime;
  auto [cnames, rnames] = joint_names(l, r);
  Signature sig{cnames, rnames, l.individual_names()};
  FragmentGenerator<detail::ExtensionPolicy> gen(detail::ExtensionPolicy(l, r), features, sig,
                                                 ValueUniverse::of(l, r).values, fragment, budget);

  const FuzzyRelation lower = greatest_bisim(l, r, features, crisp ? Mode::Crisp : Mode::Fuzzy).z;
  const std::size_t nl = l.size(), nr = r.size();
  HmResult out{FuzzyRelation(l.domain(), r.domain(), Degree::one()), std::vector<std::optional<ConceptPtr>>(nl * nr)};
  std::vector<bool> crisp_separated(nl * nr, false);

  auto absorb = [&](std::size_t from) {
    const auto& items = gen.items();
    for (std::size_t k = from; k < items.size(); ++k) {
      const auto& v = items[k].value;
      for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t x2 = 0; x2 < nr; ++x2) {
          Degree a = v[x], b = v[nl + x2];
          std::size_t p = x * nr + x2;
          if (!crisp) {
            Degree e = iff(a, b);
            if (e < out.matrix(x, x2)) {
              out.matrix.set(x, x2, e);
              out.separators[p] = items[k].expr;
            }
          } else if (a != b) {
            bool sharp = a.is_crisp() && b.is_crisp();
            if (out.matrix(x, x2).is_one()) {
              out.matrix.set(x, x2, Degree::zero());
              out.separators[p] = items[k].expr;
              crisp_separated[p] = sharp;
            } else if (sharp && !crisp_separated[p]) {
              out.separators[p] = items[k].expr;
              crisp_separated[p] = true;
            }
          }
        }
    }
    out.concepts = items.size();
  };
  auto done = [&] {
    if (out.matrix != lower) return false;
    if (crisp)
      for (std::size_t p = 0; p < nl * nr; ++p)
        if (out.separators[p] && !crisp_separated[p]) return false;
    return true;
  };

  absorb(0);
  while (!done() && gen.depth() < depth) {
    std::size_t before = gen.items().size();
    if (!gen.grow()) {
      out.saturated = true;
      break;
    }
    absorb(before);
  }
  out.depth = gen.depth();
  out.reached_bisimulation = out.matrix == lower;
  return out;
}

// ---------------------------------------------------------------------------
// Invariance probe

struct ProbeReport {
  bool bisimilarity_defined = true;  // false when no individuals are named
  bool bisimilar = false;
  bool applicable = false;
  std::vector<std::string> notes;  // why the invariance results do or do not apply
  bool valid_left = false, valid_right = false;
  bool agree = false;
  bool violation = false;  // bisimilar ∧ applicable ∧ ¬agree
};

namespace detail {

inline bool role_in(const Role& r, const FeatureSet& f, Sublanguage s) {
  // Roles carry concepts only inside tests; wrap as ∃R.1 to reuse the classifier.
  return in_sublanguage(*ast::exists(std::make_shared<const Role>(r), ast::top()), f, s);
}

}  // namespace detail

/// Checks one instance of the invariance results: when the two models are
/// (strongly) Φ-bisimilar and the box meets the side conditions, both models
/// must agree on validating it.
inline ProbeReport invariance_probe(const Interpretation& l, const Interpretation& r, const FeatureSet& features,
                                    Mode mode, const KnowledgeBase& kb) {
  ProbeReport rep;
  const Sublanguage lang = mode == Mode::Fuzzy ? Sublanguage::Base : Sublanguage::InvNeg;
  const std::string lang_name = mode == Mode::Fuzzy ? "L_Phi" : "L_Phi_invneg";

  if (l.individuals().empty() || r.individuals().empty()) {
    rep.bisimilarity_defined = false;
    rep.notes.push_back("no named individuals: bisimilarity of the models is undefined");
  } else {
    rep.bisimilar = bisimilar(l, r, features, mode).holds;
  }

  bool in_fragment = true;
  for (const auto& g : kb.tbox)
    if (!in_sublanguage(*g.lhs, features, lang) || !in_sublanguage(*g.rhs, features, lang)) {
      in_fragment = false;
      rep.notes.push_back("outside fragment " + lang_name + ": " + to_string(g));
    }
  bool only_concept_assertions = true;
  for (const auto& f : kb.abox) {
    if (f.kind != FuzzyAssertion::Kind::Concept) only_concept_assertions = false;
    bool ok = f.kind == FuzzyAssertion::Kind::Concept ? in_sublanguage(*f.expr, features, lang)
              : f.kind == FuzzyAssertion::Kind::Role  ? detail::role_in(*f.role, features, lang)
                                                      : true;
    if (!ok) {
      in_fragment = false;
      rep.notes.push_back("outside fragment " + lang_name + ": " + to_string(f));
    }
  }

  bool tbox_ok = true, abox_ok = true;
  if (!kb.tbox.empty() && !features.universal) {
    bool connected = mode == Mode::Crisp && reachability(l, features).connected && reachability(r, features).connected;
    tbox_ok = connected;
    rep.notes.push_back(connected ? "TBox: U not in features, but both models are connected"
                                  : "TBox: needs U in features (or crisp mode with connected models)");
  }
  if (!kb.abox.empty() && !features.nominals && !only_concept_assertions) {
    abox_ok = false;
    rep.notes.push_back("ABox: needs O in features or only concept assertions");
  }
  rep.applicable = rep.bisimilarity_defined && in_fragment && tbox_ok && abox_ok;

  rep.valid_left = validates(l, kb).valid;
  rep.valid_right = validates(r, kb).valid;
  rep.agree = rep.valid_left == rep.valid_right;
  rep.violation = rep.bisimilar && rep.applicable && !rep.agree;
  if (rep.violation) rep.notes.push_back("THEOREM-VIOLATION");
  return rep;
}

}  // namespace fdl
