#pragma once

#include <deque>
#include <vector>

#include "fdl/features.hpp"
#include "fdl/godel.hpp"
#include "fdl/interpretation.hpp"
#include "fdl/print.hpp"
#include "fdl/relation.hpp"
#include "fdl/syntax.hpp"

namespace fdl {

using Extension = std::vector<Degree>;

// One semantic step per quantifier; shared by the evaluator and by the
// extension-level enumeration in the Hennessy–Milner oracle.

/// (∃R.C)(x) = max_y min(R(x,y), C(y)).
inline Extension exists_step(const FuzzyRelation& r, const Extension& c) {
  Extension out(r.row_count());
  for (std::size_t x = 0; x < r.row_count(); ++x)
    for (std::size_t y = 0; y < r.col_count(); ++y) out[x] = disj(out[x], conj(r(x, y), c[y]));
  return out;
}

/// (∀R.C)(x) = min_y (R(x,y) → C(y)).
inline Extension forall_step(const FuzzyRelation& r, const Extension& c) {
  Extension out(r.row_count(), Degree::one());
  for (std::size_t x = 0; x < r.row_count(); ++x)
    for (std::size_t y = 0; y < r.col_count(); ++y) out[x] = conj(out[x], implies(r(x, y), c[y]));
  return out;
}

/// (≥n R.C)(x): the sup over n distinct witnesses of the min of their scores
/// min(R(x,y), C(y)). Scores are independent per y, so the best choice is the
/// n highest-scoring witnesses and the value is the n-th largest score.
inline Extension at_least_step(unsigned n, const FuzzyRelation& r, const Extension& c) {
  Extension out(r.row_count());
  std::vector<Degree> scores(r.col_count());
  for (std::size_t x = 0; x < r.row_count(); ++x) {
    for (std::size_t y = 0; y < r.col_count(); ++y) scores[y] = conj(r(x, y), c[y]);
    out[x] = nth_largest(scores, n);
  }
  return out;
}

/// (<n R.C)(x) is crisp: 1 iff fewer than n witnesses have a positive score.
inline Extension less_step(unsigned n, const FuzzyRelation& r, const Extension& c) {
  Extension out(r.row_count());
  for (std::size_t x = 0; x < r.row_count(); ++x) {
    unsigned positive = 0;
    for (std::size_t y = 0; y < r.col_count(); ++y)
      if (!conj(r(x, y), c[y]).is_zero()) ++positive;
    out[x] = positive < n ? Degree::one() : Degree::zero();
  }
  return out;
}

/// Reflexive–transitive closure in the (max, min) semiring.
inline FuzzyRelation star_closure(FuzzyRelation r) {
  const std::size_t n = r.row_count();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Degree ik = r(i, k);
      if (ik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        Degree via = conj(ik, r(k, j));
        if (r(i, j) < via) r.set(i, j, via);
      }
    }
  for (std::size_t i = 0; i < n; ++i) r.set(i, i, Degree::one());  // empty path
  return r;
}

inline FuzzySet eval_concept(const Interpretation& m, const Concept& c);
inline Extension extension(const Interpretation& m, const Concept& c);

inline FuzzyRelation eval_role(const Interpretation& m, const Role& r) {
  switch (r.kind) {
    case RoleKind::Name: return m.role_relation(r.name);
    case RoleKind::Universal: return FuzzyRelation(m.domain(), m.domain(), Degree::one());
    case RoleKind::Inverse: return rel_inverse(eval_role(m, *r.lhs));
    case RoleKind::Compose: return rel_compose(eval_role(m, *r.lhs), eval_role(m, *r.rhs));
    case RoleKind::Union: return rel_sup({eval_role(m, *r.lhs), eval_role(m, *r.rhs)});
    case RoleKind::Star: return star_closure(eval_role(m, *r.lhs));
    case RoleKind::Test: {
      FuzzyRelation out(m.domain(), m.domain());
      Extension c = extension(m, *r.test);
      for (std::size_t i = 0; i < m.size(); ++i) out.set(i, i, c[i]);
      return out;
    }
  }
  return {};
}

inline Extension extension(const Interpretation& m, const Concept& c) {
  const std::size_t n = m.size();
  auto unary = [&](auto op) {
    Extension v = extension(m, *c.lhs);
    for (auto& d : v) d = op(d);
    return v;
  };
  auto binary = [&](auto op) {
    Extension a = extension(m, *c.lhs), b = extension(m, *c.rhs);
    for (std::size_t i = 0; i < n; ++i) a[i] = op(a[i], b[i]);
    return a;
  };
  switch (c.kind) {
    case ConceptKind::Constant: return Extension(n, c.value);
    case ConceptKind::Name: return m.concept_values(c.name);
    case ConceptKind::Nominal: {
      Extension v(n);
      v[m.individual(c.name)] = Degree::one();
      return v;
    }
    case ConceptKind::Not: return unary([](Degree p) { return neg(p); });
    case ConceptKind::InvNeg: return unary([](Degree p) { return inv_neg(p); });
    case ConceptKind::Delta: return unary([](Degree p) { return delta(p); });
    case ConceptKind::And: return binary([](Degree p, Degree q) { return conj(p, q); });
    case ConceptKind::Or: return binary([](Degree p, Degree q) { return disj(p, q); });
    case ConceptKind::Implies: return binary([](Degree p, Degree q) { return implies(p, q); });
    case ConceptKind::Exists: return exists_step(eval_role(m, *c.role), extension(m, *c.lhs));
    case ConceptKind::Forall: return forall_step(eval_role(m, *c.role), extension(m, *c.lhs));
    case ConceptKind::SelfLoop: {
      Extension v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = m.role_value(c.name, i, i);
      return v;
    }
    case ConceptKind::AtLeast: return at_least_step(c.n, eval_role(m, *c.role), extension(m, *c.lhs));
    case ConceptKind::Less: return less_step(c.n, eval_role(m, *c.role), extension(m, *c.lhs));
    case ConceptKind::AtLeastUnq: return at_least_step(c.n, eval_role(m, *c.role), Extension(n, Degree::one()));
    case ConceptKind::LessUnq: return less_step(c.n, eval_role(m, *c.role), Extension(n, Degree::one()));
  }
  return {};
}

inline FuzzySet eval_concept(const Interpretation& m, const Concept& c) { return {m.domain(), extension(m, c)}; }
inline FuzzySet eval_concept(const Interpretation& m, const ConceptPtr& c) { return eval_concept(m, *c); }
inline FuzzyRelation eval_role(const Interpretation& m, const RolePtr& r) { return eval_role(m, *r); }

/// Basic roles w.r.t. Φ over the given role names: each r, and r⁻ when I ∈ Φ.
inline std::vector<RolePtr> basic_roles(const Labels& role_names, const FeatureSet& f) {
  std::vector<RolePtr> out;
  for (const auto& r : role_names) {
    out.push_back(ast::role(r));
    if (f.inverse) out.push_back(ast::inverse(ast::role(r)));
  }
  return out;
}

struct Reachability {
  std::vector<bool> reachable;  // by domain index
  bool connected = false;

  Labels elements(const Interpretation& m) const {
    Labels out;
    for (std::size_t i = 0; i < reachable.size(); ++i)
      if (reachable[i]) out.push_back(m.domain()[i]);
    return out;
  }
};

/// Elements reachable from a named individual along positive-degree basic
/// roles (inverse edges count only when I ∈ Φ).
inline Reachability reachability(const Interpretation& m, const FeatureSet& f) {
  Reachability out;
  out.reachable.assign(m.size(), false);
  std::deque<std::size_t> queue;
  for (const auto& [_, x] : m.individuals())
    if (!out.reachable[x]) {
      out.reachable[x] = true;
      queue.push_back(x);
    }
  std::vector<FuzzyRelation> roles;
  for (const auto& r : basic_roles(m.role_names(), f)) roles.push_back(eval_role(m, *r));
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& r : roles)
      for (std::size_t y = 0; y < m.size(); ++y)
        if (!r(x, y).is_zero() && !out.reachable[y]) {
          out.reachable[y] = true;
          queue.push_back(y);
        }
  }
  out.connected = std::all_of(out.reachable.begin(), out.reachable.end(), [](bool b) { return b; });
  return out;
}

}  // namespace fdl
