#pragma once

#include <set>
#include <string>

#include "fdl/features.hpp"
#include "fdl/parser.hpp"
#include "fdl/syntax.hpp"

namespace fdl {

/// Named sublanguages of the concept language over a feature set Φ.
enum class Sublanguage {
  Base,        // all constructors except involutive negation
  BasePrime,   // the restricted fragment used for the fuzzy Hennessy–Milner property
  InvNeg,      // Base plus involutive negation
  Delta,       // involutive negation only inside Δ (= ¬¬̃)
  DeltaPrime,  // restricted fragment with Δ, used for the crisp Hennessy–Milner property
};

inline std::string to_string(Sublanguage s) {
  switch (s) {
    case Sublanguage::Base: return "L_Phi";
    case Sublanguage::BasePrime: return "L_Phi_prime";
    case Sublanguage::InvNeg: return "L_Phi_invneg";
    case Sublanguage::Delta: return "L_Phi_delta";
    case Sublanguage::DeltaPrime: return "L_Phi_delta_prime";
  }
  return {};
}

namespace detail {

struct ConstructorUse {
  bool bare_inv_neg = false;  // ¬̃ not directly under ¬
  bool delta_form = false;    // Δ C or ¬¬̃ C
  bool plain_not = false;
  bool disjunction = false;
  bool value_restriction = false;
  bool less_than = false;
  bool complex_role = false;  // anything but r, r⁻, U
  bool general_implies = false;  // C → D with neither side a constant

  void scan(const Role& r) {
    if (r.kind == RoleKind::Name || r.kind == RoleKind::Universal) return;
    if (r.kind == RoleKind::Inverse && r.lhs->kind == RoleKind::Name) return;
    complex_role = true;
    if (r.lhs) scan(*r.lhs);
    if (r.rhs) scan(*r.rhs);
    if (r.test) scan(*r.test);
  }

  void scan(const Concept& c) {
    switch (c.kind) {
      case ConceptKind::Constant:
      case ConceptKind::Name:
      case ConceptKind::Nominal:
      case ConceptKind::SelfLoop: return;
      case ConceptKind::Not:
        if (c.lhs->kind == ConceptKind::InvNeg) {
          delta_form = true;
          return scan(*c.lhs->lhs);
        }
        plain_not = true;
        return scan(*c.lhs);
      case ConceptKind::InvNeg:
        bare_inv_neg = true;
        return scan(*c.lhs);
      case ConceptKind::Delta:
        delta_form = true;
        return scan(*c.lhs);
      case ConceptKind::And:
        scan(*c.lhs);
        return scan(*c.rhs);
      case ConceptKind::Or:
        disjunction = true;
        scan(*c.lhs);
        return scan(*c.rhs);
      case ConceptKind::Implies:
        if (c.lhs->kind != ConceptKind::Constant && c.rhs->kind != ConceptKind::Constant) general_implies = true;
        scan(*c.lhs);
        return scan(*c.rhs);
      case ConceptKind::Forall:
        value_restriction = true;
        scan(*c.role);
        return scan(*c.lhs);
      case ConceptKind::Exists:
      case ConceptKind::AtLeast:
        scan(*c.role);
        if (c.lhs) scan(*c.lhs);
        return;
      case ConceptKind::AtLeastUnq: return scan(*c.role);
      case ConceptKind::Less:
        less_than = true;
        scan(*c.role);
        return scan(*c.lhs);
      case ConceptKind::LessUnq:
        less_than = true;
        return scan(*c.role);
    }
  }
};

}  // namespace detail

/// Every sublanguage whose grammar admits `c` under `features`; empty when
/// `c` uses a construct the feature set does not enable.
inline std::set<Sublanguage> classify_sublanguage(const Concept& c, const FeatureSet& features) {
  std::set<Sublanguage> tags;
  if (!admits(c, features)) return tags;
  detail::ConstructorUse use;
  use.scan(c);

  tags.insert(Sublanguage::InvNeg);
  if (use.bare_inv_neg) return tags;
  tags.insert(Sublanguage::Delta);
  if (!use.delta_form) tags.insert(Sublanguage::Base);

  bool prime = !use.complex_role && !use.disjunction && !use.value_restriction && !use.less_than && !use.plain_not;
  if (!prime) return tags;
  if (!use.general_implies) tags.insert(Sublanguage::DeltaPrime);
  if (!use.delta_form && (!use.general_implies || !features.q_bounds.empty())) tags.insert(Sublanguage::BasePrime);
  return tags;
}

inline bool in_sublanguage(const Concept& c, const FeatureSet& f, Sublanguage s) {
  return classify_sublanguage(c, f).count(s) != 0;
}

}  // namespace fdl
