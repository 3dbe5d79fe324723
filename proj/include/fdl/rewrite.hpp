#pragma once

#include "fdl/syntax.hpp"

namespace fdl {

inline ConceptPtr inverse_normal_form(const ConceptPtr& c);

namespace detail {

// Normal form of r when `inverted` is false, of r⁻ otherwise.
inline RolePtr push_inverse(const RolePtr& r, bool inverted) {
  switch (r->kind) {
    case RoleKind::Name: return inverted ? ast::inverse(r) : r;
    case RoleKind::Universal: return r;
    case RoleKind::Inverse: return push_inverse(r->lhs, !inverted);
    case RoleKind::Star: return ast::star(push_inverse(r->lhs, inverted));
    case RoleKind::Union: return ast::role_union(push_inverse(r->lhs, inverted), push_inverse(r->rhs, inverted));
    case RoleKind::Compose:
      return inverted ? ast::compose(push_inverse(r->rhs, true), push_inverse(r->lhs, true))
                      : ast::compose(push_inverse(r->lhs, false), push_inverse(r->rhs, false));
    case RoleKind::Test: return ast::test(inverse_normal_form(r->test));
  }
  return r;
}

}  // namespace detail

/// Rewrites so that inverse is applied only to role names:
/// U⁻ = U, (R⁻)⁻ = R, (R∘S)⁻ = S⁻∘R⁻, (R⊔S)⁻ = R⁻⊔S⁻, (C?)⁻ = C?, (R*)⁻ = (R⁻)*.
inline RolePtr inverse_normal_form(const RolePtr& r) { return detail::push_inverse(r, false); }

/// Applies the role normal form to every role inside a concept.
inline ConceptPtr inverse_normal_form(const ConceptPtr& c) {
  Concept out = *c;
  if (c->role) out.role = inverse_normal_form(c->role);
  if (c->lhs) out.lhs = inverse_normal_form(c->lhs);
  if (c->rhs) out.rhs = inverse_normal_form(c->rhs);
  return std::make_shared<const Concept>(std::move(out));
}

inline RolePtr rewrite_definable(const RolePtr& r);

/// Eliminates ¬ and ⊔ bottom-up:
///   ¬C ↦ C → 0,   C ⊔ D ↦ ((C → D) → D) ⊓ ((D → C) → C).
/// Involutive negation and Δ are kept.
inline ConceptPtr rewrite_definable(const ConceptPtr& c) {
  Concept node = *c;
  if (c->role) node.role = rewrite_definable(c->role);
  if (c->lhs) node.lhs = rewrite_definable(c->lhs);
  if (c->rhs) node.rhs = rewrite_definable(c->rhs);
  if (node.kind == ConceptKind::Not) return ast::implies(node.lhs, ast::bottom());
  if (node.kind == ConceptKind::Or) {
    const auto& a = node.lhs;
    const auto& b = node.rhs;
    return ast::and_(ast::implies(ast::implies(a, b), b), ast::implies(ast::implies(b, a), a));
  }
  return std::make_shared<const Concept>(std::move(node));
}

inline RolePtr rewrite_definable(const RolePtr& r) {
  switch (r->kind) {
    case RoleKind::Name:
    case RoleKind::Universal: return r;
    case RoleKind::Inverse: return ast::inverse(rewrite_definable(r->lhs));
    case RoleKind::Star: return ast::star(rewrite_definable(r->lhs));
    case RoleKind::Compose: return ast::compose(rewrite_definable(r->lhs), rewrite_definable(r->rhs));
    case RoleKind::Union: return ast::role_union(rewrite_definable(r->lhs), rewrite_definable(r->rhs));
    case RoleKind::Test: return ast::test(rewrite_definable(r->test));
  }
  return r;
}

}  // namespace fdl
