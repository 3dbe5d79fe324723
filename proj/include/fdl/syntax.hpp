#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "fdl/degree.hpp"

namespace fdl {

struct Role;
struct Concept;
using RolePtr = std::shared_ptr<const Role>;
using ConceptPtr = std::shared_ptr<const Concept>;

enum class RoleKind { Name, Inverse, Universal, Compose, Union, Star, Test };

/// Role expression. Immutable once built; share subtrees freely.
struct Role {
  RoleKind kind;
  std::string name;  // Name
  RolePtr lhs;       // Inverse, Compose, Union, Star
  RolePtr rhs;       // Compose, Union
  ConceptPtr test;   // Test

  /// A role name, or the inverse of one.
  bool is_basic() const noexcept {
    return kind == RoleKind::Name || (kind == RoleKind::Inverse && lhs->kind == RoleKind::Name);
  }
};

enum class ConceptKind {
  Constant,
  Name,
  Nominal,
  Not,
  InvNeg,
  Delta,  // Δ C, i.e. ¬ ¬̃ C
  And,
  Or,
  Implies,
  Exists,
  Forall,
  SelfLoop,
  AtLeast,     // ≥ n R.C
  Less,        // < n R.C
  AtLeastUnq,  // ≥ n R
  LessUnq,     // < n R
};

/// Concept expression. Immutable once built.
struct Concept {
  ConceptKind kind;
  Degree value;      // Constant
  std::string name;  // Name, Nominal (individual), SelfLoop (role name)
  unsigned n = 0;    // number restrictions
  RolePtr role;      // Exists, Forall, number restrictions
  ConceptPtr lhs;    // unary operand / left operand / filler
  ConceptPtr rhs;    // right operand
};

inline bool equal(const Role& a, const Role& b);
inline bool equal(const Concept& a, const Concept& b);

inline bool equal(const RolePtr& a, const RolePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}
inline bool equal(const ConceptPtr& a, const ConceptPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

inline bool equal(const Role& a, const Role& b) {
  return a.kind == b.kind && a.name == b.name && equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs) &&
         equal(a.test, b.test);
}
inline bool equal(const Concept& a, const Concept& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.n == b.n &&
         equal(a.role, b.role) && equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

namespace ast {

inline RolePtr role(std::string name) {
  return std::make_shared<const Role>(Role{RoleKind::Name, std::move(name), nullptr, nullptr, nullptr});
}
inline RolePtr inverse(RolePtr r) {
  return std::make_shared<const Role>(Role{RoleKind::Inverse, {}, std::move(r), nullptr, nullptr});
}
inline RolePtr universal() {
  return std::make_shared<const Role>(Role{RoleKind::Universal, {}, nullptr, nullptr, nullptr});
}
inline RolePtr compose(RolePtr r, RolePtr s) {
  return std::make_shared<const Role>(Role{RoleKind::Compose, {}, std::move(r), std::move(s), nullptr});
}
inline RolePtr role_union(RolePtr r, RolePtr s) {
  return std::make_shared<const Role>(Role{RoleKind::Union, {}, std::move(r), std::move(s), nullptr});
}
inline RolePtr star(RolePtr r) {
  return std::make_shared<const Role>(Role{RoleKind::Star, {}, std::move(r), nullptr, nullptr});
}
/// R+ = R ; R*.
inline RolePtr plus(const RolePtr& r) { return compose(r, star(r)); }
inline RolePtr test(ConceptPtr c) {
  return std::make_shared<const Role>(Role{RoleKind::Test, {}, nullptr, nullptr, std::move(c)});
}

namespace detail {
inline ConceptPtr make(ConceptKind k, ConceptPtr l = nullptr, ConceptPtr r = nullptr, RolePtr role = nullptr,
                       unsigned n = 0, std::string name = {}, Degree value = {}) {
  return std::make_shared<const Concept>(
      Concept{k, value, std::move(name), n, std::move(role), std::move(l), std::move(r)});
}
}  // namespace detail

inline ConceptPtr constant(Degree d) { return detail::make(ConceptKind::Constant, {}, {}, {}, 0, {}, d); }
inline ConceptPtr top() { return constant(Degree::one()); }
inline ConceptPtr bottom() { return constant(Degree::zero()); }
inline ConceptPtr concept_name(std::string a) { return detail::make(ConceptKind::Name, {}, {}, {}, 0, std::move(a)); }
inline ConceptPtr nominal(std::string a) { return detail::make(ConceptKind::Nominal, {}, {}, {}, 0, std::move(a)); }
inline ConceptPtr not_(ConceptPtr c) { return detail::make(ConceptKind::Not, std::move(c)); }
inline ConceptPtr inv_neg(ConceptPtr c) { return detail::make(ConceptKind::InvNeg, std::move(c)); }
inline ConceptPtr delta(ConceptPtr c) { return detail::make(ConceptKind::Delta, std::move(c)); }
inline ConceptPtr and_(ConceptPtr c, ConceptPtr d) { return detail::make(ConceptKind::And, std::move(c), std::move(d)); }
inline ConceptPtr or_(ConceptPtr c, ConceptPtr d) { return detail::make(ConceptKind::Or, std::move(c), std::move(d)); }
inline ConceptPtr implies(ConceptPtr c, ConceptPtr d) {
  return detail::make(ConceptKind::Implies, std::move(c), std::move(d));
}
inline ConceptPtr exists(RolePtr r, ConceptPtr c) {
  return detail::make(ConceptKind::Exists, std::move(c), nullptr, std::move(r));
}
inline ConceptPtr forall(RolePtr r, ConceptPtr c) {
  return detail::make(ConceptKind::Forall, std::move(c), nullptr, std::move(r));
}
inline ConceptPtr self_loop(std::string r) { return detail::make(ConceptKind::SelfLoop, {}, {}, {}, 0, std::move(r)); }
inline ConceptPtr at_least(unsigned n, RolePtr r, ConceptPtr c) {
  return detail::make(ConceptKind::AtLeast, std::move(c), nullptr, std::move(r), n);
}
inline ConceptPtr less_than(unsigned n, RolePtr r, ConceptPtr c) {
  return detail::make(ConceptKind::Less, std::move(c), nullptr, std::move(r), n);
}
inline ConceptPtr at_least(unsigned n, RolePtr r) {
  return detail::make(ConceptKind::AtLeastUnq, nullptr, nullptr, std::move(r), n);
}
inline ConceptPtr less_than(unsigned n, RolePtr r) {
  return detail::make(ConceptKind::LessUnq, nullptr, nullptr, std::move(r), n);
}

}  // namespace ast

/// AST height: leaves are 0.
inline unsigned height(const Role& r);
inline unsigned height(const Concept& c) {
  switch (c.kind) {
    case ConceptKind::Constant:
    case ConceptKind::Name:
    case ConceptKind::Nominal:
    case ConceptKind::SelfLoop:
    case ConceptKind::AtLeastUnq:
    case ConceptKind::LessUnq:
      return 0;
    case ConceptKind::Not:
    case ConceptKind::InvNeg:
    case ConceptKind::Delta:
      return 1 + height(*c.lhs);
    case ConceptKind::And:
    case ConceptKind::Or:
    case ConceptKind::Implies:
      return 1 + std::max(height(*c.lhs), height(*c.rhs));
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtLeast:
    case ConceptKind::Less:
      return 1 + height(*c.lhs);
  }
  return 0;
}
inline unsigned height(const Role& r) {
  switch (r.kind) {
    case RoleKind::Name:
    case RoleKind::Universal:
      return 0;
    case RoleKind::Inverse:
    case RoleKind::Star:
      return 1 + height(*r.lhs);
    case RoleKind::Compose:
    case RoleKind::Union:
      return 1 + std::max(height(*r.lhs), height(*r.rhs));
    case RoleKind::Test:
      return 1 + height(*r.test);
  }
  return 0;
}

}  // namespace fdl
