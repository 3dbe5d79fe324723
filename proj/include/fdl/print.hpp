#pragma once

#include <string>

#include "fdl/syntax.hpp"

namespace fdl {

inline std::string to_string(const Concept& c);
inline std::string to_string(const Role& r);

namespace detail {

inline bool is_atomic(const Concept& c) {
  return c.kind == ConceptKind::Constant || c.kind == ConceptKind::Name || c.kind == ConceptKind::Nominal;
}

inline std::string wrap(const Concept& c) {
  return is_atomic(c) ? to_string(c) : "(" + to_string(c) + ")";
}

inline std::string wrap(const Role& r) {
  return r.kind == RoleKind::Name || r.kind == RoleKind::Universal ? to_string(r) : "(" + to_string(r) + ")";
}

}  // namespace detail

/// Deterministic rendering in the concrete grammar; parse(to_string(c))
/// reproduces c exactly.
inline std::string to_string(const Role& r) {
  using detail::wrap;
  switch (r.kind) {
    case RoleKind::Name: return r.name;
    case RoleKind::Universal: return "U";
    case RoleKind::Inverse: return wrap(*r.lhs) + "-";
    case RoleKind::Star: return wrap(*r.lhs) + "*";
    case RoleKind::Compose: return wrap(*r.lhs) + " ; " + wrap(*r.rhs);
    case RoleKind::Union: return wrap(*r.lhs) + " | " + wrap(*r.rhs);
    case RoleKind::Test: return wrap(*r.test) + "?";
  }
  return {};
}

inline std::string to_string(const Concept& c) {
  using detail::wrap;
  switch (c.kind) {
    case ConceptKind::Constant: return c.value.to_string();
    case ConceptKind::Name: return c.name;
    case ConceptKind::Nominal: return "{" + c.name + "}";
    case ConceptKind::Not: return "not " + wrap(*c.lhs);
    case ConceptKind::InvNeg: return "inv " + wrap(*c.lhs);
    case ConceptKind::Delta: return "delta " + wrap(*c.lhs);
    case ConceptKind::And: return wrap(*c.lhs) + " and " + wrap(*c.rhs);
    case ConceptKind::Or: return wrap(*c.lhs) + " or " + wrap(*c.rhs);
    case ConceptKind::Implies: return wrap(*c.lhs) + " -> " + wrap(*c.rhs);
    case ConceptKind::Exists: return "exists " + to_string(*c.role) + " . " + wrap(*c.lhs);
    case ConceptKind::Forall: return "forall " + to_string(*c.role) + " . " + wrap(*c.lhs);
    case ConceptKind::SelfLoop: return "exists " + c.name + " . self";
    case ConceptKind::AtLeast:
      return ">= " + std::to_string(c.n) + " " + to_string(*c.role) + " . " + wrap(*c.lhs);
    case ConceptKind::Less:
      return "< " + std::to_string(c.n) + " " + to_string(*c.role) + " . " + wrap(*c.lhs);
    case ConceptKind::AtLeastUnq: return ">= " + std::to_string(c.n) + " " + to_string(*c.role);
    case ConceptKind::LessUnq: return "< " + std::to_string(c.n) + " " + to_string(*c.role);
  }
  return {};
}

inline std::string to_string(const ConceptPtr& c) { return to_string(*c); }
inline std::string to_string(const RolePtr& r) { return to_string(*r); }

}  // namespace fdl
