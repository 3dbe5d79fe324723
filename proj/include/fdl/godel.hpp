#pragma once

#include <algorithm>
#include <optional>
#include <string_view>

#include "fdl/degree.hpp"

namespace fdl {

// Gödel operators. All of them except inv_neg only ever *select* one of
// their arguments or a crisp value, which is what keeps every fixpoint in
// this library inside a finite value set.

constexpr Degree conj(Degree p, Degree q) noexcept { return std::min(p, q); }
constexpr Degree disj(Degree p, Degree q) noexcept { return std::max(p, q); }
constexpr Degree neg(Degree p) noexcept { return p.is_zero() ? Degree::one() : Degree::zero(); }
constexpr Degree implies(Degree p, Degree q) noexcept { return p <= q ? Degree::one() : q; }
constexpr Degree iff(Degree p, Degree q) noexcept { return p == q ? Degree::one() : std::min(p, q); }
constexpr Degree inv_neg(Degree p) noexcept { return p.complement(); }
/// Baaz projection.
constexpr Degree delta(Degree p) noexcept { return p.is_one() ? Degree::one() : Degree::zero(); }

enum class Connective { And, Or, Neg, Implies, Iff, InvNeg, Delta };

constexpr bool is_binary(Connective c) noexcept {
  return c == Connective::And || c == Connective::Or || c == Connective::Implies || c == Connective::Iff;
}

inline Connective parse_connective(std::string_view name) {
  if (name == "and") return Connective::And;
  if (name == "or") return Connective::Or;
  if (name == "neg" || name == "not") return Connective::Neg;
  if (name == "implies") return Connective::Implies;
  if (name == "iff") return Connective::Iff;
  if (name == "inv_neg" || name == "inv") return Connective::InvNeg;
  if (name == "delta") return Connective::Delta;
  throw UsageError("unknown connective '" + std::string(name) + "'");
}

inline Degree godel_apply(Connective c, Degree p, std::optional<Degree> q = std::nullopt) {
  if (is_binary(c) != q.has_value())
    throw UsageError(is_binary(c) ? "binary connective needs two operands"
                                  : "unary connective takes one operand");
  switch (c) {
    case Connective::And: return conj(p, *q);
    case Connective::Or: return disj(p, *q);
    case Connective::Neg: return neg(p);
    case Connective::Implies: return implies(p, *q);
    case Connective::Iff: return iff(p, *q);
    case Connective::InvNeg: return inv_neg(p);
    case Connective::Delta: return delta(p);
  }
  return p;
}

}  // namespace fdl
