#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fdl/error.hpp"
#include "fdl/features.hpp"
#include "fdl/print.hpp"
#include "fdl/relation.hpp"
#include "fdl/sublanguage.hpp"
#include "fdl/syntax.hpp"

namespace fdl {

/// Names available to the enumerator.
struct Signature {
  Labels concepts;
  Labels roles;
  Labels individuals;
};

/// Level-by-level generator for the two Hennessy–Milner fragments.
///
/// Level k holds the concepts of height k; every level-k concept has at least
/// one level-(k-1) child, so nothing is produced twice by construction except
/// what the policy deduplicates. The policy supplies a value per concept and a
/// key; a concept whose key was already seen is dropped.
///
/// Policy interface:
///   using Value; using Key;
///   Value leaf(const ConceptPtr&);
///   Value conj(const Value&, const Value&);
///   Value implies(const Value&, const Value&);
///   Value exists(const RolePtr&, const Value&);          // basic role or U
///   Value at_least(unsigned, const RolePtr&, const Value&);
///   Value delta(const Value&);
///   Key key(const Value&);
template <class Policy>
class FragmentGenerator {
 public:
  using Value = typename Policy::Value;
  using Key = typename Policy::Key;

  struct Item {
    ConceptPtr expr;
    Value value;
  };

  FragmentGenerator(Policy policy, FeatureSet features, const Signature& sig, std::vector<Degree> constants,
                    Sublanguage fragment, std::size_t budget)
      : policy_(std::move(policy)), features_(std::move(features)), fragment_(fragment), budget_(budget) {
    if (fragment != Sublanguage::BasePrime && fragment != Sublanguage::DeltaPrime)
      throw UsageError("enumeration supports only " + to_string(Sublanguage::BasePrime) + " and " +
                       to_string(Sublanguage::DeltaPrime));
    std::sort(constants.begin(), constants.end());
    constants.erase(std::unique(constants.begin(), constants.end()), constants.end());

    for (const auto& r : sig.roles) {
      basic_.push_back(ast::role(r));
      if (features_.inverse) basic_.push_back(ast::inverse(ast::role(r)));
    }
    exists_roles_ = basic_;
    if (features_.universal) exists_roles_.push_back(ast::universal());

    auto leaf = [&](const ConceptPtr& c) { return policy_.leaf(c); };
    for (Degree p : constants)
      if (add(ast::constant(p), leaf)) constant_items_.push_back(items_.size() - 1);
    for (const auto& a : sig.concepts) add(ast::concept_name(a), leaf);
    if (features_.nominals)
      for (const auto& a : sig.individuals) add(ast::nominal(a), leaf);
    if (features_.self)
      for (const auto& r : sig.roles) add(ast::self_loop(r), leaf);
    for (unsigned n : features_.n_bounds)
      for (const auto& r : basic_) add(ast::at_least(n, r), leaf);
    fresh_end_ = items_.size();
  }

  const std::vector<Item>& items() const noexcept { return items_; }
  unsigned depth() const noexcept { return depth_; }
  /// Index of the first item of the most recent level.
  std::size_t level_begin() const noexcept { return fresh_begin_; }
  Policy& policy() noexcept { return policy_; }

  /// Builds the next level. Returns false when it contributed nothing new,
  /// i.e. the enumeration is saturated.
  bool grow() {
    const std::size_t fb = fresh_begin_, fe = fresh_end_;
    ++depth_;

    if (fragment_ == Sublanguage::DeltaPrime)
      for (std::size_t j = fb; j < fe; ++j)
        add(ast::delta(items_[j].expr), [&](const ConceptPtr&) { return policy_.delta(items_[j].value); });

    for (const auto& r : exists_roles_)
      for (std::size_t j = fb; j < fe; ++j)
        add(ast::exists(r, items_[j].expr), [&](const ConceptPtr&) { return policy_.exists(r, items_[j].value); });

    for (unsigned n : features_.q_bounds)
      for (const auto& r : basic_)
        for (std::size_t j = fb; j < fe; ++j)
          add(ast::at_least(n, r, items_[j].expr),
              [&](const ConceptPtr&) { return policy_.at_least(n, r, items_[j].value); });

    for (std::size_t j = fb; j < fe; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        add(ast::and_(items_[i].expr, items_[j].expr),
            [&](const ConceptPtr&) { return policy_.conj(items_[i].value, items_[j].value); });

    auto imp = [&](std::size_t i, std::size_t j) {
      add(ast::implies(items_[i].expr, items_[j].expr),
          [&](const ConceptPtr&) { return policy_.implies(items_[i].value, items_[j].value); });
    };
    bool general = fragment_ == Sublanguage::BasePrime && !features_.q_bounds.empty();
    if (general) {
      for (std::size_t i = 0; i < fe; ++i)
        for (std::size_t j = 0; j < fe; ++j)
          if (i >= fb || j >= fb) imp(i, j);
    } else {
      for (std::size_t j = fb; j < fe; ++j)
        for (std::size_t p : constant_items_) {
          imp(j, p);
          imp(p, j);
        }
    }

    fresh_begin_ = fe;
    fresh_end_ = items_.size();
    return fresh_end_ > fresh_begin_;
  }

 private:
  template <class MakeValue>
  bool add(ConceptPtr c, MakeValue&& make) {
    Value v = make(c);
    Key k = policy_.key(v);
    if (seen_.count(k)) return false;
    if (items_.size() >= budget_)
      throw BudgetError("concept enumeration exceeded the budget of " + std::to_string(budget_) + " concepts");
    seen_.emplace(std::move(k), items_.size());
    items_.push_back({std::move(c), std::move(v)});
    return true;
  }

  Policy policy_;
  FeatureSet features_;
  Sublanguage fragment_;
  std::size_t budget_;
  std::vector<RolePtr> basic_, exists_roles_;
  std::vector<Item> items_;
  std::vector<std::size_t> constant_items_;
  std::map<Key, std::size_t> seen_;
  std::size_t fresh_begin_ = 0, fresh_end_ = 0;
  unsigned depth_ = 0;
};

/// Deduplicates syntactically, treating ⊓ as associative and commutative.
struct SyntacticPolicy {
  struct Value {
    std::string key;
    std::vector<std::string> conjuncts;  // sorted; {key} for a non-conjunction
  };
  using Key = std::string;

  static Value atom(std::string k) { return {k, {k}}; }

  Value leaf(const ConceptPtr& c) const { return atom(to_string(*c)); }
  Value conj(const Value& a, const Value& b) const {
    Value out;
    std::merge(a.conjuncts.begin(), a.conjuncts.end(), b.conjuncts.begin(), b.conjuncts.end(),
               std::back_inserter(out.conjuncts));
    out.key = "and[";
    for (const auto& s : out.conjuncts) out.key += s + ",";
    out.key += "]";
    return out;
  }
  Value implies(const Value& a, const Value& b) const { return atom("(" + a.key + " -> " + b.key + ")"); }
  Value exists(const RolePtr& r, const Value& a) const { return atom("exists " + to_string(*r) + " . (" + a.key + ")"); }
  Value at_least(unsigned n, const RolePtr& r, const Value& a) const {
    return atom(">= " + std::to_string(n) + " " + to_string(*r) + " . (" + a.key + ")");
  }
  Value delta(const Value& a) const { return atom("delta (" + a.key + ")"); }
  Key key(const Value& v) const { return v.key; }
};

/// All concepts of the fragment up to the given height, up to ⊓-reordering,
/// in a deterministic order. Throws BudgetError past `budget` concepts.
inline std::vector<ConceptPtr> enumerate_fragment(const FeatureSet& features, const Signature& sig,
                                                  std::vector<Degree> constants, Sublanguage fragment,
                                                  unsigned depth, std::size_t budget = 100000) {
  FragmentGenerator<SyntacticPolicy> gen({}, features, sig, std::move(constants), fragment, budget);
  while (gen.depth() < depth && gen.grow()) {
  }
  std::vector<ConceptPtr> out;
  out.reserve(gen.items().size());
  for (const auto& item : gen.items()) out.push_back(item.expr);
  return out;
}

}  // namespace fdl
