#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdl/bisim.hpp"
#include "fdl/eval.hpp"
#include "fdl/interpretation.hpp"

namespace fdl {

/// Disjoint blocks covering a domain, in order of their first element.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;  // by domain index

  bool is_identity() const noexcept { return blocks.size() == block_of.size(); }

  std::vector<Labels> labelled(const Interpretation& m) const {
    std::vector<Labels> out;
    for (const auto& b : blocks) {
      Labels names;
      for (auto x : b) names.push_back(m.domain()[x]);
      out.push_back(std::move(names));
    }
    return out;
  }
};

/// Classes of strong Φ-bisimilarity: the greatest crisp auto-bisimulation.
inline Partition strong_partition(const Interpretation& m, const FeatureSet& features) {
  const FuzzyRelation z = greatest_bisim(m, m, features, Mode::Crisp).z;
  const std::size_t n = m.size();
  Partition p;
  p.block_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (p.block_of[x] != n) continue;
    p.block_of[x] = p.blocks.size();
    p.blocks.push_back({x});
    for (std::size_t y = x + 1; y < n; ++y)
      if (z(x, y).is_one()) {
        // An equivalence by construction; a failure here is a bug.
        if (p.block_of[y] != n || !z(y, x).is_one()) throw Error("internal: strong bisimilarity is not an equivalence");
        p.block_of[y] = p.block_of[x];
        p.blocks.back().push_back(y);
      }
  }
  for (const auto& b : p.blocks)
    for (auto x : b)
      for (auto y : b)
        if (!z(x, y).is_one()) throw Error("internal: strong bisimilarity is not transitive");
  return p;
}

inline std::string block_label(const Interpretation& m, const std::vector<std::size_t>& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + m.domain()[block[i]];
  return s + "}";
}

struct Quotient {
  Interpretation model;
  Partition partition;
};

/// Quotient by strong Φ-bisimilarity; Φ must lie within {I, O, U}.
/// A([x]) = A(x) and r([x],[y]) = max over y′ ∈ [y] of r(x,y′); both are
/// independent of the representative x, which is re-checked here.
inline Quotient quotient_with_partition(const Interpretation& m, const FeatureSet& features) {
  if (!features.only_iou())
    throw UnsupportedFeatureError("quotients are defined only for feature sets within {I,O,U}; got " +
                                  features.to_string());
  Partition p = strong_partition(m, features);
  Labels dom;
  for (const auto& b : p.blocks) dom.push_back(block_label(m, b));
  Interpretation q(dom);
  for (const auto& [a, x] : m.individuals()) q.set_individual(a, dom[p.block_of[x]]);

  for (const auto& a : m.concept_names()) {
    q.declare_concept(a);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      Degree v = m.concept_value(a, p.blocks[i].front());
      for (auto x : p.blocks[i])
        if (m.concept_value(a, x) != v) throw Error("internal: concept '" + a + "' is not constant on a block");
      q.set_concept(a, i, v);
    }
  }
  for (const auto& r : m.role_names()) {
    q.declare_role(r);
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
      for (std::size_t j = 0; j < p.blocks.size(); ++j) {
        auto into = [&](std::size_t x) {
          Degree best;
          for (auto y : p.blocks[j]) best = disj(best, m.role_value(r, x, y));
          return best;
        };
        Degree v = into(p.blocks[i].front());
        for (auto x : p.blocks[i])
          if (into(x) != v) throw Error("internal: quotient degree of role '" + r + "' depends on the representative");
        q.set_role(r, i, j, v);
      }
  }
  return {std::move(q), std::move(p)};
}

inline Interpretation quotient(const Interpretation& m, const FeatureSet& features) {
  return quotient_with_partition(m, features).model;
}

/// Crisp relation between m and its quotient: x ↦ [x].
inline FuzzyRelation block_relation(const Interpretation& m, const Quotient& q) {
  FuzzyRelation z(m.domain(), q.model.domain());
  for (std::size_t x = 0; x < m.size(); ++x) z.set(x, q.partition.block_of[x], Degree::one());
  return z;
}

/// Drops every element not Φ-reachable from a named individual.
inline Interpretation prune_unreachable(const Interpretation& m, const FeatureSet& features) {
  if (m.individuals().empty()) throw InputError("pruning needs at least one named individual");
  return m.restrict_to(reachability(m, features).reachable);
}

struct MinimalityCertificate {
  bool is_reduced = false;
  std::optional<std::pair<std::string, std::string>> witness;  // two distinct strongly bisimilar elements
};

/// Reduced iff strong Φ-bisimilarity is the identity; otherwise names two
/// elements that a quotient would merge.
inline MinimalityCertificate minimality_certificate(const Interpretation& m, const FeatureSet& features) {
  Partition p = strong_partition(m, features);
  MinimalityCertificate c;
  c.is_reduced = p.is_identity();
  for (const auto& b : p.blocks)
    if (b.size() > 1) {
      c.witness = std::pair{m.domain()[b[0]], m.domain()[b[1]]};
      break;
    }
  return c;
}

}  // namespace fdl
