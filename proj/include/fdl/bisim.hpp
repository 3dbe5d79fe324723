#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fdl/eval.hpp"
#include "fdl/features.hpp"
#include "fdl/godel.hpp"
#include "fdl/interpretation.hpp"
#include "fdl/relation.hpp"

namespace fdl {

enum class Mode { Fuzzy, Crisp };

inline std::string to_string(Mode m) { return m == Mode::Fuzzy ? "fuzzy" : "crisp"; }
inline Mode parse_mode(const std::string& s) {
  if (s == "fuzzy") return Mode::Fuzzy;
  if (s == "crisp") return Mode::Crisp;
  throw UsageError("mode must be 'fuzzy' or 'crisp', got '" + s + "'");
}

/// Z : Δ^I × Δ^I′ → [0,1], rows indexed by the left domain.
struct CandidateRelation {
  FuzzyRelation z;
  Mode mode = Mode::Fuzzy;

  CandidateRelation() = default;
  CandidateRelation(FuzzyRelation rel, Mode m) : z(std::move(rel)), mode(m) {
    if (mode == Mode::Crisp && !z.is_crisp()) throw InputError("crisp relation has an entry outside {0,1}");
  }
};

struct Violation {
  std::string condition;  // FB2 … FB10, FB6(n), FB7(n), FB6n(n), FB7n(n)
  std::string x, x2;      // the pair (x, x′)
  std::string detail;     // role / name / successor witnesses
  Degree lhs, rhs;        // the failed inequality lhs ≤ rhs
};

struct ConditionReport {
  std::vector<Violation> violations;
  bool satisfied() const noexcept { return violations.empty(); }
};

/// The degrees occurring in two interpretations, plus 0 and 1. Every
/// bisimulation bound is assembled from these by selection-only operators,
/// so fixpoint iterates never leave this set.
struct ValueUniverse {
  std::vector<Degree> values;

  static ValueUniverse of(const Interpretation& a, const Interpretation& b) {
    ValueUniverse u{a.degrees()};
    auto more = b.degrees();
    u.values.insert(u.values.end(), more.begin(), more.end());
    std::sort(u.values.begin(), u.values.end());
    u.values.erase(std::unique(u.values.begin(), u.values.end()), u.values.end());
    return u;
  }
  bool contains(Degree d) const { return std::binary_search(values.begin(), values.end(), d); }
};

namespace detail {

// Valuations of both sides over the joint signature, with basic roles
// materialized once.
struct BisimFrame {
  struct RolePair {
    std::string label;
    FuzzyRelation left, right;
  };
  struct Nominee {
    std::string name;
    std::optional<std::size_t> left, right;
  };

  const Interpretation& l;
  const Interpretation& r;
  FeatureSet features;
  std::vector<std::pair<std::string, std::pair<Extension, Extension>>> concepts;
  std::vector<RolePair> roles;     // basic roles w.r.t. Φ
  std::vector<RolePair> self;      // role names, when Self ∈ Φ
  std::vector<Nominee> nominees;   // when O ∈ Φ

  BisimFrame(const Interpretation& left, const Interpretation& right, FeatureSet f)
      : l(left), r(right), features(std::move(f)) {
    auto [cnames, rnames] = joint_names(l, r);
    for (const auto& a : cnames) concepts.push_back({a, {l.concept_values(a), r.concept_values(a)}});
    for (const auto& role : basic_roles(rnames, features))
      roles.push_back({to_string(*role), eval_role(l, *role), eval_role(r, *role)});
    if (features.self)
      for (const auto& name : rnames) self.push_back({name, l.role_relation(name), r.role_relation(name)});
    if (features.nominals) {
      std::map<std::string, Nominee> all;
      for (const auto& [a, x] : l.individuals()) all[a] = {a, x, std::nullopt};
      for (const auto& [a, x] : r.individuals()) {
        all.try_emplace(a, Nominee{a, std::nullopt, std::nullopt});
        all[a].right = x;
      }
      for (auto& [_, n] : all) nominees.push_back(n);
    }
  }

  std::size_t rows() const { return l.size(); }
  std::size_t cols() const { return r.size(); }

  void require_shape(const FuzzyRelation& z) const {
    if (z.rows() != l.domain() || z.cols() != r.domain())
      throw InputError("relation is not indexed by the two domains");
  }

  /// FB2, FB5, FB10 bounds: independent of Z.
  Degree static_bound(std::size_t x, std::size_t x2) const {
    Degree b = Degree::one();
    for (const auto& [_, vals] : concepts) b = conj(b, iff(vals.first[x], vals.second[x2]));
    for (const auto& n : nominees) {
      bool here = n.left && *n.left == x, there = n.right && *n.right == x2;
      if (here != there) b = Degree::zero();
    }
    for (const auto& s : self) b = conj(b, iff(s.left(x, x), s.right(x2, x2)));
    return b;
  }
};

inline std::vector<std::size_t> positive_successors(const FuzzyRelation& rel, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < rel.col_count(); ++y)
    if (!rel(x, y).is_zero()) out.push_back(y);
  return out;
}

/// Calls `f` with every n-element subset of `items` (in lexicographic order)
/// until it returns false.
inline void for_each_subset(const std::vector<std::size_t>& items, unsigned n,
                            const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (n == 0 || n > items.size()) return;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> chosen(n);
  for (;;) {
    for (unsigned i = 0; i < n; ++i) chosen[i] = items[idx[i]];
    if (!f(chosen)) return;
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && idx[i] == items.size() - n + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::string names_of(const Labels& dom, const std::vector<std::size_t>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + dom[ids[i]];
  return s + "}";
}

}  // namespace detail

/// Checks every condition of the definition literally: each ∀ is a loop and
/// each ∃ a search. Stops after the first violation when `first_only`.
inline ConditionReport check_bisim(const Interpretation& l, const Interpretation& r, const FuzzyRelation& z,
                                   const FeatureSet& features, bool first_only = false) {
  detail::BisimFrame fr(l, r, features);
  fr.require_shape(z);
  ConditionReport rep;
  const Labels& dl = l.domain();
  const Labels& dr = r.domain();
  auto fail = [&](std::string cond, std::size_t x, std::size_t x2, std::string detail, Degree lhs, Degree rhs) {
    rep.violations.push_back({std::move(cond), dl[x], dr[x2], std::move(detail), lhs, rhs});
    return !first_only;
  };

  for (std::size_t x = 0; x < fr.rows(); ++x)
    for (std::size_t x2 = 0; x2 < fr.cols(); ++x2) {
      const Degree zx = z(x, x2);
      if (zx.is_zero()) continue;  // every condition holds trivially

      for (const auto& [a, vals] : fr.concepts) {
        Degree rhs = iff(vals.first[x], vals.second[x2]);
        if (zx > rhs && !fail("FB2", x, x2, a, zx, rhs)) return rep;
      }

      for (const auto& n : fr.nominees) {
        bool here = n.left && *n.left == x, there = n.right && *n.right == x2;
        if (here != there && !fail("FB5", x, x2, n.name, zx, Degree::zero())) return rep;
      }

      for (const auto& s : fr.self) {
        Degree rhs = iff(s.left(x, x), s.right(x2, x2));
        if (zx > rhs && !fail("FB10", x, x2, s.label, zx, rhs)) return rep;
      }

      for (const auto& R : fr.roles) {
        // FB3: ∀y ∃y′  Z(x,x′) ⊗ R(x,y) ≤ Z(y,y′) ⊗ R′(x′,y′)
        for (std::size_t y = 0; y < fr.rows(); ++y) {
          Degree lhs = conj(zx, R.left(x, y));
          Degree best;
          bool found = false;
          for (std::size_t y2 = 0; y2 < fr.cols() && !found; ++y2) {
            Degree rhs = conj(z(y, y2), R.right(x2, y2));
            best = disj(best, rhs);
            found = lhs <= rhs;
          }
          if (!found && !fail("FB3", x, x2, R.label + " y=" + dl[y], lhs, best)) return rep;
        }
        // FB4: ∀y′ ∃y  Z(x,x′) ⊗ R′(x′,y′) ≤ Z(y,y′) ⊗ R(x,y)
        for (std::size_t y2 = 0; y2 < fr.cols(); ++y2) {
          Degree lhs = conj(zx, R.right(x2, y2));
          Degree best;
          bool found = false;
          for (std::size_t y = 0; y < fr.rows() && !found; ++y) {
            Degree rhs = conj(z(y, y2), R.left(x, y));
            best = disj(best, rhs);
            found = lhs <= rhs;
          }
          if (!found && !fail("FB4", x, x2, R.label + " y'=" + dr[y2], lhs, best)) return rep;
        }

        // FB6/FB7 (Q_n) and FB6n/FB7n (N_n). For each n-subset S of positive
        // successors on one side, τ = Z(x,x′) ⊗ min over S; count the
        // elements on the other side that can serve as one of the n
        // pairwise-distinct witnesses.
        auto number_conditions = [&](unsigned n, bool qualified) -> bool {
          bool keep_going = true;
          std::string tag = std::to_string(n);
          detail::for_each_subset(detail::positive_successors(R.left, x), n, [&](const std::vector<std::size_t>& S) {
            Degree tau = zx;
            for (auto y : S) tau = conj(tau, R.left(x, y));
            std::size_t witnesses = 0;
            for (std::size_t y2 = 0; y2 < fr.cols(); ++y2) {
              bool ok = false;
              if (qualified) {
                for (auto y : S) ok = ok || tau <= conj(z(y, y2), R.right(x2, y2));
              } else {
                ok = tau <= R.right(x2, y2);
              }
              if (ok) ++witnesses;
            }
            if (witnesses < n)
              keep_going = fail((qualified ? "FB6(" : "FB6n(") + tag + ")", x, x2,
                                R.label + " S=" + detail::names_of(dl, S) + " witnesses=" + std::to_string(witnesses),
                                tau, Degree::zero());
            return keep_going;
          });
          if (!keep_going) return false;
          detail::for_each_subset(detail::positive_successors(R.right, x2), n, [&](const std::vector<std::size_t>& S) {
            Degree tau = zx;
            for (auto y2 : S) tau = conj(tau, R.right(x2, y2));
            std::size_t witnesses = 0;
            for (std::size_t y = 0; y < fr.rows(); ++y) {
              bool ok = false;
              if (qualified) {
                for (auto y2 : S) ok = ok || tau <= conj(z(y, y2), R.left(x, y));
              } else {
                ok = tau <= R.left(x, y);
              }
              if (ok) ++witnesses;
            }
            if (witnesses < n)
              keep_going = fail((qualified ? "FB7(" : "FB7n(") + tag + ")", x, x2,
                                R.label + " S'=" + detail::names_of(dr, S) + " witnesses=" + std::to_string(witnesses),
                                tau, Degree::zero());
            return keep_going;
          });
          return keep_going;
        };
        for (unsigned n : features.q_bounds)
          if (!number_conditions(n, true)) return rep;
        for (unsigned n : features.n_bounds)
          if (!number_conditions(n, false)) return rep;
      }

      if (features.universal) {
        // FB8: ∀y ∃y′ Z(x,x′) ≤ Z(y,y′); FB9 symmetric.
        for (std::size_t y = 0; y < fr.rows(); ++y) {
          Degree best;
          for (std::size_t y2 = 0; y2 < fr.cols(); ++y2) best = disj(best, z(y, y2));
          if (zx > best && !fail("FB8", x, x2, "y=" + dl[y], zx, best)) return rep;
        }
        for (std::size_t y2 = 0; y2 < fr.cols(); ++y2) {
          Degree best;
          for (std::size_t y = 0; y < fr.rows(); ++y) best = disj(best, z(y, y2));
          if (zx > best && !fail("FB9", x, x2, "y'=" + dr[y2], zx, best)) return rep;
        }
      }
    }
  return rep;
}

inline ConditionReport check_bisim(const Interpretation& l, const Interpretation& r, const CandidateRelation& z,
                                   const FeatureSet& features, bool first_only = false) {
  return check_bisim(l, r, z.z, features, first_only);
}

namespace detail {

// Largest v such that Z(x,x′) = v satisfies every condition at (x,x′), the
// other entries of Z fixed. Each ∃-condition has the shape
//   v ⊗ a ≤ b   ⇔   v ≤ (a → b)
// by residuation, so the bound is a min of Gödel implications.
inline Degree condition_bound(const BisimFrame& fr, const FuzzyRelation& z, std::size_t x, std::size_t x2) {
  Degree b = fr.static_bound(x, x2);
  const std::size_t nl = fr.rows(), nr = fr.cols();
  std::vector<Degree> scores;

  for (const auto& R : fr.roles) {
    for (std::size_t y = 0; y < nl && !b.is_zero(); ++y) {  // FB3
      Degree a = R.left(x, y);
      if (a.is_zero()) continue;
      Degree best;
      for (std::size_t y2 = 0; y2 < nr; ++y2) best = disj(best, conj(z(y, y2), R.right(x2, y2)));
      b = conj(b, implies(a, best));
    }
    for (std::size_t y2 = 0; y2 < nr && !b.is_zero(); ++y2) {  // FB4
      Degree a = R.right(x2, y2);
      if (a.is_zero()) continue;
      Degree best;
      for (std::size_t y = 0; y < nl; ++y) best = disj(best, conj(z(y, y2), R.left(x, y)));
      b = conj(b, implies(a, best));
    }

    for (unsigned n : fr.features.q_bounds) {
      // FB6: v ⊗ min_S R ≤ n-th largest of R′(x′,y′) ⊗ max_{y∈S} Z(y,y′)
      for_each_subset(positive_successors(R.left, x), n, [&](const std::vector<std::size_t>& S) {
        Degree rho = Degree::one();
        for (auto y : S) rho = conj(rho, R.left(x, y));
        scores.assign(nr, Degree::zero());
        for (std::size_t y2 = 0; y2 < nr; ++y2) {
          Degree m;
          for (auto y : S) m = disj(m, z(y, y2));
          scores[y2] = conj(R.right(x2, y2), m);
        }
        b = conj(b, implies(rho, nth_largest(scores, n)));
        return !b.is_zero();
      });
      // FB7
      for_each_subset(positive_successors(R.right, x2), n, [&](const std::vector<std::size_t>& S) {
        Degree rho = Degree::one();
        for (auto y2 : S) rho = conj(rho, R.right(x2, y2));
        scores.assign(nl, Degree::zero());
        for (std::size_t y = 0; y < nl; ++y) {
          Degree m;
          for (auto y2 : S) m = disj(m, z(y, y2));
          scores[y] = conj(R.left(x, y), m);
        }
        b = conj(b, implies(rho, nth_largest(scores, n)));
        return !b.is_zero();
      });
    }

    // FB6n/FB7n: only the n largest successor degrees bind.
    for (unsigned n : fr.features.n_bounds) {
      std::vector<Degree> left(R.left.row(x).begin(), R.left.row(x).end());
      std::vector<Degree> right(R.right.row(x2).begin(), R.right.row(x2).end());
      Degree rho_l = nth_largest(left, n), rho_r = nth_largest(right, n);
      if (!rho_l.is_zero()) b = conj(b, implies(rho_l, rho_r));
      if (!rho_r.is_zero()) b = conj(b, implies(rho_r, rho_l));
    }
  }

  if (fr.features.universal) {  // FB8/FB9
    for (std::size_t y = 0; y < nl; ++y) {
      Degree best;
      for (std::size_t y2 = 0; y2 < nr; ++y2) best = disj(best, z(y, y2));
      b = conj(b, best);
    }
    for (std::size_t y2 = 0; y2 < nr; ++y2) {
      Degree best;
      for (std::size_t y = 0; y < nl; ++y) best = disj(best, z(y, y2));
      b = conj(b, best);
    }
  }
  return b;
}

}  // namespace detail

/// Largest value Z(x,x′) may take with every other entry of Z fixed.
inline Degree condition_bound(const Interpretation& l, const Interpretation& r, const FuzzyRelation& z,
                              const FeatureSet& features, const std::string& x, const std::string& x2) {
  detail::BisimFrame fr(l, r, features);
  fr.require_shape(z);
  return detail::condition_bound(fr, z, l.index_of(x), r.index_of(x2));
}

struct FixpointTrace {
  unsigned sweeps = 0;            // full passes, including the final stable one
  std::size_t lowered = 0;        // entry updates that changed a value
  bool stayed_in_universe = true; // every intermediate entry was in V
};

/// Greatest fuzzy (or crisp) Φ-bisimulation by downward fixpoint iteration
/// from the static bounds. Pairs are refined in place in `order` (row-major
/// pair indices; default row-major); the result does not depend on it.
inline CandidateRelation greatest_bisim(const Interpretation& l, const Interpretation& r, const FeatureSet& features,
                                        Mode mode, FixpointTrace* trace = nullptr,
                                        const std::vector<std::size_t>* order = nullptr) {
  detail::BisimFrame fr(l, r, features);
  const std::size_t nl = fr.rows(), nr = fr.cols();
  ValueUniverse universe = ValueUniverse::of(l, r);
  FixpointTrace local;

  auto settle = [&](Degree bound) {
    if (mode == Mode::Crisp) return bound.is_one() ? Degree::one() : Degree::zero();
    return bound;
  };

  FuzzyRelation z(l.domain(), r.domain());
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t x2 = 0; x2 < nr; ++x2) z.set(x, x2, settle(fr.static_bound(x, x2)));

  std::vector<std::size_t> pairs(nl * nr);
  std::iota(pairs.begin(), pairs.end(), 0);
  if (order) {
    if (order->size() != pairs.size()) throw UsageError("pair order has the wrong length");
    pairs = *order;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    ++local.sweeps;
    for (std::size_t p : pairs) {
      std::size_t x = p / nr, x2 = p % nr;
      Degree cur = z(x, x2);
      if (cur.is_zero()) continue;
      Degree next = conj(cur, settle(detail::condition_bound(fr, z, x, x2)));
      if (next != cur) {
        z.set(x, x2, next);
        changed = true;
        ++local.lowered;
        if (!universe.contains(next)) local.stayed_in_universe = false;
      }
    }
  }
  if (trace) *trace = local;
  return CandidateRelation(std::move(z), mode);
}

/// Exhaustive oracle: the pointwise sup of all relations with entries in V
/// (or {0,1} for crisp) that pass check_bisim. Entries are drawn only from
/// values not exceeding the atomic-agreement bound, which every bisimulation
/// respects anyway. Guarded to at most 9 pairs and 4^9 candidate relations.
inline CandidateRelation brute_force_greatest(const Interpretation& l, const Interpretation& r,
                                              const FeatureSet& features, Mode mode) {
  constexpr std::size_t max_pairs = 9, max_candidates = 262144;  // 4^9
  const std::size_t nl = l.size(), nr = r.size(), pairs = nl * nr;
  std::vector<Degree> universe = mode == Mode::Crisp ? std::vector<Degree>{Degree::zero(), Degree::one()}
                                                     : ValueUniverse::of(l, r).values;
  if (pairs > max_pairs)
    throw BudgetError("brute-force search limited to " + std::to_string(max_pairs) + " pairs (got " +
                      std::to_string(pairs) + ")");

  detail::BisimFrame fr(l, r, features);
  std::vector<std::vector<Degree>> choices(pairs);
  std::size_t candidates = 1;
  for (std::size_t p = 0; p < pairs; ++p) {
    Degree cap = fr.static_bound(p / nr, p % nr);
    for (Degree v : universe)
      if (v <= cap) choices[p].push_back(v);
    candidates *= choices[p].size();
    if (candidates > max_candidates)
      throw BudgetError("brute-force search limited to " + std::to_string(max_candidates) + " candidate relations");
  }

  FuzzyRelation best(l.domain(), r.domain());
  FuzzyRelation z(l.domain(), r.domain());
  std::vector<std::size_t> digit(pairs, 0);
  for (;;) {
    for (std::size_t p = 0; p < pairs; ++p) z.set(p / nr, p % nr, choices[p][digit[p]]);
    if (check_bisim(l, r, z, features, true).satisfied()) best = rel_sup({best, z});
    std::size_t p = 0;
    while (p < pairs && ++digit[p] == choices[p].size()) digit[p++] = 0;
    if (p == pairs) break;
  }
  return CandidateRelation(std::move(best), mode);
}

struct BisimilarityResult {
  bool holds = false;
  CandidateRelation witness;
  std::optional<std::string> failing_individual;
};

/// (Strong, for crisp mode) Φ-bisimilarity: the greatest bisimulation relates
/// every named individual with degree 1.
inline BisimilarityResult bisimilar(const Interpretation& l, const Interpretation& r, const FeatureSet& features,
                                    Mode mode) {
  require_same_individuals(l, r);
  if (l.individuals().empty())
    throw InputError("bisimilarity of interpretations is undefined when no individuals are named");
  BisimilarityResult out;
  out.witness = greatest_bisim(l, r, features, mode);
  out.holds = true;
  for (const auto& [a, x] : l.individuals())
    if (!out.witness.z(x, r.individual(a)).is_one()) {
      out.holds = false;
      out.failing_individual = a;
      break;
    }
  return out;
}

}  // namespace fdl
