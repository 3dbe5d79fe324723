#pragma once

// Small named interpretations used by the self-test, the acceptance suite and
// the documentation. Element names with a trailing or embedded ' belong to
// the right-hand model of a pair.

#include <utility>

#include "fdl/interpretation.hpp"

namespace fdl::fixtures {

using Pair = std::pair<Interpretation, Interpretation>;

inline Degree d(const char* s) { return Degree::parse(s); }

/// u with r-successors v1 (0.9), v2 (0.8), v3 (0.7); A = 0, 0.5, 0.9, 0.6.
inline Interpretation three_successors() {
  Interpretation m({"u", "v1", "v2", "v3"});
  m.set_concept("A", "u", d("0"));
  m.set_concept("A", "v1", d("0.5"));
  m.set_concept("A", "v2", d("0.9"));
  m.set_concept("A", "v3", d("0.6"));
  m.set_role("r", "u", "v1", d("0.9"));
  m.set_role("r", "u", "v2", d("0.8"));
  m.set_role("r", "u", "v3", d("0.7"));
  return m;
}

/// Two fans whose edge degrees are swapped relative to the successor labels;
/// the greatest fuzzy bisimulation relates the roots only to degree 0.8.
inline Pair swapped_fans() {
  Interpretation l({"u", "v", "w"});
  l.set_concept("A", "u", d("0"));
  l.set_concept("A", "v", d("0.8"));
  l.set_concept("A", "w", d("0.9"));
  l.set_role("r", "u", "v", d("0.7"));
  l.set_role("r", "u", "w", d("1"));
  Interpretation r({"u'", "v'", "w'"});
  r.set_concept("A", "u'", d("0"));
  r.set_concept("A", "v'", d("0.8"));
  r.set_concept("A", "w'", d("0.9"));
  r.set_role("r", "u'", "v'", d("1"));
  r.set_role("r", "u'", "w'", d("0.9"));
  return {std::move(l), std::move(r)};
}

/// Left root has an extra weak (0.3) successor v3 that looks like v2;
/// the right root has only the two stronger successors.
inline Pair extra_weak_successor() {
  Interpretation l({"u", "v1", "v2", "v3"});
  l.set_individual("a", "u");
  l.set_concept("A", "u", d("0"));
  l.set_concept("A", "v1", d("0.7"));
  l.set_concept("A", "v2", d("0.8"));
  l.set_concept("A", "v3", d("0.8"));
  l.set_role("r", "u", "v1", d("0.5"));
  l.set_role("r", "u", "v2", d("0.6"));
  l.set_role("r", "u", "v3", d("0.3"));
  Interpretation r({"u'", "v'1", "v'2"});
  r.set_individual("a", "u'");
  r.set_concept("A", "u'", d("0"));
  r.set_concept("A", "v'1", d("0.7"));
  r.set_concept("A", "v'2", d("0.8"));
  r.set_role("r", "u'", "v'1", d("0.5"));
  r.set_role("r", "u'", "v'2", d("0.6"));
  return {std::move(l), std::move(r)};
}

/// Both models of extra_weak_successor() side by side in one domain, with
/// a naming the left root; the right component is unreachable.
inline Interpretation two_components() {
  Interpretation m({"u", "v1", "v2", "v3", "u'", "v'1", "v'2"});
  m.set_individual("a", "u");
  for (const auto& [e, v] : std::initializer_list<std::pair<const char*, const char*>>{
           {"u", "0"}, {"v1", "0.7"}, {"v2", "0.8"}, {"v3", "0.8"}, {"u'", "0"}, {"v'1", "0.7"}, {"v'2", "0.8"}})
    m.set_concept("A", e, d(v));
  m.set_role("r", "u", "v1", d("0.5"));
  m.set_role("r", "u", "v2", d("0.6"));
  m.set_role("r", "u", "v3", d("0.3"));
  m.set_role("r", "u'", "v'1", d("0.5"));
  m.set_role("r", "u'", "v'2", d("0.6"));
  return m;
}

/// One element v, A(v) = 0.5 on the left and 1 on the right.
inline Pair half_versus_full() {
  Interpretation l({"v"});
  l.set_individual("a", "v");
  l.set_concept("A", "v", d("0.5"));
  l.declare_role("r");
  Interpretation r({"v"});
  r.set_individual("a", "v");
  r.set_concept("A", "v", d("1"));
  r.declare_role("r");
  return {std::move(l), std::move(r)};
}

/// u:B=1 --0.9--> v with A(v) = 0.9 (left) or 1 (right); every individual
/// names the root.
inline Pair single_edge() {
  Interpretation l({"u", "v"});
  l.set_individual("a", "u");
  l.set_concept("A", "v", d("0.9"));
  l.set_concept("B", "u", d("1"));
  l.set_role("r", "u", "v", d("0.9"));
  Interpretation r({"u'", "v'"});
  r.set_individual("a", "u'");
  r.set_concept("A", "v'", d("1"));
  r.set_concept("B", "u'", d("1"));
  r.set_role("r", "u'", "v'", d("0.9"));
  return {std::move(l), std::move(r)};
}

/// Root u:B=1 with three 0.9-successors; A values 0.9, 0.9, 1 on the left
/// and 0.9, 1, 1 on the right.
inline Pair three_leaves() {
  Interpretation l({"u", "v0", "v1", "v2"});
  l.set_individual("a", "u");
  l.set_concept("B", "u", d("1"));
  l.set_concept("A", "v0", d("0.9"));
  l.set_concept("A", "v1", d("0.9"));
  l.set_concept("A", "v2", d("1"));
  Interpretation r({"u'", "v'0", "v'1", "v'2"});
  r.set_individual("a", "u'");
  r.set_concept("B", "u'", d("1"));
  r.set_concept("A", "v'0", d("0.9"));
  r.set_concept("A", "v'1", d("1"));
  r.set_concept("A", "v'2", d("1"));
  for (const char* y : {"v0", "v1", "v2"}) l.set_role("r", "u", y, d("0.9"));
  for (const char* y : {"v'0", "v'1", "v'2"}) r.set_role("r", "u'", y, d("0.9"));
  return {std::move(l), std::move(r)};
}

}  // namespace fdl::fixtures
