#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fdl/degree.hpp"
#include "fdl/error.hpp"
#include "fdl/relation.hpp"

namespace fdl {

/// A total fuzzy subset of an ordered domain.
struct FuzzySet {
  Labels over;
  std::vector<Degree> values;

  Degree at(const std::string& element) const {
    auto it = std::find(over.begin(), over.end(), element);
    if (it == over.end()) throw UnknownNameError("unknown element '" + element + "'");
    return values[static_cast<std::size_t>(it - over.begin())];
  }
  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
};

/// Finite fuzzy interpretation. Elements keep their declaration order, which
/// fixes every iteration and output order downstream. Concept and role names
/// that were never declared read as the all-zero valuation.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(Labels domain) : domain_(std::move(domain)) {
    if (domain_.empty()) throw InputError("domain must not be empty");
    for (std::size_t i = 0; i < domain_.size(); ++i)
      if (!index_.emplace(domain_[i], i).second) throw InputError("duplicate element '" + domain_[i] + "'");
  }

  const Labels& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return domain_.size(); }
  bool contains(const std::string& e) const { return index_.count(e) != 0; }
  std::size_t index_of(const std::string& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw UnknownNameError("unknown element '" + e + "'");
    return it->second;
  }

  void set_individual(const std::string& a, const std::string& element) { individuals_[a] = index_of(element); }
  const std::map<std::string, std::size_t>& individuals() const noexcept { return individuals_; }
  std::optional<std::size_t> find_individual(const std::string& a) const {
    auto it = individuals_.find(a);
    if (it == individuals_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t individual(const std::string& a) const {
    auto it = individuals_.find(a);
    if (it == individuals_.end()) throw UnknownNameError("unknown individual '" + a + "'");
    return it->second;
  }
  Labels individual_names() const {
    Labels out;
    for (const auto& [a, _] : individuals_) out.push_back(a);
    return out;
  }

  void declare_concept(const std::string& a) { concepts_.try_emplace(a, domain_.size(), Degree::zero()); }
  void declare_role(const std::string& r) { roles_.try_emplace(r, domain_, domain_); }
  void set_concept(const std::string& a, std::size_t x, Degree d) {
    declare_concept(a);
    concepts_.at(a)[x] = d;
  }
  void set_concept(const std::string& a, const std::string& x, Degree d) { set_concept(a, index_of(x), d); }
  void set_role(const std::string& r, std::size_t x, std::size_t y, Degree d) {
    declare_role(r);
    roles_.at(r).set(x, y, d);
  }
  void set_role(const std::string& r, const std::string& x, const std::string& y, Degree d) {
    set_role(r, index_of(x), index_of(y), d);
  }

  Degree concept_value(const std::string& a, std::size_t x) const {
    auto it = concepts_.find(a);
    return it == concepts_.end() ? Degree::zero() : it->second[x];
  }
  std::vector<Degree> concept_values(const std::string& a) const {
    auto it = concepts_.find(a);
    return it == concepts_.end() ? std::vector<Degree>(domain_.size()) : it->second;
  }
  Degree role_value(const std::string& r, std::size_t x, std::size_t y) const {
    auto it = roles_.find(r);
    return it == roles_.end() ? Degree::zero() : it->second(x, y);
  }
  FuzzyRelation role_relation(const std::string& r) const {
    auto it = roles_.find(r);
    return it == roles_.end() ? FuzzyRelation(domain_, domain_) : it->second;
  }

  Labels concept_names() const {
    Labels out;
    for (const auto& [a, _] : concepts_) out.push_back(a);
    return out;
  }
  Labels role_names() const {
    Labels out;
    for (const auto& [r, _] : roles_) out.push_back(r);
    return out;
  }

  /// All degrees occurring in the valuations, plus 0 and 1, ascending.
  std::vector<Degree> degrees() const {
    std::vector<Degree> out{Degree::zero(), Degree::one()};
    for (const auto& [_, vals] : concepts_) out.insert(out.end(), vals.begin(), vals.end());
    for (const auto& [_, rel] : roles_) out.insert(out.end(), rel.entries().begin(), rel.entries().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Restriction to the given elements (kept in domain order); individuals
  /// mapped outside the kept set are dropped.
  Interpretation restrict_to(const std::vector<bool>& keep) const {
    Labels dom;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < domain_.size(); ++i)
      if (keep[i]) {
        dom.push_back(domain_[i]);
        kept.push_back(i);
      }
    Interpretation out(dom);
    for (const auto& [a, x] : individuals_)
      if (keep[x]) out.set_individual(a, domain_[x]);
    for (const auto& [a, vals] : concepts_) {
      out.declare_concept(a);
      for (std::size_t i = 0; i < kept.size(); ++i) out.set_concept(a, i, vals[kept[i]]);
    }
    for (const auto& [r, rel] : roles_) {
      out.declare_role(r);
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j) out.set_role(r, i, j, rel(kept[i], kept[j]));
    }
    return out;
  }

 private:
  Labels domain_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, std::size_t> individuals_;
  std::map<std::string, std::vector<Degree>> concepts_;
  std::map<std::string, FuzzyRelation> roles_;
};

/// Union of the concept and role names of two interpretations.
inline std::pair<Labels, Labels> joint_names(const Interpretation& a, const Interpretation& b) {
  auto merge = [](Labels x, const Labels& y) {
    x.insert(x.end(), y.begin(), y.end());
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    return x;
  };
  return {merge(a.concept_names(), b.concept_names()), merge(a.role_names(), b.role_names())};
}

/// Both interpretations must name the same individuals.
inline void require_same_individuals(const Interpretation& a, const Interpretation& b) {
  if (a.individual_names() != b.individual_names())
    throw InputError("the two interpretations name different sets of individuals");
}

}  // namespace fdl
