#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fdl/degree.hpp"
#include "fdl/godel.hpp"

namespace fdl {

using Labels = std::vector<std::string>;

/// Dense degree-valued matrix between two ordered element sequences.
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  FuzzyRelation(Labels rows, Labels cols, Degree fill = Degree::zero())
      : rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.size() * cols_.size(), fill) {}

  static FuzzyRelation identity(const Labels& labels) {
    FuzzyRelation r(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) r.set(i, i, Degree::one());
    return r;
  }

  const Labels& rows() const noexcept { return rows_; }
  const Labels& cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_.size(); }

  Degree operator()(std::size_t i, std::size_t j) const { return data_[i * cols_.size() + j]; }
  Degree at(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= cols_.size()) throw UsageError("relation index out of range");
    return (*this)(i, j);
  }
  void set(std::size_t i, std::size_t j, Degree d) { data_[i * cols_.size() + j] = d; }

  /// Lookup by element id; throws UnknownNameError.
  Degree at(const std::string& row, const std::string& col) const {
    return (*this)(index_of(rows_, row), index_of(cols_, col));
  }
  void set(const std::string& row, const std::string& col, Degree d) {
    set(index_of(rows_, row), index_of(cols_, col), d);
  }

  std::span<const Degree> row(std::size_t i) const {
    return {data_.data() + i * cols_.size(), cols_.size()};
  }
  const std::vector<Degree>& entries() const noexcept { return data_; }

  bool is_crisp() const {
    return std::all_of(data_.begin(), data_.end(), [](Degree d) { return d.is_crisp(); });
  }

  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;

 private:
  static std::size_t index_of(const Labels& labels, const std::string& id) {
    auto it = std::find(labels.begin(), labels.end(), id);
    if (it == labels.end()) throw UnknownNameError("unknown element '" + id + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }

  Labels rows_;
  Labels cols_;
  std::vector<Degree> data_;
};

inline FuzzyRelation rel_inverse(const FuzzyRelation& r) {
  FuzzyRelation out(r.cols(), r.rows());
  for (std::size_t i = 0; i < r.row_count(); ++i)
    for (std::size_t j = 0; j < r.col_count(); ++j) out.set(j, i, r(i, j));
  return out;
}

/// Max–min product.
inline FuzzyRelation rel_compose(const FuzzyRelation& r, const FuzzyRelation& s) {
  if (r.cols() != s.rows()) throw UsageError("rel_compose: inner dimensions differ");
  FuzzyRelation out(r.rows(), s.cols());
  const std::size_t mid = r.col_count();
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    for (std::size_t k = 0; k < mid; ++k) {
      Degree rik = r(i, k);
      if (rik.is_zero()) continue;
      for (std::size_t j = 0; j < s.col_count(); ++j) {
        Degree v = conj(rik, s(k, j));
        if (v > out(i, j)) out.set(i, j, v);
      }
    }
  }
  return out;
}

/// Pointwise max of a nonempty family over identical index sets.
inline FuzzyRelation rel_sup(std::span<const FuzzyRelation> family) {
  if (family.empty()) throw UsageError("rel_sup of an empty family");
  FuzzyRelation out = family.front();
  for (const auto& z : family.subspan(1)) {
    if (z.rows() != out.rows() || z.cols() != out.cols())
      throw UsageError("rel_sup: relations have different index sets");
    for (std::size_t i = 0; i < out.row_count(); ++i)
      for (std::size_t j = 0; j < out.col_count(); ++j)
        if (z(i, j) > out(i, j)) out.set(i, j, z(i, j));
  }
  return out;
}

inline FuzzyRelation rel_sup(std::initializer_list<FuzzyRelation> family) {
  return rel_sup(std::span<const FuzzyRelation>(family.begin(), family.size()));
}

/// The n-th largest value counting multiplicity, or 0 if there are fewer
/// than n values (empty supremum).
inline Degree nth_largest(std::vector<Degree> values, std::size_t n) {
  if (n == 0) throw UsageError("nth_largest: n must be positive");
  if (values.size() < n) return Degree::zero();
  auto nth = values.begin() + static_cast<std::ptrdiff_t>(n - 1);
  std::nth_element(values.begin(), nth, values.end(), std::greater<>{});
  return *nth;
}

}  // namespace fdl
