#pragma once

#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "fdl/error.hpp"

namespace fdl {

/// The selected language features Φ ⊆ {I, O, U, Self, Q_n, N_n}.
struct FeatureSet {
  bool inverse = false;    // I
  bool nominals = false;   // O
  bool universal = false;  // U
  bool self = false;       // Self
  std::set<unsigned> q_bounds;  // n of every enabled Q_n
  std::set<unsigned> n_bounds;  // n of every enabled N_n

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

  bool empty() const noexcept {
    return !inverse && !nominals && !universal && !self && q_bounds.empty() && n_bounds.empty();
  }

  /// True iff Φ ⊆ {I, O, U}.
  bool only_iou() const noexcept { return !self && q_bounds.empty() && n_bounds.empty(); }

  bool has_q(unsigned n) const { return q_bounds.count(n) != 0; }
  bool has_n(unsigned n) const { return n_bounds.count(n) != 0; }

  FeatureSet with_universal() const {
    FeatureSet f = *this;
    f.universal = true;
    return f;
  }

  /// Every feature, with Q_n/N_n for n = 1..max_bound. Finite stand-in for
  /// the full feature set, adequate when no element has more than
  /// max_bound successors.
  static FeatureSet full(unsigned max_bound) {
    FeatureSet f;
    f.inverse = f.nominals = f.universal = f.self = true;
    for (unsigned n = 1; n <= max_bound; ++n) {
      f.q_bounds.insert(n);
      f.n_bounds.insert(n);
    }
    return f;
  }

  /// Parses "I,O,U,Self,Q2,Q3,N2"; the empty string is Φ = ∅.
  static FeatureSet parse(std::string_view text) {
    FeatureSet f;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view item = text.substr(pos, comma - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (!item.empty()) f.add(item);
      pos = comma + 1;
    }
    return f;
  }

  std::string to_string() const {
    std::ostringstream os;
    const char* sep = "";
    auto put = [&](const std::string& s) {
      os << sep << s;
      sep = ",";
    };
    if (inverse) put("I");
    if (nominals) put("O");
    if (universal) put("U");
    if (self) put("Self");
    for (unsigned n : q_bounds) put("Q" + std::to_string(n));
    for (unsigned n : n_bounds) put("N" + std::to_string(n));
    return os.str();
  }

 private:
  void add(std::string_view item) {
    if (item == "I") { inverse = true; return; }
    if (item == "O") { nominals = true; return; }
    if (item == "U") { universal = true; return; }
    if (item == "Self") { self = true; return; }
    if ((item.front() == 'Q' || item.front() == 'N') && item.size() > 1) {
      unsigned n = 0;
      for (char c : item.substr(1)) {
        if (c < '0' || c > '9' || n > 100000) throw InputError("bad feature '" + std::string(item) + "'");
        n = n * 10 + static_cast<unsigned>(c - '0');
      }
      if (n == 0) throw InputError("feature bound must be at least 1 in '" + std::string(item) + "'");
      (item.front() == 'Q' ? q_bounds : n_bounds).insert(n);
      return;
    }
    throw InputError("unknown feature '" + std::string(item) + "'");
  }
};

}  // namespace fdl
