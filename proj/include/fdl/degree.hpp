#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "fdl/error.hpp"

namespace fdl {

/// An exact rational truth value in [0,1].
///
/// Stored reduced with a positive denominator. Comparisons are exact
/// (cross-multiplied in 128-bit), so no epsilon is ever involved.
class Degree {
 public:
  constexpr Degree() noexcept = default;

  /// Throws InputError unless 0 <= num/den <= 1 and den > 0.
  static Degree ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InputError("degree denominator must be positive");
    if (num < 0 || num > den) {
      throw InputError("degree " + std::to_string(num) + "/" + std::to_string(den) +
                       " is outside [0,1]");
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Degree(num / g, den / g);
  }

  static constexpr Degree zero() noexcept { return Degree(0, 1); }
  static constexpr Degree one() noexcept { return Degree(1, 1); }

  /// Parses "0.25", "1", "1.0" or "1/4".
  static Degree parse(std::string_view text) {
    auto fail = [&](const char* why) -> InputError {
      return InputError("invalid degree '" + std::string(text) + "': " + why);
    };
    if (text.empty()) throw fail("empty");
    auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto to_int = [&](std::string_view s) -> std::int64_t {
      if (s.size() > 18) throw fail("too many digits");
      std::int64_t v = 0;
      for (char c : s) v = v * 10 + (c - '0');
      return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto n = text.substr(0, slash), d = text.substr(slash + 1);
      if (!digits(n) || !digits(d)) throw fail("expected num/den");
      std::int64_t dv = to_int(d);
      if (dv == 0) throw fail("zero denominator");
      std::int64_t nv = to_int(n);
      if (nv > dv) throw fail("outside [0,1]");
      return ratio(nv, dv);
    }
    auto dot = text.find('.');
    auto ip = text.substr(0, dot);
    auto fp = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!digits(ip) || (dot != std::string_view::npos && !digits(fp))) throw fail("expected a decimal");
    // Strip trailing zeros so "0.50000000000000000000" still fits.
    while (!fp.empty() && fp.back() == '0') fp.remove_suffix(1);
    while (ip.size() > 1 && ip.front() == '0') ip.remove_prefix(1);
    if (fp.size() > 18) throw fail("too many fractional digits");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    if (ip.size() > 1) throw fail("outside [0,1]");
    std::int64_t whole = to_int(ip);
    std::int64_t frac = fp.empty() ? 0 : to_int(fp);
    if (whole > 1 || (whole == 1 && frac != 0)) throw fail("outside [0,1]");
    return ratio(whole * den + frac, den);
  }

  /// Like parse() but returns nullopt instead of throwing.
  static std::optional<Degree> try_parse(std::string_view text) {
    try {
      return parse(text);
    } catch (const InputError&) {
      return std::nullopt;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_one() const noexcept { return num_ == den_; }
  constexpr bool is_crisp() const noexcept { return is_zero() || is_one(); }

  /// 1 - p.
  constexpr Degree complement() const noexcept { return Degree(den_ - num_, den_); }

  friend constexpr bool operator==(const Degree& a, const Degree& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  /// Shortest exact decimal when the expansion terminates, otherwise "num/den".
  std::string to_string() const {
    if (num_ == 0) return "0";
    if (num_ == den_) return "1";
    std::int64_t d = den_;
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    std::string out = "0.";
    __int128 rem = num_;
    while (rem != 0) {
      rem *= 10;
      out.push_back(static_cast<char>('0' + static_cast<int>(rem / den_)));
      rem %= den_;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

 private:
  constexpr Degree(std::int64_t n, std::int64_t d) noexcept : num_(n), den_(d) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// User-defined literal for tests and fixtures: "0.9"_deg.
inline namespace literals {
inline Degree operator""_deg(const char* s, std::size_t n) { return Degree::parse({s, n}); }
}  // namespace literals

}  // namespace fdl

template <>
struct std::hash<fdl::Degree> {
  std::size_t operator()(const fdl::Degree& d) const noexcept {
    return std::hash<std::int64_t>{}(d.num()) * 1000003u ^ std::hash<std::int64_t>{}(d.den());
  }
};
