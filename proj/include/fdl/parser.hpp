#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdl/features.hpp"
#include "fdl/print.hpp"
#include "fdl/syntax.hpp"

namespace fdl {

// Concrete grammar, loosest binding first:
//
//   concept  := or ( "->" concept )?                 right-associative
//   or       := and ( "or" and )*
//   and      := unary ( "and" unary )*
//   unary    := ("not" | "inv" | "delta") unary
//             | "exists" role "." ( "self" | unary )
//             | "forall" role "." unary
//             | (">=" | "<") INT role ( "." unary )?
//             | atom
//   atom     := NUMBER | NAME | "{" NAME "}" | "(" concept ")"
//
//   role     := seq ( "|" seq )*
//   seq      := post ( ";" post )*
//   post     := prim ( "-" | "*" | "+" )*
//   prim     := "U" | NAME | "(" role ")" | unary "?"

namespace detail {

enum class Tok { Name, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i + 1 < s.size() && (s[i] == '.' || s[i] == '/') && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (s.substr(i, 2) == "->" || s.substr(i, 2) == ">=") {
      out.push_back({Tok::Sym, std::string(s.substr(i, 2)), start});
      i += 2;
      continue;
    }
    static constexpr std::string_view singles = "().{}?;|*-+<";
    if (singles.find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), start});
      ++i;
      continue;
    }
    throw InputError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

inline bool is_keyword(const std::string& w) {
  return w == "and" || w == "or" || w == "not" || w == "inv" || w == "delta" || w == "exists" ||
         w == "forall" || w == "self";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ConceptPtr concept_to_end() {
    auto c = concept_expr();
    expect_end();
    return c;
  }
  RolePtr role_to_end() {
    auto r = role_expr();
    expect_end();
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Name && peek().text == w; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw InputError(what + (t.kind == Tok::End ? " but reached end of input" : " but found '" + t.text + "'"),
                     t.pos);
  }
  void expect_sym(std::string_view s) {
    if (!at_sym(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("expected end of input");
  }

  ConceptPtr concept_expr() {
    auto lhs = or_expr();
    if (at_sym("->")) {
      ++pos_;
      return ast::implies(lhs, concept_expr());
    }
    return lhs;
  }
  ConceptPtr or_expr() {
    auto lhs = and_expr();
    while (at_word("or")) {
      ++pos_;
      lhs = ast::or_(lhs, and_expr());
    }
    return lhs;
  }
  ConceptPtr and_expr() {
    auto lhs = unary();
    while (at_word("and")) {
      ++pos_;
      lhs = ast::and_(lhs, unary());
    }
    return lhs;
  }

  unsigned bound() {
    if (peek().kind != Tok::Number || peek().text.find_first_of("./") != std::string::npos)
      fail("expected a positive integer bound");
    const std::string& t = peek().text;
    if (t.size() > 6) fail("bound too large");
    unsigned n = static_cast<unsigned>(std::stoul(t));
    if (n == 0) fail("bound must be at least 1");
    ++pos_;
    return n;
  }

  ConceptPtr unary() {
    if (at_word("not")) return ++pos_, ast::not_(unary());
    if (at_word("inv")) return ++pos_, ast::inv_neg(unary());
    if (at_word("delta")) return ++pos_, ast::delta(unary());
    if (at_word("exists")) {
      ++pos_;
      auto r = role_expr();
      expect_sym(".");
      if (at_word("self")) {
        ++pos_;
        if (r->kind != RoleKind::Name) throw InputError("local reflexivity needs a role name", toks_[pos_ - 1].pos);
        return ast::self_loop(r->name);
      }
      return ast::exists(r, unary());
    }
    if (at_word("forall")) {
      ++pos_;
      auto r = role_expr();
      expect_sym(".");
      return ast::forall(r, unary());
    }
    if (at_sym(">=") || at_sym("<")) {
      bool geq = at_sym(">=");
      std::size_t where = peek().pos;
      ++pos_;
      unsigned n = bound();
      auto r = role_postfix();
      if (!r->is_basic()) throw InputError("number restrictions need a basic role", where);
      if (at_sym(".")) {
        ++pos_;
        auto c = unary();
        return geq ? ast::at_least(n, r, c) : ast::less_than(n, r, c);
      }
      return geq ? ast::at_least(n, r) : ast::less_than(n, r);
    }
    return atom();
  }

  ConceptPtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      try {
        return ast::constant(Degree::parse(t.text));
      } catch (const InputError& e) {
        throw InputError(e.message(), t.pos);
      }
    }
    if (t.kind == Tok::Name) {
      if (is_keyword(t.text)) fail("expected a concept");
      ++pos_;
      return ast::concept_name(t.text);
    }
    if (at_sym("{")) {
      ++pos_;
      if (peek().kind != Tok::Name || is_keyword(peek().text)) fail("expected an individual name");
      std::string a = peek().text;
      ++pos_;
      expect_sym("}");
      return ast::nominal(a);
    }
    if (at_sym("(")) {
      ++pos_;
      auto c = concept_expr();
      expect_sym(")");
      return c;
    }
    fail("expected a concept");
  }

  RolePtr role_expr() {
    auto lhs = role_seq();
    while (at_sym("|")) {
      ++pos_;
      lhs = ast::role_union(lhs, role_seq());
    }
    return lhs;
  }
  RolePtr role_seq() {
    auto lhs = role_postfix();
    while (at_sym(";")) {
      ++pos_;
      lhs = ast::compose(lhs, role_postfix());
    }
    return lhs;
  }
  RolePtr role_postfix() {
    auto r = role_primary();
    for (;;) {
      if (at_sym("-")) r = ast::inverse(r);
      else if (at_sym("*")) r = ast::star(r);
      else if (at_sym("+")) r = ast::plus(r);
      else break;
      ++pos_;
    }
    return r;
  }
  RolePtr role_primary() {
    // A test "C ?" is tried first; on failure fall back to the role forms.
    std::size_t save = pos_;
    std::optional<InputError> test_error;
    try {
      auto c = unary();
      if (at_sym("?")) {
        ++pos_;
        return ast::test(c);
      }
    } catch (const InputError& e) {
      test_error = e;
    }
    std::size_t test_reach = pos_;
    pos_ = save;
    try {
      if (at_word("U")) return ++pos_, ast::universal();
      if (peek().kind == Tok::Name && !is_keyword(peek().text)) {
        std::string n = peek().text;
        ++pos_;
        return ast::role(n);
      }
      if (at_sym("(")) {
        ++pos_;
        auto r = role_expr();
        expect_sym(")");
        return r;
      }
      fail("expected a role");
    } catch (const InputError& e) {
      if (test_error && test_error->position() != InputError::npos && test_error->position() > e.position() &&
          test_reach > save)
        throw *test_error;
      throw;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws FeatureError naming the first construct the feature set forbids.
inline void check_features(const Concept& c, const FeatureSet& f);

inline void check_features(const Role& r, const FeatureSet& f) {
  switch (r.kind) {
    case RoleKind::Name: return;
    case RoleKind::Universal:
      if (!f.universal) throw FeatureError("universal role U requires feature U");
      return;
    case RoleKind::Inverse:
      if (!f.inverse) throw FeatureError("inverse role '" + to_string(r) + "' requires feature I");
      return check_features(*r.lhs, f);
    case RoleKind::Star: return check_features(*r.lhs, f);
    case RoleKind::Compose:
    case RoleKind::Union:
      check_features(*r.lhs, f);
      return check_features(*r.rhs, f);
    case RoleKind::Test: return check_features(*r.test, f);
  }
}

inline void check_features(const Concept& c, const FeatureSet& f) {
  auto need_basic = [&] {
    if (!c.role->is_basic()) throw FeatureError("'" + to_string(c) + "' needs a basic role");
  };
  switch (c.kind) {
    case ConceptKind::Constant:
    case ConceptKind::Name: return;
    case ConceptKind::Nominal:
      if (!f.nominals) throw FeatureError("nominal '" + to_string(c) + "' requires feature O");
      return;
    case ConceptKind::SelfLoop:
      if (!f.self) throw FeatureError("'" + to_string(c) + "' requires feature Self");
      return;
    case ConceptKind::Not:
    case ConceptKind::InvNeg:
    case ConceptKind::Delta: return check_features(*c.lhs, f);
    case ConceptKind::And:
    case ConceptKind::Or:
    case ConceptKind::Implies:
      check_features(*c.lhs, f);
      return check_features(*c.rhs, f);
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      check_features(*c.role, f);
      return check_features(*c.lhs, f);
    case ConceptKind::AtLeast:
    case ConceptKind::Less:
      need_basic();
      if (!f.has_q(c.n)) throw FeatureError("'" + to_string(c) + "' requires feature Q" + std::to_string(c.n));
      check_features(*c.role, f);
      return check_features(*c.lhs, f);
    case ConceptKind::AtLeastUnq:
    case ConceptKind::LessUnq:
      need_basic();
      if (!f.has_n(c.n)) throw FeatureError("'" + to_string(c) + "' requires feature N" + std::to_string(c.n));
      return check_features(*c.role, f);
  }
}

inline bool admits(const Concept& c, const FeatureSet& f) {
  try {
    check_features(c, f);
    return true;
  } catch (const FeatureError&) {
    return false;
  }
}

/// Parses without feature restrictions.
inline ConceptPtr parse_concept(std::string_view text) { return detail::Parser(text).concept_to_end(); }
inline RolePtr parse_role(std::string_view text) { return detail::Parser(text).role_to_end(); }

/// Parses and rejects constructs outside the feature set.
inline ConceptPtr parse_concept(std::string_view text, const FeatureSet& f) {
  auto c = parse_concept(text);
  check_features(*c, f);
  return c;
}
inline RolePtr parse_role(std::string_view text, const FeatureSet& f) {
  auto r = parse_role(text);
  check_features(*r, f);
  return r;
}

}  // namespace fdl
