#pragma once

// Formulas of the temporal language: booleans, Until/Since, the unit-window
// diamonds F1/O1, counting modalities Cn and Pnueli modalities Pnn.
//
// Concrete syntax, loosest binding first:
//   a -> b          right-associative
//   a | b, a & b    left-associative
//   a U b, a S b    right-associative, one shared level
//   !a, F1 a, O1 a
//   true, false, atoms, Cn(a), Pnn(a1, ..., an), (a)

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dtl {

enum class Kind { True, False, Atom, Not, And, Or, Implies, Until, Since, Future1, Past1, Count, Pnueli };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::string name;   // Atom
  unsigned arity = 0; // Count, Pnueli
  std::vector<Formula> args;
};

namespace fml {

inline Formula make(Kind k, std::vector<Formula> args = {}, unsigned arity = 0, std::string name = {}) {
  return std::make_shared<const Node>(Node{k, std::move(name), arity, std::move(args)});
}
inline Formula top() { return make(Kind::True); }
inline Formula bottom() { return make(Kind::False); }
inline Formula atom(std::string name) { return make(Kind::Atom, {}, 0, std::move(name)); }
inline Formula neg(Formula a) { return make(Kind::Not, {std::move(a)}); }
inline Formula conj(Formula a, Formula b) { return make(Kind::And, {std::move(a), std::move(b)}); }
inline Formula disj(Formula a, Formula b) { return make(Kind::Or, {std::move(a), std::move(b)}); }
inline Formula implies(Formula a, Formula b) { return make(Kind::Implies, {std::move(a), std::move(b)}); }
inline Formula until(Formula a, Formula b) { return make(Kind::Until, {std::move(a), std::move(b)}); }
inline Formula since(Formula a, Formula b) { return make(Kind::Since, {std::move(a), std::move(b)}); }
inline Formula future1(Formula a) { return make(Kind::Future1, {std::move(a)}); }
inline Formula past1(Formula a) { return make(Kind::Past1, {std::move(a)}); }
inline Formula count(unsigned n, Formula a) {
  if (n == 0) throw std::invalid_argument("counting modality needs n >= 1");
  return make(Kind::Count, {std::move(a)}, n);
}
inline Formula pnueli(std::vector<Formula> args) {
  if (args.empty()) throw std::invalid_argument("Pnueli modality needs n >= 1");
  auto n = static_cast<unsigned>(args.size());
  return make(Kind::Pnueli, std::move(args), n);
}

}  // namespace fml

inline bool same(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name || a->arity != b->arity || a->args.size() != b->args.size())
    return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!same(a->args[i], b->args[i])) return false;
  return true;
}

inline bool is_modal(Kind k) {
  return k == Kind::Until || k == Kind::Since || k == Kind::Future1 || k == Kind::Past1 || k == Kind::Count ||
         k == Kind::Pnueli;
}

struct Metrics {
  unsigned modal_depth = 0;
  std::set<std::string> atoms;
};

inline Metrics metrics(const Formula& f) {
  Metrics m;
  if (f->kind == Kind::Atom) m.atoms.insert(f->name);
  unsigned inner = 0;
  for (const auto& a : f->args) {
    Metrics sub = metrics(a);
    inner = std::max(inner, sub.modal_depth);
    m.atoms.merge(sub.atoms);
  }
  m.modal_depth = inner + (is_modal(f->kind) ? 1 : 0);
  return m;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline int precedence(Kind k) {
  switch (k) {
    case Kind::Implies: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Until:
    case Kind::Since: return 4;
    case Kind::Not:
    case Kind::Future1:
    case Kind::Past1: return 5;
    default: return 6;
  }
}

inline void print_to(std::string& out, const Formula& f, int need) {
  bool paren = precedence(f->kind) < need;
  if (paren) out += '(';
  auto binary = [&](const char* op, int left, int right) {
    print_to(out, f->args[0], left);
    out += op;
    print_to(out, f->args[1], right);
  };
  switch (f->kind) {
    case Kind::True: out += "true"; break;
    case Kind::False: out += "false"; break;
    case Kind::Atom: out += f->name; break;
    case Kind::Not:
      out += '!';
      print_to(out, f->args[0], 5);
      break;
    case Kind::Future1:
      out += "F1 ";
      print_to(out, f->args[0], 5);
      break;
    case Kind::Past1:
      out += "O1 ";
      print_to(out, f->args[0], 5);
      break;
    case Kind::Implies: binary(" -> ", 2, 1); break;
    case Kind::Or: binary(" | ", 2, 3); break;
    case Kind::And: binary(" & ", 3, 4); break;
    case Kind::Until: binary(" U ", 5, 4); break;
    case Kind::Since: binary(" S ", 5, 4); break;
    case Kind::Count:
      out += "C" + std::to_string(f->arity) + "(";
      print_to(out, f->args[0], 1);
      out += ')';
      break;
    case Kind::Pnueli:
      out += "Pn" + std::to_string(f->arity) + "(";
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) out += ", ";
        print_to(out, f->args[i], 1);
      }
      out += ')';
      break;
  }
  if (paren) out += ')';
}

}  // namespace detail

/// Minimally parenthesized text; parse(print(f)) rebuilds f exactly.
inline std::string print(const Formula& f) {
  std::string out;
  detail::print_to(out, f, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

class parse_error : public std::runtime_error {
 public:
  enum class Category { Lexical, Syntax, Arity };

  parse_error(Category cat, std::size_t position, std::set<std::string> expected, const std::string& message)
      : std::runtime_error(render(cat, position, expected, message)),
        category(cat),
        position(position),
        expected(std::move(expected)) {}

  Category category;
  std::size_t position;
  std::set<std::string> expected;

 private:
  static std::string render(Category cat, std::size_t pos, const std::set<std::string>& expected,
                            const std::string& message) {
    const char* what = cat == Category::Lexical ? "lexical error" : cat == Category::Syntax ? "syntax error" : "arity error";
    std::string s = std::string(what) + " at offset " + std::to_string(pos) + ": " + message;
    if (!expected.empty()) {
      s += " (expected one of:";
      for (const auto& e : expected) s += " " + e;
      s += ")";
    }
    return s;
  }
};

namespace detail {

enum class Tok { LParen, RParen, Comma, Bang, Amp, Bar, Arrow, Until, Since, F1, O1, True, False, Count, Pnueli, Ident, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  unsigned number = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Formula parse_all() {
    Formula f = implication();
    if (cur_.kind != Tok::End) fail({"'->'", "'|'", "'&'", "'U'", "'S'", "end of input"});
    return f;
  }

 private:
  [[noreturn]] void fail(std::set<std::string> expected) {
    std::string got = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
    throw parse_error(parse_error::Category::Syntax, cur_.pos, std::move(expected), "unexpected " + got);
  }

  void advance() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) ++at_;
    cur_ = Token{Tok::End, at_, "", 0};
    if (at_ >= src_.size()) return;
    std::size_t start = at_;
    char c = src_[at_];
    auto single = [&](Tok k) {
      ++at_;
      cur_ = Token{k, start, std::string(1, c), 0};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '!': return single(Tok::Bang);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Bar);
      case '-':
        if (at_ + 1 < src_.size() && src_[at_ + 1] == '>') {
          at_ += 2;
          cur_ = Token{Tok::Arrow, start, "->", 0};
          return;
        }
        throw parse_error(parse_error::Category::Lexical, start, {"'->'"}, "stray '-'");
      default: break;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      throw parse_error(parse_error::Category::Lexical, start, {}, std::string("unexpected character '") + c + "'");
    while (at_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[at_])) || src_[at_] == '_')) ++at_;
    std::string word(src_.substr(start, at_ - start));
    cur_ = Token{Tok::Ident, start, word, 0};
    if (word == "U") cur_.kind = Tok::Until;
    else if (word == "S") cur_.kind = Tok::Since;
    else if (word == "F1") cur_.kind = Tok::F1;
    else if (word == "O1") cur_.kind = Tok::O1;
    else if (word == "true") cur_.kind = Tok::True;
    else if (word == "false") cur_.kind = Tok::False;
    else if (auto n = numbered(word, "Pn")) { cur_.kind = Tok::Pnueli; cur_.number = *n; }
    else if (auto m = numbered(word, "C")) { cur_.kind = Tok::Count; cur_.number = *m; }
  }

  std::optional<unsigned> numbered(const std::string& word, std::string_view stem) {
    if (word.size() <= stem.size() || word.compare(0, stem.size(), stem) != 0) return std::nullopt;
    std::string digits = word.substr(stem.size());
    for (char d : digits)
      if (!std::isdigit(static_cast<unsigned char>(d))) return std::nullopt;
    if (digits.size() > 6)
      throw parse_error(parse_error::Category::Arity, cur_.pos, {}, "modality index too large in '" + word + "'");
    return static_cast<unsigned>(std::stoul(digits));
  }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) fail({what});
    advance();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (cur_.kind == Tok::Arrow) {
      advance();
      return fml::implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (cur_.kind == Tok::Bar) {
      advance();
      lhs = fml::disj(lhs, conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = temporal();
    while (cur_.kind == Tok::Amp) {
      advance();
      lhs = fml::conj(lhs, temporal());
    }
    return lhs;
  }

  Formula temporal() {
    Formula lhs = unary();
    if (cur_.kind == Tok::Until) {
      advance();
      return fml::until(lhs, temporal());
    }
    if (cur_.kind == Tok::Since) {
      advance();
      return fml::since(lhs, temporal());
    }
    return lhs;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::Bang: advance(); return fml::neg(unary());
      case Tok::F1: advance(); return fml::future1(unary());
      case Tok::O1: advance(); return fml::past1(unary());
      default: return primary();
    }
  }

  Formula primary() {
    Token t = cur_;
    switch (t.kind) {
      case Tok::True: advance(); return fml::top();
      case Tok::False: advance(); return fml::bottom();
      case Tok::Ident: advance(); return fml::atom(t.text);
      case Tok::LParen: {
        advance();
        Formula f = implication();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Count: {
        if (t.number == 0) throw parse_error(parse_error::Category::Arity, t.pos, {}, "C0 is not a modality (n >= 1)");
        advance();
        expect(Tok::LParen, "'('");
        Formula f = implication();
        expect(Tok::RParen, "')'");
        return fml::count(t.number, f);
      }
      case Tok::Pnueli: {
        if (t.number == 0) throw parse_error(parse_error::Category::Arity, t.pos, {}, "Pn0 is not a modality (n >= 1)");
        advance();
        expect(Tok::LParen, "'('");
        std::vector<Formula> args{implication()};
        while (cur_.kind == Tok::Comma) {
          advance();
          args.push_back(implication());
        }
        if (cur_.kind != Tok::RParen) fail({"','", "')'"});
        if (args.size() != t.number)
          throw parse_error(parse_error::Category::Arity, t.pos, {},
                            t.text + " takes " + std::to_string(t.number) + " arguments, got " +
                                std::to_string(args.size()));
        advance();
        return fml::pnueli(std::move(args));
      }
      default:
        fail({"'!'", "'F1'", "'O1'", "'true'", "'false'", "identifier", "'C<n>('", "'Pn<n>('", "'('"});
    }
  }

  std::string_view src_;
  std::size_t at_ = 0;
  Token cur_{Tok::End, 0, "", 0};
};

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

}  // namespace dtl
