#include "ltlshield/monitor/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {
namespace {

enum class Tok { End, Ident, True, False, Not, And, Or, Implies, LParen, RParen, Next, Until, Weak, Release, Glob, Fin };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token t;
    t.pos = pos_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      ++pos_;
      return t;
    };
    switch (c) {
      case '!': return single(Tok::Not);
      case '&': return single(Tok::And);
      case '|': return single(Tok::Or);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          t.kind = Tok::Implies;
          t.text = "->";
          pos_ += 2;
          return t;
        }
        throw ParseError("unexpected character '-'", pos_);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      t.text = std::string(src_.substr(start, pos_ - start));
      t.kind = keyword(t.text).value_or(Tok::Ident);
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

 private:
  static std::optional<Tok> keyword(const std::string& w) {
    if (w == "true") return Tok::True;
    if (w == "false") return Tok::False;
    if (w.size() != 1) return std::nullopt;
    switch (w[0]) {
      case 'X': return Tok::Next;
      case 'U': return Tok::Until;
      case 'W': return Tok::Weak;
      case 'R': return Tok::Release;
      case 'G': return Tok::Glob;
      case 'F': return Tok::Fin;
      default: return std::nullopt;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, const Alphabet* ap) : lex_(src), ap_(ap) { advance(); }

  Formula parse() {
    Formula f = implication();
    if (cur_.kind != Tok::End) throw ParseError("unexpected " + describe(cur_), cur_.pos);
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Formula implication() {
    Formula lhs = disjunction();
    if (cur_.kind == Tok::Implies) {
      advance();
      return Or(Not(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (cur_.kind == Tok::Or) {
      advance();
      f = Or(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = temporal();
    while (cur_.kind == Tok::And) {
      advance();
      f = And(f, temporal());
    }
    return f;
  }

  Formula temporal() {
    Formula lhs = unary();
    switch (cur_.kind) {
      case Tok::Until: advance(); return Until(lhs, temporal());
      case Tok::Weak: advance(); return WeakUntil(lhs, temporal());
      case Tok::Release: advance(); return Release(lhs, temporal());
      default: return lhs;
    }
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::Not: advance(); return Not(unary());
      case Tok::Next: advance(); return Next(unary());
      case Tok::Glob: advance(); return Globally(unary());
      case Tok::Fin: advance(); return Finally(unary());
      default: return primary();
    }
  }

  Formula primary() {
    Token t = cur_;
    switch (t.kind) {
      case Tok::True: advance(); return True();
      case Tok::False: advance(); return False();
      case Tok::Ident:
        if (ap_ != nullptr && !ap_->contains(t.text)) {
          throw ParseError("undeclared atomic proposition '" + t.text + "'", t.pos);
        }
        advance();
        return Atom(t.text);
      case Tok::LParen: {
        advance();
        Formula inner = implication();
        if (cur_.kind != Tok::RParen) throw ParseError("expected ')' but found " + describe(cur_), cur_.pos);
        advance();
        return inner;
      }
      default: throw ParseError("expected a formula but found " + describe(t), t.pos);
    }
  }

  Lexer lex_;
  const Alphabet* ap_;
  Token cur_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Alphabet& ap) { return Parser(text, &ap).parse(); }

Formula parse_formula(std::string_view text) { return Parser(text, nullptr).parse(); }

}  // namespace ltlshield::monitor
