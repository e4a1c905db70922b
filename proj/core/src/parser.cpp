#include "epitab/parser.hpp"

#include <cctype>

namespace epitab {
namespace {

class Parser {
 public:
  Parser(std::string_view text, FormulaArena& arena,
         const AgentUniverse& universe)
      : text_(text), arena_(arena), universe_(universe) {}

  FormulaId run() {
    FormulaId f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_])))
      fail("expected identifier");
    ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  int agent() {
    std::size_t at = pos_;
    std::string name = identifier();
    int id = universe_.id_of(name);
    if (id < 0) {
      pos_ = at;
      fail("unknown agent name '" + name + "'");
    }
    return id;
  }

  Coalition coalition() {
    skip_ws();
    std::size_t at = pos_;
    if (!eat('{')) fail("expected '{'");
    skip_ws();
    if (peek() == '}') {
      pos_ = at;
      fail("empty coalition literal");
    }
    Coalition c;
    c = c.unite(Coalition::singleton(agent()));
    while (eat(',')) c = c.unite(Coalition::singleton(agent()));
    if (!eat('}')) fail("expected '}' or ','");
    return c;
  }

  FormulaId parse_iff() {
    FormulaId l = parse_implies();
    while (eat("<->")) {
      FormulaId r = parse_implies();
      l = arena_.conjunction(desugar_implies(l, r), desugar_implies(r, l));
    }
    return l;
  }

  FormulaId parse_implies() {
    FormulaId l = parse_or();
    skip_ws();
    // must not swallow the '-' of a future token; only "->" exists
    if (eat("->")) {
      FormulaId r = parse_implies();  // right-assoc
      return desugar_implies(l, r);
    }
    return l;
  }

  FormulaId desugar_implies(FormulaId l, FormulaId r) {
    return arena_.negation(arena_.conjunction(l, arena_.negation(r)));
  }

  FormulaId parse_or() {
    FormulaId l = parse_and();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        FormulaId r = parse_and();
        l = arena_.negation(
            arena_.conjunction(arena_.negation(l), arena_.negation(r)));
      } else {
        break;
      }
    }
    return l;
  }

  FormulaId parse_and() {
    FormulaId l = parse_unary();
    while (eat('&')) l = arena_.conjunction(l, parse_unary());
    return l;
  }

  FormulaId parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return arena_.negation(parse_unary());
    }
    if (c == 'D' || c == 'C') {
      ++pos_;
      Coalition a = coalition();
      FormulaId f = parse_unary();
      return c == 'D' ? arena_.dist(a, f) : arena_.comm(a, f);
    }
    if (c == 'K') {
      ++pos_;
      int id = agent();
      return arena_.dist(Coalition::singleton(id), parse_unary());
    }
    if (c == '(') {
      ++pos_;
      FormulaId f = parse_iff();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::islower(static_cast<unsigned char>(c))) return arena_.atom(identifier());
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  FormulaArena& arena_;
  const AgentUniverse& universe_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaId parse(std::string_view text, FormulaArena& arena,
                const AgentUniverse& universe) {
  return Parser(text, arena, universe).run();
}

}  // namespace epitab
