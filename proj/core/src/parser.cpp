#include "cqe/parser.hpp"

#include <algorithm>
#include <optional>

namespace cqe {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected, std::string excerpt)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
                         " near '" + excerpt + "'"),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      excerpt_(std::move(excerpt)) {}

namespace {

enum class Tok { Ident, Tilde, Amp, Bar, Arrow, LParen, RParen, End, Invalid };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r')) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, {}, start};
    char c = src_[pos_];
    if (c >= 'a' && c <= 'z') {
      while (pos_ < src_.size() && ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
                                    (src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::Ident, src_.substr(start, pos_ - start), start};
    }
    ++pos_;
    switch (c) {
      case '~':
        return {Tok::Tilde, src_.substr(start, 1), start};
      case '&':
        return {Tok::Amp, src_.substr(start, 1), start};
      case '|':
        return {Tok::Bar, src_.substr(start, 1), start};
      case '(':
        return {Tok::LParen, src_.substr(start, 1), start};
      case ')':
        return {Tok::RParen, src_.substr(start, 1), start};
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          ++pos_;
          return {Tok::Arrow, src_.substr(start, 2), start};
        }
        break;
      default:
        break;
    }
    return {Tok::Invalid, src_.substr(start, 1), start};
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

// Level::L parses propositional formulas, Level::M modal ones.
enum class Level { L, M };

template <Level level>
struct Result;
template <>
struct Result<Level::L> {
  using type = LFormula;
};
template <>
struct Result<Level::M> {
  using type = MFormula;
};

class Parser {
 public:
  Parser(std::string_view src, std::size_t line) : src_(src), line_(line), lexer_(src) { advance(); }

  template <Level level>
  typename Result<level>::type parse_all() {
    auto f = formula<level>();
    if (cur_.kind != Tok::End) fail("end of input or a connective");
    return f;
  }

  LFormula parse_box_body() {
    expect(Tok::LParen, "'(' after box");
    depth_box_ = true;
    auto inner = formula<Level::L>();
    depth_box_ = false;
    expect(Tok::RParen, "')' closing box");
    return inner;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t col = std::min(cur_.offset + 1, std::max<std::size_t>(src_.size(), 1));
    std::size_t from = cur_.offset >= 8 ? cur_.offset - 8 : 0;
    std::string excerpt(src_.substr(std::min(from, src_.size()), 20));
    throw ParseError(line_, col, expected, excerpt);
  }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) fail(what);
    advance();
  }

  template <Level level>
  typename Result<level>::type formula() {
    auto lhs = disjunction<level>();
    if (cur_.kind == Tok::Arrow) {
      advance();
      auto rhs = formula<level>();
      if constexpr (level == Level::L) {
        return implies(std::move(lhs), std::move(rhs));
      } else {
        return mimplies(std::move(lhs), std::move(rhs));
      }
    }
    return lhs;
  }

  template <Level level>
  typename Result<level>::type disjunction() {
    auto lhs = conjunction<level>();
    while (cur_.kind == Tok::Bar) {
      advance();
      auto rhs = conjunction<level>();
      if constexpr (level == Level::L) {
        lhs = disj(std::move(lhs), std::move(rhs));
      } else {
        lhs = mdisj(std::move(lhs), std::move(rhs));
      }
    }
    return lhs;
  }

  template <Level level>
  typename Result<level>::type conjunction() {
    auto lhs = unary<level>();
    while (cur_.kind == Tok::Amp) {
      advance();
      auto rhs = unary<level>();
      if constexpr (level == Level::L) {
        lhs = conj(std::move(lhs), std::move(rhs));
      } else {
        lhs = mconj(std::move(lhs), std::move(rhs));
      }
    }
    return lhs;
  }

  template <Level level>
  typename Result<level>::type unary() {
    if (cur_.kind == Tok::Tilde) {
      advance();
      auto operand = unary<level>();
      if constexpr (level == Level::L) {
        return neg(std::move(operand));
      } else {
        return mneg(std::move(operand));
      }
    }
    return primary<level>();
  }

  template <Level level>
  typename Result<level>::type primary() {
    if (cur_.kind == Tok::LParen) {
      advance();
      auto f = formula<level>();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (cur_.kind != Tok::Ident) {
      fail(level == Level::L ? "an atom, 'bot', 'top', '~' or '('" : "box(...), 'bot', 'top', '~' or '('");
    }
    std::string_view word = cur_.text;
    if (word == "bot" || word == "top") {
      advance();
      if constexpr (level == Level::L) {
        return word == "bot" ? bottom() : top();
      } else {
        return word == "bot" ? mbottom() : mtop();
      }
    }
    if (word == "box") {
      if constexpr (level == Level::L) {
        fail(depth_box_ ? "a propositional formula (nested modality)" : "a propositional formula, not box");
      } else {
        advance();
        return box(parse_box_body());
      }
    }
    if constexpr (level == Level::L) {
      auto a = atom(std::string(word));
      advance();
      return a;
    } else {
      fail("box(...) around the atom '" + std::string(word) + "'");
    }
  }

  std::string_view src_;
  std::size_t line_;
  Lexer lexer_;
  Token cur_{};
  bool depth_box_ = false;
};

}  // namespace

LFormula parse_l(std::string_view text, std::size_t line) { return Parser(text, line).parse_all<Level::L>(); }

MFormula parse_m(std::string_view text, std::size_t line) { return Parser(text, line).parse_all<Level::M>(); }

}  // namespace cqe
