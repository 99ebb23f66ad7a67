#include "tetra/formula.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace tetra {

bool SentenceLetter::valid_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'A' || name[0] > 'Z') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

SentenceLetter::SentenceLetter(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) {
    throw std::invalid_argument("invalid sentence letter: \"" + name_ + "\"");
  }
}

Formula Formula::letter(SentenceLetter l) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Letter;
  node->letter = std::move(l);
  return Formula(std::move(node));
}

Formula neg(Formula f) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = NodeKind::Not;
  node->lhs = std::move(f);
  return Formula(std::move(node));
}

Formula conj(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = NodeKind::And;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula disj(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = NodeKind::Or;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula impl(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = NodeKind::Implies;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

bool Formula::operator==(const Formula& rhs) const noexcept {
  if (node_ == rhs.node_) return true;
  if (kind() != rhs.kind()) return false;
  switch (kind()) {
    case NodeKind::Letter:
      return as_letter() == rhs.as_letter();
    case NodeKind::Not:
      return operand() == rhs.operand();
    default:
      return left() == rhs.left() && right() == rhs.right();
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { LetterTok, NotTok, AndTok, OrTok, ImpliesTok, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t position;  // 0-based offset into the input
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::End, "", start};
    const char c = text_[pos_];
    switch (c) {
      case '~': ++pos_; return {Token::NotTok, "~", start};
      case '&': ++pos_; return {Token::AndTok, "&", start};
      case '|': ++pos_; return {Token::OrTok, "|", start};
      case '(': ++pos_; return {Token::LParen, "(", start};
      case ')': ++pos_; return {Token::RParen, ")", start};
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Token::ImpliesTok, "->", start};
        }
        throw ParseError(at(start) + "expected \"->\"", start);
      default:
        break;
    }
    if (c >= 'A' && c <= 'Z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      Token tok{Token::LetterTok, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
      return tok;
    }
    throw ParseError(at(start) + "unexpected character '" + std::string(1, c) + "'", start);
  }

  static std::string at(std::size_t pos) {
    std::ostringstream os;
    os << "syntax error at position " << (pos + 1) << ": ";
    return os.str();
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
  if (t.kind == Token::End) return "end of input";
  return "\"" + t.text + "\"";
}

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text), lookahead_(lexer_.next()) {}

  Formula parse_all() {
    Formula f = parse_implies();
    if (lookahead_.kind != Token::End) {
      fail("expected end of input or an operator");
    }
    return f;
  }

private:
  // implies := or ( "->" implies )?   (right-associative)
  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lookahead_.kind == Token::ImpliesTok) {
      advance();
      return impl(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (lookahead_.kind == Token::OrTok) {
      advance();
      lhs = disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (lookahead_.kind == Token::AndTok) {
      advance();
      lhs = conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (lookahead_.kind == Token::NotTok) {
      advance();
      return neg(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    if (lookahead_.kind == Token::LetterTok) {
      Formula f = Formula::letter(lookahead_.text);
      advance();
      return f;
    }
    if (lookahead_.kind == Token::LParen) {
      advance();
      Formula f = parse_implies();
      if (lookahead_.kind != Token::RParen) {
        fail("expected \")\"");
      }
      advance();
      return f;
    }
    fail("expected a formula");
  }

  void advance() { lookahead_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(Lexer::at(lookahead_.position) + expected + ", found " + describe(lookahead_),
                     lookahead_.position);
  }

  Lexer lexer_;
  Token lookahead_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Precedence levels for the printer; larger binds tighter.
enum Level : int { ImpliesLevel = 0, OrLevel = 1, AndLevel = 2, NotLevel = 3, AtomLevel = 4 };

int level_of(NodeKind kind) {
  switch (kind) {
    case NodeKind::Letter: return AtomLevel;
    case NodeKind::Not: return NotLevel;
    case NodeKind::And: return AndLevel;
    case NodeKind::Or: return OrLevel;
    case NodeKind::Implies: return ImpliesLevel;
  }
  return AtomLevel;
}

// `minimum` is the loosest level printable without parentheses in this slot.
void render_into(const Formula& f, int minimum, std::string& out) {
  const int level = level_of(f.kind());
  const bool parens = level < minimum;
  if (parens) out += '(';
  switch (f.kind()) {
    case NodeKind::Letter:
      out += f.as_letter().name();
      break;
    case NodeKind::Not:
      out += '~';
      render_into(f.operand(), NotLevel, out);
      break;
    case NodeKind::And:
      render_into(f.left(), AndLevel, out);
      out += " & ";
      render_into(f.right(), AndLevel + 1, out);  // right-nested & needs parens
      break;
    case NodeKind::Or:
      render_into(f.left(), OrLevel, out);
      out += " | ";
      render_into(f.right(), OrLevel + 1, out);
      break;
    case NodeKind::Implies:
      render_into(f.left(), ImpliesLevel + 1, out);  // left-nested -> needs parens
      out += " -> ";
      render_into(f.right(), ImpliesLevel, out);
      break;
  }
  if (parens) out += ')';
}

void collect_letters(const Formula& f, LetterSet& out) {
  switch (f.kind()) {
    case NodeKind::Letter: {
      for (const auto& l : out) {
        if (l == f.as_letter()) return;
      }
      out.push_back(f.as_letter());
      return;
    }
    case NodeKind::Not:
      collect_letters(f.operand(), out);
      return;
    default:
      collect_letters(f.left(), out);
      collect_letters(f.right(), out);
      return;
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, ImpliesLevel, out);
  return out;
}

LetterSet letters(const Formula& f) {
  LetterSet out;
  collect_letters(f, out);
  return out;
}

LetterSet letters_of_all(const std::vector<Formula>& fs) {
  LetterSet out;
  for (const auto& f : fs) collect_letters(f, out);
  return out;
}

}  // namespace tetra
