#include "tetra/predicate.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace tetra {

bool valid_predicate_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'A' || name[0] > 'Z') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return false;
  }
  return true;
}

bool valid_variable_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return false;
  }
  return true;
}

struct MonadicFormula::Node {
  MonadicKind kind;
  std::string predicate;
  std::string variable;
  std::optional<MonadicFormula> lhs;  // Not operand, quantifier body, binary left
  std::optional<MonadicFormula> rhs;
};

MonadicFormula::MonadicFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

MonadicFormula MonadicFormula::atom(std::string predicate, std::string variable) {
  if (!valid_predicate_name(predicate)) {
    throw std::invalid_argument("invalid predicate name: \"" + predicate + "\"");
  }
  if (!valid_variable_name(variable)) {
    throw std::invalid_argument("invalid variable name: \"" + variable + "\"");
  }
  auto node = std::make_shared<Node>();
  node->kind = MonadicKind::Atom;
  node->predicate = std::move(predicate);
  node->variable = std::move(variable);
  return MonadicFormula(std::move(node));
}

MonadicFormula MonadicFormula::forall(std::string variable, MonadicFormula body) {
  if (!valid_variable_name(variable)) {
    throw std::invalid_argument("invalid variable name: \"" + variable + "\"");
  }
  auto node = std::make_shared<Node>();
  node->kind = MonadicKind::ForAll;
  node->variable = std::move(variable);
  node->lhs = std::move(body);
  return MonadicFormula(std::move(node));
}

MonadicFormula MonadicFormula::exists(std::string variable, MonadicFormula body) {
  if (!valid_variable_name(variable)) {
    throw std::invalid_argument("invalid variable name: \"" + variable + "\"");
  }
  auto node = std::make_shared<Node>();
  node->kind = MonadicKind::Exists;
  node->variable = std::move(variable);
  node->lhs = std::move(body);
  return MonadicFormula(std::move(node));
}

MonadicFormula neg(MonadicFormula f) {
  auto node = std::make_shared<MonadicFormula::Node>();
  node->kind = MonadicKind::Not;
  node->lhs = std::move(f);
  return MonadicFormula(std::move(node));
}

MonadicFormula conj(MonadicFormula lhs, MonadicFormula rhs) {
  auto node = std::make_shared<MonadicFormula::Node>();
  node->kind = MonadicKind::And;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return MonadicFormula(std::move(node));
}

MonadicFormula disj(MonadicFormula lhs, MonadicFormula rhs) {
  auto node = std::make_shared<MonadicFormula::Node>();
  node->kind = MonadicKind::Or;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return MonadicFormula(std::move(node));
}

MonadicFormula impl(MonadicFormula lhs, MonadicFormula rhs) {
  auto node = std::make_shared<MonadicFormula::Node>();
  node->kind = MonadicKind::Implies;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return MonadicFormula(std::move(node));
}

MonadicKind MonadicFormula::kind() const noexcept { return node_->kind; }

const std::string& MonadicFormula::predicate() const {
  assert(node_->kind == MonadicKind::Atom);
  return node_->predicate;
}

const std::string& MonadicFormula::variable() const {
  assert(node_->kind == MonadicKind::Atom || node_->kind == MonadicKind::ForAll ||
         node_->kind == MonadicKind::Exists);
  return node_->variable;
}

const MonadicFormula& MonadicFormula::operand() const {
  assert(node_->kind == MonadicKind::Not);
  return *node_->lhs;
}

const MonadicFormula& MonadicFormula::left() const {
  assert(node_->lhs.has_value() && node_->rhs.has_value());
  return *node_->lhs;
}

const MonadicFormula& MonadicFormula::right() const {
  assert(node_->rhs.has_value());
  return *node_->rhs;
}

const MonadicFormula& MonadicFormula::body() const {
  assert(node_->kind == MonadicKind::ForAll || node_->kind == MonadicKind::Exists);
  return *node_->lhs;
}

bool MonadicFormula::operator==(const MonadicFormula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case MonadicKind::Atom:
      return node_->predicate == other.node_->predicate &&
             node_->variable == other.node_->variable;
    case MonadicKind::Not:
      return *node_->lhs == *other.node_->lhs;
    case MonadicKind::And:
    case MonadicKind::Or:
    case MonadicKind::Implies:
      return *node_->lhs == *other.node_->lhs && *node_->rhs == *other.node_->rhs;
    case MonadicKind::ForAll:
    case MonadicKind::Exists:
      return node_->variable == other.node_->variable && *node_->lhs == *other.node_->lhs;
  }
  return false;
}

namespace {

enum class MTok {
  Predicate,
  Variable,
  Forall,
  Exists,
  Dot,
  Not,
  And,
  Or,
  Implies,
  LParen,
  RParen,
  End,
};

struct MToken {
  MTok kind;
  std::string text;
  std::size_t position;  // 0-based offset into the input
};

class MLexer {
 public:
  explicit MLexer(std::string_view text) : text_(text) {}

  static std::string at(std::size_t pos) {
    std::ostringstream os;
    os << "syntax error at position " << (pos + 1) << ": ";
    return os.str();
  }

  MToken next() {
    skip_space();
    const std::size_t pos = index_;
    if (index_ >= text_.size()) return {MTok::End, "", pos};
    const char c = text_[index_];
    if (c >= 'A' && c <= 'Z') {
      std::size_t start = index_++;
      while (index_ < text_.size() && text_[index_] >= '0' && text_[index_] <= '9') ++index_;
      return {MTok::Predicate, std::string(text_.substr(start, index_ - start)), pos};
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = index_++;
      while (index_ < text_.size() &&
             ((text_[index_] >= 'a' && text_[index_] <= 'z') ||
              (text_[index_] >= '0' && text_[index_] <= '9'))) {
        ++index_;
      }
      std::string word(text_.substr(start, index_ - start));
      if (word == "forall") return {MTok::Forall, word, pos};
      if (word == "exists") return {MTok::Exists, word, pos};
      if (!valid_variable_name(word)) {
        throw ParseError(at(pos) + "invalid variable name \"" + word + "\"", pos);
      }
      return {MTok::Variable, word, pos};
    }
    switch (c) {
      case '.':
        ++index_;
        return {MTok::Dot, ".", pos};
      case '~':
        ++index_;
        return {MTok::Not, "~", pos};
      case '&':
        ++index_;
        return {MTok::And, "&", pos};
      case '|':
        ++index_;
        return {MTok::Or, "|", pos};
      case '(':
        ++index_;
        return {MTok::LParen, "(", pos};
      case ')':
        ++index_;
        return {MTok::RParen, ")", pos};
      case '-':
        if (index_ + 1 < text_.size() && text_[index_ + 1] == '>') {
          index_ += 2;
          return {MTok::Implies, "->", pos};
        }
        throw ParseError(at(pos) + "expected \"->\"", pos);
      default:
        throw ParseError(at(pos) + "unexpected character '" + c + "'", pos);
    }
  }

 private:
  void skip_space() {
    while (index_ < text_.size() &&
           (text_[index_] == ' ' || text_[index_] == '\t' || text_[index_] == '\n' ||
            text_[index_] == '\r')) {
      ++index_;
    }
  }

  std::string_view text_;
  std::size_t index_ = 0;
};

class MParser {
 public:
  explicit MParser(std::string_view text) : lexer_(text), current_(lexer_.next()) {}

  MonadicFormula parse() {
    MonadicFormula f = parse_implies();
    if (current_.kind != MTok::End) fail("end of input");
    return f;
  }

 private:
  MonadicFormula parse_implies() {
    MonadicFormula lhs = parse_or();
    if (current_.kind == MTok::Implies) {
      advance();
      return impl(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  MonadicFormula parse_or() {
    MonadicFormula f = parse_and();
    while (current_.kind == MTok::Or) {
      advance();
      f = disj(std::move(f), parse_and());
    }
    return f;
  }

  MonadicFormula parse_and() {
    MonadicFormula f = parse_unary();
    while (current_.kind == MTok::And) {
      advance();
      f = conj(std::move(f), parse_unary());
    }
    return f;
  }

  MonadicFormula parse_unary() {
    if (current_.kind == MTok::Not) {
      advance();
      return neg(parse_unary());
    }
    if (current_.kind == MTok::Forall || current_.kind == MTok::Exists) {
      const bool universal = current_.kind == MTok::Forall;
      advance();
      if (current_.kind != MTok::Variable) fail("a variable");
      std::string var = current_.text;
      advance();
      if (current_.kind != MTok::Dot) fail("\".\"");
      advance();
      // The body extends as far right as possible.
      MonadicFormula body = parse_implies();
      return universal ? MonadicFormula::forall(std::move(var), std::move(body))
                       : MonadicFormula::exists(std::move(var), std::move(body));
    }
    return parse_atom();
  }

  MonadicFormula parse_atom() {
    if (current_.kind == MTok::Predicate) {
      std::string pred = current_.text;
      advance();
      if (current_.kind != MTok::LParen) fail("\"(\"");
      advance();
      if (current_.kind != MTok::Variable) fail("a variable");
      std::string var = current_.text;
      advance();
      if (current_.kind != MTok::RParen) fail("\")\"");
      advance();
      return MonadicFormula::atom(std::move(pred), std::move(var));
    }
    if (current_.kind == MTok::LParen) {
      advance();
      MonadicFormula f = parse_implies();
      if (current_.kind != MTok::RParen) fail("\")\"");
      advance();
      return f;
    }
    fail("an atom or \"(\"");
  }

  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found =
        current_.kind == MTok::End ? "end of input" : "\"" + current_.text + "\"";
    throw ParseError(MLexer::at(current_.position) + "expected " + expected + ", found " + found,
                     current_.position);
  }

  MLexer lexer_;
  MToken current_;
};

}  // namespace

MonadicFormula parse_monadic(std::string_view text) { return MParser(text).parse(); }

namespace {

constexpr int kMImpliesLevel = 0;
constexpr int kMOrLevel = 1;
constexpr int kMAndLevel = 2;
constexpr int kMNotLevel = 3;

void render_into(const MonadicFormula& f, int level, std::string& out) {
  switch (f.kind()) {
    case MonadicKind::Atom:
      out += f.predicate();
      out += '(';
      out += f.variable();
      out += ')';
      return;
    case MonadicKind::Not:
      out += '~';
      render_into(f.operand(), kMNotLevel, out);
      return;
    case MonadicKind::And:
    case MonadicKind::Or:
    case MonadicKind::Implies: {
      int own;
      const char* op;
      if (f.kind() == MonadicKind::And) {
        own = kMAndLevel;
        op = " & ";
      } else if (f.kind() == MonadicKind::Or) {
        own = kMOrLevel;
        op = " | ";
      } else {
        own = kMImpliesLevel;
        op = " -> ";
      }
      const bool parens = level > own;
      if (parens) out += '(';
      if (f.kind() == MonadicKind::Implies) {
        render_into(f.left(), own + 1, out);
        out += op;
        render_into(f.right(), own, out);
      } else {
        render_into(f.left(), own, out);
        out += op;
        render_into(f.right(), own + 1, out);
      }
      if (parens) out += ')';
      return;
    }
    case MonadicKind::ForAll:
    case MonadicKind::Exists: {
      // A quantifier swallows everything to its right when re-parsed, so
      // it needs parentheses in any context tighter than top level.
      const bool parens = level > kMImpliesLevel;
      if (parens) out += '(';
      out += f.kind() == MonadicKind::ForAll ? "forall " : "exists ";
      out += f.variable();
      out += ". ";
      render_into(f.body(), kMImpliesLevel, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string render(const MonadicFormula& f) {
  std::string out;
  render_into(f, kMImpliesLevel, out);
  return out;
}

namespace {

void collect_predicates(const MonadicFormula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case MonadicKind::Atom:
      if (std::find(out.begin(), out.end(), f.predicate()) == out.end()) {
        out.push_back(f.predicate());
      }
      return;
    case MonadicKind::Not:
      collect_predicates(f.operand(), out);
      return;
    case MonadicKind::And:
    case MonadicKind::Or:
    case MonadicKind::Implies:
      collect_predicates(f.left(), out);
      collect_predicates(f.right(), out);
      return;
    case MonadicKind::ForAll:
    case MonadicKind::Exists:
      collect_predicates(f.body(), out);
      return;
  }
}

void collect_free(const MonadicFormula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  switch (f.kind()) {
    case MonadicKind::Atom:
      if (std::find(bound.begin(), bound.end(), f.variable()) == bound.end() &&
          std::find(out.begin(), out.end(), f.variable()) == out.end()) {
        out.push_back(f.variable());
      }
      return;
    case MonadicKind::Not:
      collect_free(f.operand(), bound, out);
      return;
    case MonadicKind::And:
    case MonadicKind::Or:
    case MonadicKind::Implies:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case MonadicKind::ForAll:
    case MonadicKind::Exists:
      bound.push_back(f.variable());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::vector<std::string> predicates_of(const MonadicFormula& f) {
  std::vector<std::string> out;
  collect_predicates(f, out);
  return out;
}

std::vector<std::string> free_variables(const MonadicFormula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const MonadicFormula& f) { return free_variables(f).empty(); }

FiniteModel::FiniteModel(std::vector<std::string> domain) : domain_(std::move(domain)) {
  if (domain_.empty()) throw PreconditionError("model domain must be nonempty");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    for (std::size_t j = i + 1; j < domain_.size(); ++j) {
      if (domain_[i] == domain_[j]) {
        throw PreconditionError("duplicate domain element \"" + domain_[i] + "\"");
      }
    }
  }
}

FiniteModel FiniteModel::standard(std::size_t n) {
  std::vector<std::string> domain;
  domain.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) domain.push_back("d" + std::to_string(i));
  return FiniteModel(std::move(domain));
}

void FiniteModel::set_extension(const std::string& predicate,
                                std::vector<std::string> members) {
  if (!valid_predicate_name(predicate)) {
    throw PreconditionError("invalid predicate name: \"" + predicate + "\"");
  }
  std::vector<std::string> cleaned;
  for (auto& member : members) {
    if (std::find(domain_.begin(), domain_.end(), member) == domain_.end()) {
      throw PreconditionError("extension member \"" + member +
                              "\" is not a domain element");
    }
    if (std::find(cleaned.begin(), cleaned.end(), member) == cleaned.end()) {
      cleaned.push_back(std::move(member));
    }
  }
  // Keep extensions in domain order so equal sets print identically.
  std::vector<std::string> ordered;
  for (const auto& element : domain_) {
    if (std::find(cleaned.begin(), cleaned.end(), element) != cleaned.end()) {
      ordered.push_back(element);
    }
  }
  for (auto& entry : extensions_) {
    if (entry.first == predicate) {
      entry.second = std::move(ordered);
      return;
    }
  }
  extensions_.emplace_back(predicate, std::move(ordered));
}

bool FiniteModel::has_predicate(const std::string& predicate) const noexcept {
  for (const auto& entry : extensions_) {
    if (entry.first == predicate) return true;
  }
  return false;
}

const std::vector<std::string>& FiniteModel::extension(const std::string& predicate) const {
  for (const auto& entry : extensions_) {
    if (entry.first == predicate) return entry.second;
  }
  throw UnknownPredicateError(predicate);
}

bool FiniteModel::holds(const std::string& predicate, const std::string& element) const {
  const auto& ext = extension(predicate);
  return std::find(ext.begin(), ext.end(), element) != ext.end();
}

std::vector<std::string> FiniteModel::predicates() const {
  std::vector<std::string> out;
  out.reserve(extensions_.size());
  for (const auto& entry : extensions_) out.push_back(entry.first);
  return out;
}

std::string FiniteModel::to_string() const {
  std::ostringstream os;
  os << "domain {";
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i != 0) os << ',';
    os << domain_[i];
  }
  os << '}';
  for (const auto& [predicate, ext] : extensions_) {
    os << "; " << predicate << "={";
    for (std::size_t i = 0; i < ext.size(); ++i) {
      if (i != 0) os << ',';
      os << ext[i];
    }
    os << '}';
  }
  return os.str();
}

bool FiniteModel::operator==(const FiniteModel& other) const {
  if (domain_ != other.domain_) return false;
  if (extensions_.size() != other.extensions_.size()) return false;
  // Extension order is presentation only; compare as predicate -> set.
  for (const auto& [predicate, ext] : extensions_) {
    if (!other.has_predicate(predicate) || other.extension(predicate) != ext) return false;
  }
  return true;
}

namespace {

using Environment = std::vector<std::pair<std::string, std::string>>;

bool eval_in(const MonadicFormula& f, const FiniteModel& m, Environment& env) {
  switch (f.kind()) {
    case MonadicKind::Atom: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == f.variable()) return m.holds(f.predicate(), it->second);
      }
      throw OpenFormulaError(f.variable());
    }
    case MonadicKind::Not:
      return !eval_in(f.operand(), m, env);
    case MonadicKind::And:
      return eval_in(f.left(), m, env) && eval_in(f.right(), m, env);
    case MonadicKind::Or:
      return eval_in(f.left(), m, env) || eval_in(f.right(), m, env);
    case MonadicKind::Implies:
      return !eval_in(f.left(), m, env) || eval_in(f.right(), m, env);
    case MonadicKind::ForAll: {
      for (const auto& element : m.domain()) {
        env.emplace_back(f.variable(), element);
        const bool value = eval_in(f.body(), m, env);
        env.pop_back();
        if (!value) return false;
      }
      return true;
    }
    case MonadicKind::Exists: {
      for (const auto& element : m.domain()) {
        env.emplace_back(f.variable(), element);
        const bool value = eval_in(f.body(), m, env);
        env.pop_back();
        if (value) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace

bool eval_model(const MonadicFormula& f, const FiniteModel& m) {
  Environment env;
  return eval_in(f, m, env);
}

ModelSequence::ModelSequence(std::vector<std::string> predicates, std::size_t n)
    : predicates_(std::move(predicates)), n_(n), bits_(predicates_.size() * n) {
  if (n_ == 0) throw PreconditionError("domain size must be at least 1");
}

FiniteModel ModelSequence::operator[](std::size_t index) const {
  FiniteModel m = FiniteModel::standard(n_);
  for (std::size_t p = 0; p < predicates_.size(); ++p) {
    std::vector<std::string> members;
    for (std::size_t j = 0; j < n_; ++j) {
      if ((index >> (p * n_ + j)) & 1u) members.push_back(m.domain()[j]);
    }
    m.set_extension(predicates_[p], std::move(members));
  }
  return m;
}

ModelSequence enumerate_models(std::vector<std::string> predicates, std::size_t n,
                               std::size_t max_bits) {
  if (n == 0) throw PreconditionError("domain size must be at least 1");
  const std::size_t bits = predicates.size() * n;
  if (bits > max_bits) {
    throw CapExceededError("model enumeration needs " + std::to_string(bits) +
                           " bits, cap is " + std::to_string(max_bits));
  }
  return ModelSequence(std::move(predicates), n);
}

namespace {

std::vector<std::string> shared_predicates(const MonadicFormula& p, const MonadicFormula& q) {
  std::vector<std::string> preds = predicates_of(p);
  for (const auto& name : predicates_of(q)) {
    if (std::find(preds.begin(), preds.end(), name) == preds.end()) preds.push_back(name);
  }
  return preds;
}

void require_closed(const MonadicFormula& f) {
  const auto free = free_variables(f);
  if (!free.empty()) throw OpenFormulaError(free.front());
}

}  // namespace

FinEquivalenceVerdict equivalent_fin(const MonadicFormula& p, const MonadicFormula& q,
                                     std::size_t max_n, std::size_t max_bits) {
  require_closed(p);
  require_closed(q);
  const std::vector<std::string> preds = shared_predicates(p, q);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const FiniteModel& m : enumerate_models(preds, n, max_bits)) {
      if (eval_model(p, m) != eval_model(q, m)) return {false, m};
    }
  }
  return {true, std::nullopt};
}

std::optional<FiniteModel> first_model_satisfying(const MonadicFormula& f, std::size_t max_n,
                                                  std::size_t max_bits) {
  require_closed(f);
  const std::vector<std::string> preds = predicates_of(f);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const FiniteModel& m : enumerate_models(preds, n, max_bits)) {
      if (eval_model(f, m)) return m;
    }
  }
  return std::nullopt;
}

PredicateKotiFormulas predicate_koti_formulas() {
  const MonadicFormula fx = MonadicFormula::atom("F", "x");
  PredicateKotiFormulas out{
      .a = MonadicFormula::exists("x", fx),
      .b = MonadicFormula::exists("x", neg(fx)),
      .proper = {},
      .quantified = {},
      .guarded = {},
  };
  out.proper = {
      conj(out.a, neg(out.b)),
      conj(neg(out.a), out.b),
      conj(out.a, out.b),
      conj(neg(out.a), neg(out.b)),
  };
  out.quantified = {
      MonadicFormula::forall("x", fx),
      MonadicFormula::forall("x", neg(fx)),
      conj(out.a, out.b),
      MonadicFormula::forall("x", conj(fx, neg(fx))),
  };
  const auto& c = out.proper;
  out.guarded = {
      c[0],
      conj(c[1], neg(c[0])),
      conj(conj(c[2], neg(c[0])), neg(c[1])),
      conj(conj(conj(c[3], neg(c[0])), neg(c[1])), neg(c[2])),
  };
  return out;
}

bool PredicateKotiReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PredicateCheck& check) { return check.passed; });
}

PredicateKotiReport predicate_koti_check(std::size_t max_n, std::size_t max_bits) {
  if (max_n < 2) throw PreconditionError("max_n must be at least 2");
  const PredicateKotiFormulas formulas = predicate_koti_formulas();
  PredicateKotiReport report;
  report.max_n = max_n;

  for (std::size_t i = 0; i < 4; ++i) {
    auto verdict = equivalent_fin(formulas.proper[i], formulas.quantified[i], max_n, max_bits);
    report.checks.push_back({"C" + std::to_string(i + 1) + " <-> " +
                                 render(formulas.quantified[i]),
                             verdict.equivalent, verdict.countermodel});
  }

  {
    auto witness = first_model_satisfying(formulas.proper[3], max_n, max_bits);
    report.checks.push_back({"C4 unsatisfiable for n=1.." + std::to_string(max_n),
                             !witness.has_value(), witness});
  }

  {
    auto witness = first_model_satisfying(formulas.proper[2], 1, max_bits);
    report.checks.push_back({"C3 unsatisfiable at n=1", !witness.has_value(), witness});
  }

  {
    PredicateCheck check{"C3 satisfiable at each n=2.." + std::to_string(max_n), true,
                         std::nullopt};
    for (std::size_t n = 2; n <= max_n; ++n) {
      std::optional<FiniteModel> witness;
      for (const FiniteModel& m : enumerate_models(predicates_of(formulas.proper[2]), n,
                                                   max_bits)) {
        if (eval_model(formulas.proper[2], m)) {
          witness = m;
          break;
        }
      }
      if (!witness) {
        check.passed = false;
        check.model = std::nullopt;
        break;
      }
      if (!check.model) check.model = witness;  // keep the smallest-domain witness
    }
    report.checks.push_back(std::move(check));
  }

  {
    const MonadicFormula fx = MonadicFormula::atom("F", "x");
    const std::pair<MonadicFormula, MonadicFormula> dualities[] = {
        {neg(MonadicFormula::exists("x", neg(fx))), MonadicFormula::forall("x", fx)},
        {neg(MonadicFormula::exists("x", fx)), MonadicFormula::forall("x", neg(fx))},
    };
    for (const auto& [lhs, rhs] : dualities) {
      auto verdict = equivalent_fin(lhs, rhs, max_n, max_bits);
      report.checks.push_back({render(lhs) + " <-> " + render(rhs), verdict.equivalent,
                               verdict.countermodel});
    }
  }

  {
    PredicateCheck exclusion{"pairwise exclusion over all models", true, std::nullopt};
    PredicateCheck exhaustiveness{"joint exhaustiveness over all models", true, std::nullopt};
    const std::vector<std::string> preds = predicates_of(formulas.proper[2]);
    for (std::size_t n = 1; n <= max_n && (exclusion.passed || exhaustiveness.passed); ++n) {
      for (const FiniteModel& m : enumerate_models(preds, n, max_bits)) {
        bool values[4];
        int satisfied = 0;
        for (std::size_t i = 0; i < 4; ++i) {
          values[i] = eval_model(formulas.proper[i], m);
          if (values[i]) ++satisfied;
        }
        if (satisfied > 1 && exclusion.passed) {
          exclusion.passed = false;
          exclusion.model = m;
        }
        if (satisfied == 0 && exhaustiveness.passed) {
          exhaustiveness.passed = false;
          exhaustiveness.model = m;
        }
      }
    }
    report.checks.push_back(std::move(exclusion));
    report.checks.push_back(std::move(exhaustiveness));
  }

  {
    PredicateCheck check{"guarded tuple componentwise equivalent", true, std::nullopt};
    for (std::size_t i = 0; i < 4; ++i) {
      auto verdict = equivalent_fin(formulas.guarded[i], formulas.proper[i], max_n, max_bits);
      if (!verdict.equivalent) {
        check.passed = false;
        check.model = verdict.countermodel;
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace tetra
