#include "lieb/presentation.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace lieb {

namespace {

struct Token {
  enum class Type {
    num, ident, lbracket, rbracket, lparen, rparen,
    comma, plus, minus, star, dashv, vdash, end
  };
  Type type;
  std::string text;
  int col;
};

class Lexer {
 public:
  Lexer(std::string s, int line) : s_(std::move(s)), line_(line) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, tok_.col); }
  int line() const { return line_; }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      tok_ = {Token::Type::end, "", col};
      return;
    }
    char c = s_[pos_];
    auto one = [&](Token::Type t) {
      ++pos_;
      tok_ = {t, std::string(1, c), col};
    };
    switch (c) {
      case '[': return one(Token::Type::lbracket);
      case ']': return one(Token::Type::rbracket);
      case '(': return one(Token::Type::lparen);
      case ')': return one(Token::Type::rparen);
      case ',': return one(Token::Type::comma);
      case '+': return one(Token::Type::plus);
      case '*': return one(Token::Type::star);
      case '-':
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '|') {
          pos_ += 2;
          tok_ = {Token::Type::dashv, "-|", col};
          return;
        }
        return one(Token::Type::minus);
      case '|':
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '-') {
          pos_ += 2;
          tok_ = {Token::Type::vdash, "|-", col};
          return;
        }
        throw parse_error("stray '|'", line_, col);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        text += s_[pos_++];
      tok_ = {Token::Type::num, text, col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '.' || s_[pos_] == '\''))
        text += s_[pos_++];
      tok_ = {Token::Type::ident, text, col};
      return;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", line_, col);
  }

  std::string s_;
  int line_;
  std::size_t pos_ = 0;
  Token tok_{Token::Type::end, "", 1};
};

// '.'-separated ids, a single declared id, or juxtaposed single-character
// ids; apostrophes mark dotted letters.
std::vector<Letter> resolve_word(const std::string& text, const AlphabetPtr& a, int line, int col) {
  std::vector<Letter> out;
  auto resolve_one = [&](const std::string& piece) {
    Alphabet::Entry e = parse_letter_name(piece);
    auto l = a->find(e.id, e.dotted);
    if (!l) throw parse_error("undeclared letter: " + piece, line, col);
    out.push_back(*l);
  };
  if (text.find('.') != std::string::npos) {
    std::string piece;
    std::stringstream ss(text);
    while (std::getline(ss, piece, '.')) {
      if (piece.empty()) throw parse_error("empty letter between dots", line, col);
      resolve_one(piece);
    }
    return out;
  }
  {
    Alphabet::Entry e = parse_letter_name(text);
    if (auto l = a->find(e.id, e.dotted)) {
      out.push_back(*l);
      return out;
    }
  }
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '\'') throw parse_error("stray apostrophe in word", line, col);
    std::string piece(1, text[i]);
    ++i;
    if (i < text.size() && text[i] == '\'') {
      piece += '\'';
      ++i;
    }
    resolve_one(piece);
  }
  return out;
}

class ExprParser {
 public:
  ExprParser(const std::string& text, AlphabetPtr alpha, int line)
      : lex_(text, line), alpha_(std::move(alpha)), line_(line) {}

  Polynomial parse_poly() {
    Polynomial p = parse_sum();
    if (lex_.peek().type != Token::Type::end) lex_.fail("trailing input");
    return p;
  }

  DiRelation parse_di() {
    DiRelation r = parse_di_sum();
    if (lex_.peek().type != Token::Type::end) lex_.fail("trailing input");
    return r;
  }

 private:
  Rational coefficient(const Token& t) {
    try {
      return rational_from_string(t.text);
    } catch (const error& e) {
      throw parse_error(e.what(), line_, t.col);
    }
  }

  Polynomial parse_sum() {
    Polynomial acc(alpha_);
    int sign = 1;
    if (lex_.peek().type == Token::Type::minus) {
      lex_.take();
      sign = -1;
    } else if (lex_.peek().type == Token::Type::plus) {
      lex_.take();
    }
    acc += Rational(sign) * parse_term();
    while (lex_.peek().type == Token::Type::plus || lex_.peek().type == Token::Type::minus) {
      sign = lex_.take().type == Token::Type::plus ? 1 : -1;
      acc += Rational(sign) * parse_term();
    }
    return acc;
  }

  bool starts_factor() const {
    auto t = lex_.peek().type;
    return t == Token::Type::lbracket || t == Token::Type::ident || t == Token::Type::lparen;
  }

  Polynomial parse_term() {
    Rational c(1);
    if (lex_.peek().type == Token::Type::num) {
      c = coefficient(lex_.take());
      if (lex_.peek().type == Token::Type::star) lex_.take();
      if (!starts_factor()) {
        if (c == 0) return Polynomial(alpha_);
        lex_.fail("constant terms are not elements of the free algebra");
      }
    }
    if (!starts_factor()) lex_.fail("term expected");
    Polynomial acc = parse_factor();
    while (true) {
      if (lex_.peek().type == Token::Type::star) {
        lex_.take();
        if (!starts_factor()) lex_.fail("factor expected after '*'");
        acc = acc * parse_factor();
      } else if (starts_factor()) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return c * acc;
  }

  Polynomial parse_factor() {
    Token t = lex_.peek();
    if (t.type == Token::Type::ident) {
      lex_.take();
      return Polynomial::monomial(Word(alpha_, resolve_word(t.text, alpha_, line_, t.col)));
    }
    if (t.type == Token::Type::lparen) {
      lex_.take();
      Polynomial inner = parse_sum();
      if (lex_.peek().type != Token::Type::rparen) lex_.fail("')' expected");
      lex_.take();
      return inner;
    }
    if (t.type == Token::Type::lbracket) {
      lex_.take();
      Polynomial left = parse_sum();
      Token sep = lex_.take();
      if (sep.type != Token::Type::comma)
        throw parse_error("',' expected inside bracket (di-products cannot mix with brackets)",
                          line_, sep.col);
      Polynomial right = parse_sum();
      if (lex_.peek().type != Token::Type::rbracket) lex_.fail("']' expected");
      lex_.take();
      return bracket(left, right);
    }
    lex_.fail("factor expected");
  }

  DiRelation parse_di_sum() {
    DiRelation r;
    int sign = 1;
    if (lex_.peek().type == Token::Type::minus) {
      lex_.take();
      sign = -1;
    } else if (lex_.peek().type == Token::Type::plus) {
      lex_.take();
    }
    r.terms.push_back(parse_di_term(sign));
    while (lex_.peek().type == Token::Type::plus || lex_.peek().type == Token::Type::minus) {
      sign = lex_.take().type == Token::Type::plus ? 1 : -1;
      r.terms.push_back(parse_di_term(sign));
    }
    return r;
  }

  std::pair<Rational, DiExpr> parse_di_term(int sign) {
    Rational c(sign);
    if (lex_.peek().type == Token::Type::num) {
      c *= coefficient(lex_.take());
      if (lex_.peek().type == Token::Type::star) lex_.take();
    }
    return {c, parse_di_factor()};
  }

  DiExpr parse_di_factor() {
    Token t = lex_.peek();
    if (t.type == Token::Type::ident) {
      lex_.take();
      if (t.text.find('.') != std::string::npos || t.text.find('\'') != std::string::npos)
        throw parse_error("di-expression generators are single undotted letters", line_, t.col);
      return DiExpr::leaf(t.text);
    }
    if (t.type == Token::Type::lbracket) {
      lex_.take();
      DiExpr left = parse_di_factor();
      Token sep = lex_.take();
      if (sep.type != Token::Type::dashv && sep.type != Token::Type::vdash)
        throw parse_error("-| or |- expected in a di-expression", line_, sep.col);
      DiExpr right = parse_di_factor();
      if (lex_.peek().type != Token::Type::rbracket) lex_.fail("']' expected");
      lex_.take();
      return DiExpr::node(sep.type == Token::Type::dashv ? DiOp::dashv : DiOp::vdash, left, right);
    }
    lex_.fail("di-expression expected");
  }

  Lexer lex_;
  AlphabetPtr alpha_;
  int line_;
};

bool has_di_ops(const std::string& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if ((s[i] == '-' && s[i + 1] == '|') || (s[i] == '|' && s[i + 1] == '-')) return true;
  return false;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

AlphabetPtr parse_alphabet_order(const std::string& order, int line) {
  std::vector<std::string> names;
  std::string piece;
  std::stringstream ss(order);
  while (std::getline(ss, piece, '>')) {
    std::string name = strip(piece);
    if (name.empty()) throw parse_error("empty letter in alphabet declaration", line, 1);
    names.push_back(name);
  }
  if (names.empty()) throw parse_error("empty alphabet declaration", line, 1);
  try {
    return Alphabet::from_names_desc(names);
  } catch (const error& e) {
    throw parse_error(e.what(), line, 1);
  }
}

Expression parse_expression(const std::string& text, const AlphabetPtr& alphabet, int line) {
  ExprParser p(text, alphabet, line);
  if (has_di_ops(text)) return Expression{std::nullopt, p.parse_di()};
  return Expression{p.parse_poly(), std::nullopt};
}

Polynomial parse_polynomial(const std::string& text, const AlphabetPtr& alphabet, int line) {
  return ExprParser(text, alphabet, line).parse_poly();
}

std::vector<std::string> PresentationFile::basis_names() const {
  std::vector<std::string> out;
  for (std::size_t i = alphabet->size(); i-- > 0;) {
    Letter l{static_cast<std::uint32_t>(i)};
    if (!alphabet->dotted(l)) out.push_back(alphabet->name(l));
  }
  return out;
}

PresentationFile parse_presentation(const std::string& text) {
  PresentationFile out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  std::vector<std::string> basis_desc;  // undotted letters, descending
  auto basis_index = [&](Letter l) -> std::size_t {
    std::size_t pos = 0;
    for (std::size_t i = out.alphabet->size(); i-- > 0;) {
      Letter cand{static_cast<std::uint32_t>(i)};
      if (out.alphabet->dotted(cand)) continue;
      if (cand == l) return pos;
      ++pos;
    }
    throw internal_error("not a basis letter");
  };
  // RHS of table/derivation entries and subalgebra members: a linear
  // combination of undotted basis letters
  auto linear_vector = [&](const std::string& expr, int line) {
    Polynomial p = parse_polynomial(expr, out.alphabet, line);
    VecR v = VecR::Zero(static_cast<Eigen::Index>(basis_desc.size()));
    for (const auto& [w, c] : p.terms()) {
      if (w.degree() != 1 || out.alphabet->dotted(w.at(0)))
        throw parse_error("expected a linear combination of basis letters", line, 1);
      v(static_cast<Eigen::Index>(basis_index(w.at(0)))) += c;
    }
    return v;
  };
  // "[x,y]" with two undotted basis letters
  auto parse_pair = [&](const std::string& lhs, int line) -> std::pair<std::size_t, std::size_t> {
    Lexer lex(lhs, line);
    if (lex.take().type != Token::Type::lbracket) throw parse_error("'[' expected", line, 1);
    Token a = lex.take();
    Token comma = lex.take();
    Token b = lex.take();
    Token close = lex.take();
    if (a.type != Token::Type::ident || comma.type != Token::Type::comma ||
        b.type != Token::Type::ident || close.type != Token::Type::rbracket ||
        lex.peek().type != Token::Type::end)
      throw parse_error("table left side must be [x,y]", line, 1);
    auto la = resolve_word(a.text, out.alphabet, line, a.col);
    auto lb = resolve_word(b.text, out.alphabet, line, b.col);
    if (la.size() != 1 || lb.size() != 1 || out.alphabet->dotted(la[0]) ||
        out.alphabet->dotted(lb[0]))
      throw parse_error("table left side must name two basis letters", line, 1);
    return {basis_index(la[0]), basis_index(lb[0])};
  };

  std::map<std::pair<std::size_t, std::size_t>, std::pair<VecR, int>> entries;  // value, line
  struct DerivLine {
    int line;
    std::string name;
    DerivationSpec::Kind kind;
    std::string arg, rhs;
  };
  std::vector<DerivLine> deriv_lines;
  std::map<std::string, DerivationSpec::Kind> deriv_names;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (strip(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw parse_error("expected 'key: value'", lineno, 1);
    std::string key = strip(line.substr(0, colon));
    std::string value = line.substr(colon + 1);

    if (key == "alphabet") {
      if (out.alphabet) throw parse_error("alphabet declared twice", lineno, 1);
      out.alphabet = parse_alphabet_order(value, lineno);
      for (std::size_t i = out.alphabet->size(); i-- > 0;) {
        Letter l{static_cast<std::uint32_t>(i)};
        if (!out.alphabet->dotted(l)) basis_desc.push_back(out.alphabet->name(l));
      }
      continue;
    }
    if (!out.alphabet) throw parse_error("alphabet must be declared first", lineno, 1);

    if (key == "kind") {
      std::string v = strip(value);
      if (v == "lie")
        out.kind = PresentationFile::Kind::lie;
      else if (v == "leibniz")
        out.kind = PresentationFile::Kind::leibniz;
      else
        throw parse_error("kind must be lie or leibniz", lineno, 1);
      continue;
    }
    if (key == "table") {
      if (out.kind == PresentationFile::Kind::none)
        throw parse_error("kind must be declared before table entries", lineno, 1);
      auto eq = value.find('=');
      if (eq == std::string::npos) throw parse_error("table entry needs '='", lineno, 1);
      auto pair = parse_pair(strip(value.substr(0, eq)), lineno);
      std::string rhs = strip(value.substr(eq + 1));
      VecR v = rhs == "0" ? VecR(VecR::Zero(static_cast<Eigen::Index>(basis_desc.size())))
                          : linear_vector(rhs, lineno);
      auto [it, fresh] = entries.emplace(pair, std::make_pair(v, lineno));
      if (!fresh)
        throw parse_error("duplicate table entry (first on line " +
                              std::to_string(it->second.second) + ")",
                          lineno, 1);
      continue;
    }
    if (key == "subalgebra") {
      if (!out.subalgebra) out.subalgebra = SubalgebraSpec{};
      std::string piece;
      std::stringstream ss(value);
      while (std::getline(ss, piece, ','))
        out.subalgebra->generators.push_back(linear_vector(piece, lineno));
      continue;
    }
    if (key.rfind("derivation", 0) == 0 || key.rfind("antiderivation", 0) == 0) {
      bool anti = key.rfind("antiderivation", 0) == 0;
      std::string name = strip(key.substr(anti ? 14 : 10));
      if (name.empty()) throw parse_error("derivation needs a name", lineno, 1);
      auto kind = anti ? DerivationSpec::Kind::anti_derivation : DerivationSpec::Kind::derivation;
      auto [it, fresh] = deriv_names.emplace(name, kind);
      if (!fresh && it->second != kind)
        throw parse_error("map " + name + " redeclared with a different kind", lineno, 1);
      std::string v = strip(value);
      if (v.rfind(name, 0) != 0) throw parse_error("entry must be " + name + "(...) = ...", lineno, 1);
      v = strip(v.substr(name.size()));
      if (v.empty() || v.front() != '(') throw parse_error("'(' expected", lineno, 1);
      auto close = v.find(')');
      if (close == std::string::npos) throw parse_error("')' expected", lineno, 1);
      std::string arg = v.substr(1, close - 1);
      std::string rest = strip(v.substr(close + 1));
      if (rest.empty() || rest.front() != '=') throw parse_error("'=' expected", lineno, 1);
      deriv_lines.push_back({lineno, name, kind, arg, strip(rest.substr(1))});
      continue;
    }
    if (key == "relation") {
      Expression e = parse_expression(strip(value), out.alphabet, lineno);
      if (e.di) {
        out.di_mode = true;
        out.di_relations.push_back(std::move(*e.di));
      } else {
        out.relations.push_back(std::move(*e.poly));
      }
      continue;
    }
    throw parse_error("unknown key: " + key, lineno, 1);
  }

  if (out.di_mode && !out.relations.empty())
    throw parse_error("di-product relations cannot mix with bracket relations", lineno, 1);

  // assemble the table
  if (out.kind != PresentationFile::Kind::none) {
    const std::size_t n = basis_desc.size();
    LeibnizTable t = LeibnizTable::zero(basis_desc);
    for (const auto& [pair, val] : entries) t.set_product(pair.first, pair.second, val.first);
    if (out.kind == PresentationFile::Kind::lie) {
      // fill omitted mirror entries antisymmetrically
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (entries.count({i, j}) && !entries.count({j, i}))
            t.set_product(j, i, VecR(-entries.at({i, j}).first));
    }
    out.table = t;
  }

  // assemble the derivations
  for (const auto& [name, kind] : deriv_names) {
    if (!out.subalgebra)
      throw parse_error("derivation " + name + " without a subalgebra declaration", 1, 1);
    DerivationSpec spec{kind, {}};
    const auto dim = static_cast<Eigen::Index>(basis_desc.size());
    spec.values.assign(out.subalgebra->generators.size(), VecR::Zero(dim));
    std::vector<int> seen(out.subalgebra->generators.size(), 0);
    for (const auto& dl : deriv_lines) {
      if (dl.name != name) continue;
      VecR arg = linear_vector(dl.arg, dl.line);
      VecR rhs = strip(dl.rhs) == "0" ? VecR(VecR::Zero(dim)) : linear_vector(dl.rhs, dl.line);
      bool found = false;
      for (std::size_t k = 0; k < out.subalgebra->generators.size(); ++k)
        if (out.subalgebra->generators[k] == arg) {
          if (seen[k]++)
            throw parse_error("duplicate entry for " + name + "(" + dl.arg + ")", dl.line, 1);
          spec.values[k] = rhs;
          found = true;
          break;
        }
      if (!found)
        throw parse_error(name + "(" + strip(dl.arg) + ") does not match a declared generator",
                          dl.line, 1);
    }
    if (kind == DerivationSpec::Kind::derivation)
      out.derivation = spec;
    else
      out.antiderivation = spec;
  }

  if (!out.alphabet) throw parse_error("file declares no alphabet", std::max(lineno, 1), 1);
  return out;
}

}  // namespace lieb
