#include "lieb/polynomial.hpp"

namespace lieb {

Polynomial Polynomial::monomial(const Word& w, const Rational& c) {
  Polynomial p(w.alphabet());
  p.add_term(w, c);
  return p;
}

Polynomial Polynomial::letter(const AlphabetPtr& a, Letter l, const Rational& c) {
  return monomial(Word(a, {l}), c);
}

Rational Polynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const { return static_cast<int>(leading().first.degree()); }

void Polynomial::add_term(const Word& w, const Rational& c) {
  require_same_alphabet(alpha_, w.alphabet());
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_alphabet(alpha_, o.alpha_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_alphabet(alpha_, o.alpha_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_alphabet(a.alpha_, b.alpha_);
  Polynomial out(a.alpha_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add_term(u.concat(v), cu * cv);
  return out;
}

std::pair<Word, Rational> Polynomial::leading() const {
  if (terms_.empty()) throw domain_error("leading term of the zero polynomial");
  return *terms_.begin();
}

Polynomial Polynomial::monic() const {
  auto [w, c] = leading();
  Polynomial out = *this;
  out *= Rational(1) / c;
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += to_string(a) + "*";
    out += w.str_dotted();
  }
  return out;
}

Polynomial bracket(const Polynomial& f, const Polynomial& g) { return f * g - g * f; }

Polynomial expand(const LieTree& t) {
  if (t.is_leaf()) return Polynomial::letter(t.alphabet(), t.letter());
  return bracket(expand(t.left()), expand(t.right()));
}

Polynomial expand_with_slot(const LieTree& t, const void* slot, const Polynomial& repl) {
  if (t.id() == slot) return repl;
  if (t.is_leaf()) return Polynomial::letter(t.alphabet(), t.letter());
  return bracket(expand_with_slot(t.left(), slot, repl),
                 expand_with_slot(t.right(), slot, repl));
}

std::vector<std::pair<Rational, LieTree>> to_lyndon_basis(const Polynomial& f) {
  std::vector<std::pair<Rational, LieTree>> out;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    auto [w, c] = rest.leading();
    if (!is_alsw(w))
      throw not_a_lie_element("not a Lie element: leading word " + w.str() + " is not an ALSW");
    LieTree t = standard_bracketing(w);
    out.emplace_back(c, t);
    rest -= c * expand(t);
  }
  return out;
}

bool is_lie_element(const Polynomial& f) {
  try {
    to_lyndon_basis(f);
    return true;
  } catch (const not_a_lie_element&) {
    return false;
  }
}

}  // namespace lieb
