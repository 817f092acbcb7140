#ifndef LIEB_POLYNOMIAL_HPP
#define LIEB_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieb/rational.hpp"
#include "lieb/tree.hpp"
#include "lieb/word.hpp"

namespace lieb {

// Element of the free associative algebra over an alphabet, with exact
// rational coefficients.  Terms iterate in descending deg-lex order, so
// begin() is the leading term.  Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Word, Rational, DegLexGreater>;

  explicit Polynomial(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {}
  static Polynomial monomial(const Word& w, const Rational& c = 1);
  static Polynomial letter(const AlphabetPtr& a, Letter l, const Rational& c = 1);

  const AlphabetPtr& alphabet() const { return alpha_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Word& w) const;
  int degree() const;  // of the leading word; zero polynomial throws

  void add_term(const Word& w, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  // Concatenation product, extended bilinearly.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_alphabet(a.alpha_, b.alpha_) && a.terms_ == b.terms_;
  }

  // Deg-lex maximal word of the support with its coefficient.
  std::pair<Word, Rational> leading() const;
  Polynomial monic() const;

  // "3/2*b.a - a.b"; "0" when zero.
  std::string str() const;

 private:
  AlphabetPtr alpha_;
  TermMap terms_;
};

// fg - gf.
Polynomial bracket(const Polynomial& f, const Polynomial& g);

// Recursive bracket expansion of a bracketing tree.  For an NLSW tree the
// leading word is the underlying word with coefficient one.
Polynomial expand(const LieTree& t);

// Expansion in which the subtree identified by `slot` expands to `repl`
// instead of its own letters; expansion is linear in the slot.
Polynomial expand_with_slot(const LieTree& t, const void* slot, const Polynomial& repl);

// Greedy rewriting into the Lyndon basis: repeatedly peel coeff *
// [standard_bracketing(leading word)].  Throws not_a_lie_element when some
// remainder has a non-ALSW leading word; succeeds exactly on Lie elements.
std::vector<std::pair<Rational, LieTree>> to_lyndon_basis(const Polynomial& f);

bool is_lie_element(const Polynomial& f);

}  // namespace lieb

#endif  // LIEB_POLYNOMIAL_HPP
