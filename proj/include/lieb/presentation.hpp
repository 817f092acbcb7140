#ifndef LIEB_PRESENTATION_HPP
#define LIEB_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieb/polynomial.hpp"
#include "lieb/replication.hpp"
#include "lieb/tables.hpp"

namespace lieb {

// Parsed presentation file.  Line-oriented, '#' comments:
//   alphabet: x1 > x2 > x3
//   kind: leibniz
//   table: [x1,x1] = x2
//   subalgebra: x2, x1 + 2*x2
//   derivation d: d(x2) = x2
//   antiderivation d': d'(x2) = 0
//   relation: [x1,[x1,x2]] - 1/2*[x2,x2]
// Relations may use di-products [x -| y] / [x |- y]; a file whose relations
// do so is in di-mode and every relation must then be a di-expression.
struct PresentationFile {
  enum class Kind { none, lie, leibniz };
  AlphabetPtr alphabet;
  Kind kind = Kind::none;
  std::optional<LeibnizTable> table;
  std::optional<SubalgebraSpec> subalgebra;
  std::optional<DerivationSpec> derivation;
  std::optional<DerivationSpec> antiderivation;
  std::vector<Polynomial> relations;    // plain mode
  std::vector<DiRelation> di_relations; // di-mode
  bool di_mode = false;

  // basis = the undotted letters in descending order
  std::vector<std::string> basis_names() const;
};

PresentationFile parse_presentation(const std::string& text);

// A bracket/word expression or a di-expression combination.
struct Expression {
  std::optional<Polynomial> poly;
  std::optional<DiRelation> di;
};

// Bracket expressions nest arbitrarily; ' marks dotted letters; words are
// '.'-joined ids (or juxtaposed single-char ids); coefficients are exact
// rationals.  Expressions containing -| or |- parse as di-expressions.
Expression parse_expression(const std::string& text, const AlphabetPtr& alphabet, int line = 1);

Polynomial parse_polynomial(const std::string& text, const AlphabetPtr& alphabet, int line = 1);

// Renders the declared alphabet as "x1 > x2 > ..." and parses it back.
AlphabetPtr parse_alphabet_order(const std::string& order, int line = 1);

}  // namespace lieb

#endif  // LIEB_PRESENTATION_HPP
