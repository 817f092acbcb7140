#ifndef LIEB_REPLICATION_HPP
#define LIEB_REPLICATION_HPP

#include <memory>
#include <string>
#include <vector>

#include "lieb/polynomial.hpp"
#include "lieb/tables.hpp"

namespace lieb {

// X -> X u X' with x > y => x' > y' and every dotted letter above every
// undotted one.  The base letters keep their ranks; dotted copies sit in a
// block above them.
AlphabetPtr doubled_alphabet(const AlphabetPtr& base);

// Letterwise un-dotting, extended linearly and multiplicatively.  The image
// lies in the span of undotted words; the carrier alphabet is unchanged.
// Requires every dotted letter to have an undotted partner.
Polynomial phi(const Polynomial& f);
Word phi(const Word& w);

// The two replicated products.  dashv: f -| g, vdash: f |- g.
enum class DiOp { dashv, vdash };

// Bracket form used inside Lie^(2): f -| g = [f, phi(g)], f |- g = [phi(f), g].
Polynomial di_bracket(DiOp op, const Polynomial& f, const Polynomial& g);
// Concatenation form f.phi(g) / phi(f).g, exposed for the averaging checks.
Polynomial di_concat(DiOp op, const Polynomial& f, const Polynomial& g);

// Expression tree over undotted generators with -| / |- labelled nodes.
class DiExpr {
 public:
  static DiExpr leaf(std::string id);
  static DiExpr node(DiOp op, const DiExpr& left, const DiExpr& right);
  bool is_leaf() const;
  const std::string& id() const;
  DiOp op() const;
  DiExpr left() const;
  DiExpr right() const;
  std::string str() const;  // "[x -| [y |- z]]"

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct DiRelation {
  std::vector<std::pair<Rational, DiExpr>> terms;
};

// Kolesnikov translation: a monomial whose dashes all point to one leaf maps
// to the bracket monomial of the same shape over X u X' with exactly that
// leaf dotted.  Monomials without a unique sink of dashes (an off-path factor
// with an inner node) are rejected with malformed_relation.
Polynomial translate_monomial(const DiExpr& m, const AlphabetPtr& doubled);
Polynomial translate_relation(const DiRelation& r, const AlphabetPtr& doubled);

// S u phi(S) with vanishing images dropped: the rewrite-system seed of
// the replicated ideal.
std::vector<Polynomial> replicate_system(const std::vector<Polynomial>& translated);

// True iff every monomial of f contains at least one dotted letter.
bool v_membership(const Polynomial& f);

// Left-normed words [..[[x'_{i1} x_{i2}] x_{i3}].. x_{in}], n <= max_degree,
// indices ranging freely over the base alphabet; |X|^n words in degree n.
std::vector<LieTree> dilie_basis(const AlphabetPtr& base, int max_degree);

// Averaging operator law in the binary instance: [ta,tb] = t[ta,b] = t[a,tb]
// on all basis pairs of a Lie table.
bool is_averaging(const MatR& t_map, const LeibnizTable& table, std::string* witness = nullptr);

// A^(t): a -| b = [a, t b], a |- b = [t a, b].  Throws not_averaging unless
// is_averaging holds.
DiLieTable averaged_dialgebra(const LeibnizTable& table, const MatR& t_map);

}  // namespace lieb

#endif  // LIEB_REPLICATION_HPP
