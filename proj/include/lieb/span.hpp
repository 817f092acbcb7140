#ifndef LIEB_SPAN_HPP
#define LIEB_SPAN_HPP

#include <map>

#include "lieb/polynomial.hpp"

namespace lieb {

// Row space of polynomials, kept in echelon form keyed by leading word.
// Plain coefficient linear algebra; no Lie structure involved, which makes it
// a suitable independent oracle for the rewriting machinery.
class SpanBasis {
 public:
  explicit SpanBasis(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {}

  // Residue after eliminating pivot leading words.
  Polynomial residue(Polynomial p) const;

  // Adjoins p; returns true when the rank grew.
  bool insert(Polynomial p);

  bool contains(const Polynomial& p) const { return residue(p).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  const AlphabetPtr& alphabet() const { return alpha_; }

 private:
  AlphabetPtr alpha_;
  std::map<Word, Polynomial, DegLexGreater> rows_;  // pivot word -> monic row
};

}  // namespace lieb

#endif  // LIEB_SPAN_HPP
