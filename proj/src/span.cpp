#include "lieb/span.hpp"

namespace lieb {

Polynomial SpanBasis::residue(Polynomial p) const {
  require_same_alphabet(alpha_, p.alphabet());
  while (!p.is_zero()) {
    auto [w, c] = p.leading();
    auto it = rows_.find(w);
    if (it == rows_.end()) break;
    p -= c * it->second;
  }
  return p;
}

bool SpanBasis::insert(Polynomial p) {
  p = residue(std::move(p));
  if (p.is_zero()) return false;
  Word w = p.leading().first;
  rows_.emplace(w, p.monic());
  return true;
}

}  // namespace lieb
