#ifndef LIEB_TREE_HPP
#define LIEB_TREE_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lieb/word.hpp"

namespace lieb {

// Binary bracketing tree over letters: the carrier of non-associative words,
// Lie monomials and (when the conditions below hold) NLSWs.  Immutable;
// copies share structure.
class LieTree {
 public:
  static LieTree leaf(AlphabetPtr alphabet, Letter l);
  static LieTree node(const LieTree& left, const LieTree& right);

  bool is_leaf() const;
  Letter letter() const;  // leaves only
  LieTree left() const;   // inner nodes only
  LieTree right() const;

  const AlphabetPtr& alphabet() const { return alpha_; }
  std::size_t degree() const;
  Word underlying_word() const;

  // Stable identity of the root node, used to mark substitution slots.
  const void* id() const { return root_.get(); }

  // "[b,[b,a]]" for inner nodes, "b" for leaves.
  std::string str() const;

  friend bool operator==(const LieTree& a, const LieTree& b);

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    std::variant<Letter, std::pair<NodePtr, NodePtr>> v;
  };
  LieTree(AlphabetPtr a, NodePtr n) : alpha_(std::move(a)), root_(std::move(n)) {}
  AlphabetPtr alpha_;
  NodePtr root_;

  friend struct TreeAccess;
};

// Definition of non-associative Lyndon-Shirshov words: the underlying word is
// an ALSW, both subtrees are NLSWs, and when the left subtree is [[v1][v2]]
// the word of v2 is <= the word of the right subtree.
bool is_nlsw(const LieTree& t);

// The unique NLSW over an ALSW u: split u = vw at the longest proper suffix w
// that is itself an ALSW, recurse.  Throws domain_error on non-ALSW input.
LieTree standard_bracketing(const Word& u);

// Bracketing of w relative to an ALSW occurrence v = w[pos, pos+len).  The
// returned tree contains standard_bracketing(v) as the subtree identified by
// `slot`, and its free-algebra expansion has leading word w with coefficient
// one.  Construction: locate the minimal subtree of [w] that starts at pos
// and covers the occurrence, then rebracket it left-normed over the ALSW
// factorization of the tail.
struct RelativeBracketing {
  LieTree tree;
  const void* slot;
};
RelativeBracketing special_bracketing(const Word& w, std::size_t pos, std::size_t len);

}  // namespace lieb

#endif  // LIEB_TREE_HPP
