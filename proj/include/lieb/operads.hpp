#ifndef LIEB_OPERADS_HPP
#define LIEB_OPERADS_HPP

#include <array>
#include <string>
#include <vector>

#include "lieb/polynomial.hpp"
#include "lieb/tables.hpp"

namespace lieb {

// e_i^(n) = (x_1 ... x_{i-1} x_{i+1} ... x_n) x_i, the standard basis of the
// Perm operad's arity-n component.  Indices are 1-based.
struct PermBasisElement {
  int arity = 1;
  int index = 1;
  friend bool operator==(const PermBasisElement&, const PermBasisElement&) = default;
};

inline PermBasisElement perm_element(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw domain_error("perm basis index out of range");
  return {n, i};
}

// Operadic composition: arity is the sum of argument arities and the index
// follows the slot of the distinguished variable, m_1+...+m_{i-1}+j_i.  (The
// published formula prints m_{n-1} in place of m_{i-1}; see
// perm_index_formula_discrepancy.)
PermBasisElement perm_compose(const PermBasisElement& e, const std::vector<PermBasisElement>& args);

// Independent oracle: expand e_i^(n) as the flat word (x_1..x_{i-1}
// x_{i+1}..x_n) x_i, substitute the argument words over shifted variables,
// and read off the class (the last variable) of the result.
PermBasisElement perm_compose_oracle(const PermBasisElement& e,
                                     const std::vector<PermBasisElement>& args);

// The index as printed in the source formula, m_1+...+m_{n-1}+j_i.
int perm_paper_index(const PermBasisElement& e, const std::vector<PermBasisElement>& args);

// True when the printed formula disagrees with the expansion oracle for some
// composition of total arity <= max_arity.
bool perm_index_formula_discrepancy(int max_arity, std::string* example = nullptr);

// Permutation of {1..n}: perm[i-1] is the image of i.  Right action on basis
// indices: e_i . sigma = e_{sigma(i)}, so acting by sigma then tau equals
// acting by their left-to-right composite.
using Permutation = std::vector<int>;
PermBasisElement perm_act(const Permutation& sigma, const PermBasisElement& e);
Permutation perm_compose_maps(const Permutation& sigma, const Permutation& tau);  // sigma then tau

// Coset representatives used by the degree-3 Lie operad table.
enum class CosetRep { id, s13, s23 };
enum class BinaryOp { mu, mu12 };  // mu12 swaps the two arguments

struct OperadMonomial {
  CosetRep sigma = CosetRep::id;
  BinaryOp outer = BinaryOp::mu;  // applied to (inner result, x3)
  BinaryOp inner = BinaryOp::mu;  // applied to (x1, x2)
};

// The multilinear monomial of sigma (x) (outer (x) inner): relabel the
// variables of outer(inner(x1,x2),x3) by sigma.  Reproduces the twelve-row
// table of the degree-3 Lie operad component.
LieTree monomial_of(const OperadMonomial& m);

// Alphabet {x1 < x2 < x3} carrying the multilinear monomials.
AlphabetPtr operad_variables(int n);

// Maps 1 (x) (mu (x) mu) + (13) (x) (mu (x) mu12) + (23) (x) (mu (x) mu12)
// through monomial_of, confirms the result is the Jacobi combination
// [[x1,x2],x3]+[[x2,x3],x1]+[[x3,x1],x2], and expands it to zero.
bool jacobiator_check();

enum class OperadKind { lie, perm, dilie };

// Dimension of the arity-n multilinear component, computed by rank over the
// span of all multilinear monomials modulo the variety's identities:
// bracket-expansion rank for Lie, associativity+left-commutativity normal
// forms for Perm, and the one-dotted replication embedding for di-Lie.
int operad_dimension(OperadKind kind, int n);

// A (x) P_n for the n-dimensional Perm algebra e_i e_j = e_j, with the two
// binary operations of (1): (a (x) e_i) -| (b (x) e_j) = [a,b] (x) e_i and
// (a (x) e_i) |- (b (x) e_j) = [a,b] (x) e_j.
DiLieTable hadamard_algebra(const LeibnizTable& lie_table, int n);

struct LeibnizProductDerivation {
  std::string lhs;
  std::vector<std::string> steps;
  std::string rhs;
  bool matches_expected = false;
};

// Symbolic replay of the computation [x,y] (x) e_marker = x -| y - y |- x
// (marker 1; marker 2 gives the left Leibniz direction).  With abelian set,
// the bracket vanishes and the identity degenerates to 0 = 0.
LeibnizProductDerivation derive_leibniz_product(int marker = 1, bool abelian = false);

}  // namespace lieb

#endif  // LIEB_OPERADS_HPP
