#ifndef LIEB_HNN_HPP
#define LIEB_HNN_HPP

#include <map>
#include <string>
#include <vector>

#include "lieb/rewrite.hpp"
#include "lieb/tables.hpp"

namespace lieb {

// Column echelon over exact vectors, pivots at the smallest index (the
// greatest letter).
class VecSpan {
 public:
  explicit VecSpan(Eigen::Index dim) : dim_(dim) {}
  VecR residue(VecR v) const;
  bool insert(VecR v);
  bool contains(const VecR& v) const { return residue(v).isZero(); }
  std::size_t rank() const { return rows_.size(); }
  Eigen::Index dim() const { return dim_; }

 private:
  Eigen::Index dim_;
  std::map<Eigen::Index, VecR> rows_;  // pivot index -> vector with pivot 1
};

// span{ [x,y] + [y,x] } over all basis pairs: H0, the symmetrized-product
// space whose quotient turns the Leibniz algebra into a Lie algebra.
std::vector<VecR> h0_span(const LeibnizTable& t);

struct H0Adaptation {
  std::vector<std::string> names;        // adapted basis names, descending letter order
  MatR basis_change;                     // columns: adapted basis vectors in user coordinates
  std::vector<std::size_t> x0_positions; // positions (into names) spanning the kill space
  LeibnizTable table;                    // structure constants in the adapted basis
  SubalgebraSpec subalgebra;             // echelonized basis of span(A), adapted coordinates
  DerivationSpec d, dprime;              // values per echelonized subalgebra basis vector
};

// Invertible change of basis after which a suffix block of letters spans H0,
// preferring the user's own basis vectors; verifies the reduction facts
// mu(X, X0) = 0 and mu(X0, X) c span(X0).
H0Adaptation h0_and_adapt(const LeibnizTable& t, const SubalgebraSpec& a,
                          const DerivationSpec& d, const DerivationSpec& dp);

struct HnnPresentation {
  AlphabetPtr alphabet;  // X u X' u {t, t'} with t' > X' > t > X
  H0Adaptation adapted;
  std::vector<Rule> emitted;      // families (1)-(5), their phi images, X0 letters
  RewriteSystem rules;            // the inter-reduced working system
  std::vector<Letter> x0_letters; // undotted kill letters
  std::vector<std::string> warnings;

  HnnPresentation(AlphabetPtr a, H0Adaptation ad, std::vector<Rule> em, RewriteSystem r)
      : alphabet(std::move(a)), adapted(std::move(ad)), emitted(std::move(em)), rules(std::move(r)) {}
};

// The alphabet X u X' u {t, t'} over adapted base names (descending).  "t" is
// reserved and may not appear among the base names.
AlphabetPtr hnn_alphabet(const std::vector<std::string>& base_names_desc);

// Emits the relation families over the adapted letters,
//   f1/f2: [x' y] - mu'(x,y) for all pairs x != y,   f3: [x' x] - mu'(x,x),
//   g: [a' t] - d(a)',   h: [t' a] - d'(a)'   (a over the subalgebra basis),
// their phi images, and the X0 letter rules, then inter-reduces.  When the
// degree-one consequences leave the current kill space the basis adaptation
// is enlarged and the build repeats, so X0 stays letter-spanned.
HnnPresentation build_presentation(const LeibnizTable& t, const SubalgebraSpec& a,
                                   const DerivationSpec& d, const DerivationSpec& dp,
                                   bool validate = true);

struct HnnVerification {
  bool ok = true;
  std::size_t composition_count = 0;
  // paper case label ("i".."v", or family^family[:incl]) -> indices into reports
  std::map<std::string, std::vector<std::size_t>> cases;
  std::vector<CompositionReport> reports;
};

// Runs every composition of the presentation's rules and classifies them into
// the five printed intersection cases plus the remaining pairs.
HnnVerification verify_gsb(const HnnPresentation& p, bool with_traces = false);

// Words over the full alphabet that contain a forbidden subword: X0 letters,
// xy for x > y outside X0, the subalgebra words a't / ta / t'a, and x'y, x'x.
// Derived from the presentation data, not from the rule set.
std::vector<Word> forbidden_subwords(const HnnPresentation& p);

// Irr(rules) up to max_degree, cross-checked against the forbidden-subword
// characterization; a mismatch raises internal_error.
std::vector<LieTree> normal_basis(const HnnPresentation& p, int max_degree);

// (a) every dotted base letter is in normal form, and (b) multiplicativity:
// [x_i' x_j] - mu'(x_i, x_j) reduces to zero for every basis pair.
bool check_embedding(const HnnPresentation& p, std::string* why = nullptr);

}  // namespace lieb

#endif  // LIEB_HNN_HPP
