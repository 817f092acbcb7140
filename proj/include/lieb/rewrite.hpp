#ifndef LIEB_REWRITE_HPP
#define LIEB_REWRITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieb/polynomial.hpp"

namespace lieb {

// One monic Lie polynomial together with its cached leading word and a family
// tag used by the HNN reports ("f1", "phi_h", "x0", "user", "derived", ...).
struct Rule {
  Polynomial poly;
  Word lead;
  std::string family;
};

// Immutable set of monic Lie rewrite rules, kept sorted by ascending deg-lex
// leading word (ties by insertion order).
class RewriteSystem {
 public:
  explicit RewriteSystem(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {}

  // Rules must already be monic with ALSW leading words (cheaply re-checked);
  // reductions and compositions of valid rules stay valid, so internal loops
  // use this constructor.
  RewriteSystem(AlphabetPtr alphabet, std::vector<Rule> rules);

  // Full validation path: monicizes and certifies each polynomial as a Lie
  // element via the Lyndon-basis rewriting.
  static RewriteSystem from_polynomials(const AlphabetPtr& alphabet,
                                        std::vector<Polynomial> polys,
                                        std::vector<std::string> families = {});

  const AlphabetPtr& alphabet() const { return alpha_; }
  std::size_t size() const { return rules_.size(); }
  const Rule& rule(std::size_t i) const { return rules_.at(i); }
  const std::vector<Rule>& rules() const { return rules_; }

  // First rule (in system order) whose leading word occurs in w, with the
  // leftmost occurrence position.
  std::optional<std::pair<std::size_t, std::size_t>> find_reduction(const Word& w) const;

 private:
  AlphabetPtr alpha_;
  std::vector<Rule> rules_;
};

struct ReductionStep {
  std::size_t rule;
  Word within;       // the word that was eliminated
  std::size_t pos;   // occurrence of the rule's leading word
  Rational coeff;    // multiple of the bracketed rule that was subtracted
};

// Normal form of f modulo S: repeatedly eliminate the leading word, either by
// subtracting coeff * [a s b] (special bracketing, rule substituted at the
// slot) when it contains a rule's leading word, or by peeling the irreducible
// Lyndon-basis component otherwise.  The leading word strictly decreases, so
// this terminates; the result is zero iff f is in Id(S) once S is a GSB.
Polynomial reduce(const Polynomial& f, const RewriteSystem& s,
                  std::vector<ReductionStep>* trace = nullptr);

bool member(const Polynomial& f, const RewriteSystem& s);

struct CompositionReport {
  enum class Kind { intersection, inclusion } kind;
  std::size_t f = 0;
  std::size_t g = 0;
  Word w;
  Polynomial value;
  Polynomial residue;
  std::vector<ReductionStep> trace;  // reduction of value, when requested
};

// (f,g)_w = [f a]_{f-lead} - [b g]_{g-lead} for w = f-lead a = b g-lead with a
// genuine overlap.  Both summands are built with leading word w and
// coefficient one, so w cancels.  Throws shape_error when w is not of the
// required shape or not an ALSW.
CompositionReport intersection_composition(const RewriteSystem& s, std::size_t f, std::size_t g,
                                           const Word& w, bool with_trace = false);

// (f,g)_w = f - [a g b]_{g-lead} for the occurrence of g's leading word at
// `pos` inside f's leading word.
CompositionReport inclusion_composition(const RewriteSystem& s, std::size_t f, std::size_t g,
                                        std::size_t pos, bool with_trace = false);

struct CompositionScan {
  std::vector<CompositionReport> reports;
  bool candidates_above_cap = false;  // some overlap word exceeded max_degree
  std::size_t skipped_non_alsw = 0;   // overlap words that failed is_alsw (none expected)
};

// Every intersection overlap and every strict inclusion among ordered rule
// pairs, in deterministic order; self-inclusions are excluded.  max_degree 0
// means no cap.  Residues evaluate in parallel under LEIBNIZ_GSB_THREADS.
CompositionScan all_compositions(const RewriteSystem& s, int max_degree = 0,
                                 bool with_traces = false);

struct GsbCheck {
  bool ok = true;
  std::size_t composition_count = 0;
  std::vector<CompositionReport> failures;
};
GsbCheck is_gsb(const RewriteSystem& s, int max_degree = 0);

// Reduces every rule modulo the others until stable; drops rules that reduce
// to zero and re-monicizes the rest.  Ties break by deg-lex of leading words,
// then insertion order.
RewriteSystem inter_reduce(const RewriteSystem& s);

struct CompletionResult {
  RewriteSystem system;
  bool gsb_at_cap = false;
  bool candidates_above_cap = false;
  std::size_t rounds = 0;
};

// Knuth-Bendix-style loop: adjoin monic residues of nontrivial compositions
// of degree <= max_degree, inter-reduce, repeat.  The degree cap guarantees
// termination.  Afterwards every original rule reduces to zero modulo the
// result (checked).
CompletionResult complete(const RewriteSystem& s, int max_degree);

// All NLSWs of degree <= max_degree whose underlying word avoids every rule
// leading word, as standard bracketings in deg-lex order.
std::vector<LieTree> irr_basis(const RewriteSystem& s, int max_degree);

}  // namespace lieb

#endif  // LIEB_REWRITE_HPP
