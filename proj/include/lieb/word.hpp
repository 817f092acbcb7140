#ifndef LIEB_WORD_HPP
#define LIEB_WORD_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieb/alphabet.hpp"

namespace lieb {

// Nonempty associative word over an alphabet.
class Word {
 public:
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  const AlphabetPtr& alphabet() const { return alpha_; }
  std::size_t degree() const { return letters_.size(); }
  Letter at(std::size_t i) const { return letters_.at(i); }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word concat(const Word& other) const;

  // id concatenation, '.'-separated when the alphabet has multi-char ids.
  std::string str() const;
  // id concatenation, always '.'-separated (polynomial text form).
  std::string str_dotted() const;

  friend bool operator==(const Word& a, const Word& b) {
    return same_alphabet(a.alpha_, b.alpha_) && a.letters_ == b.letters_;
  }

 private:
  AlphabetPtr alpha_;
  std::vector<Letter> letters_;
};

// Deg-lex: degree first, then left-to-right letter rank.  A monomial order.
std::strong_ordering compare_deglex(const Word& u, const Word& v);
inline bool deglex_less(const Word& u, const Word& v) { return compare_deglex(u, v) < 0; }

// Comparator for containers; no alphabet check (container owns one alphabet).
struct DegLexGreater {
  bool operator()(const Word& a, const Word& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    auto la = a.letters(), lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i)
      if (la[i] != lb[i]) return lb[i] < la[i];
    return false;
  }
};

// True iff w is strictly greater than every proper cyclic shift of itself.
// Single letters qualify; periodic words do not.
bool is_alsw(const Word& w);

// All ALSWs of degree <= max_degree, sorted by deg-lex.  Uses the
// Fredricksen-Kessler-Maiorana generator run over the reversed letter order.
std::vector<Word> enumerate_alsw(const AlphabetPtr& alphabet, int max_degree);

// Leftmost occurrence of s in w at position >= from.
std::optional<std::size_t> find_subword(const Word& w, const Word& s, std::size_t from = 0);

// Chen-Fox-Lyndon factorization mirrored to the ALSW convention: w is the
// concatenation of the returned factors, each an ALSW, with weakly increasing
// infinite-power keys left to right.
std::vector<Word> alsw_factorization(const Word& w);

}  // namespace lieb

#endif  // LIEB_WORD_HPP
