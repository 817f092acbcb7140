#ifndef LIEB_ALPHABET_HPP
#define LIEB_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieb/error.hpp"

namespace lieb {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// A letter is an index into its alphabet; a larger rank is a larger letter.
struct Letter {
  std::uint32_t rank = 0;
  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

// Immutable, totally ordered alphabet.  Letters are (id, dotted) pairs; the
// id prints as-is and a dotted letter prints with a trailing apostrophe.
class Alphabet {
 public:
  struct Entry {
    std::string id;
    bool dotted = false;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Entries are given in ascending order (smallest letter first).
  static AlphabetPtr make(std::vector<Entry> ascending);

  // Convenience: names in descending order, apostrophe suffix marks a dotted
  // letter, e.g. {"t'", "x'", "t", "x"}.
  static AlphabetPtr from_names_desc(const std::vector<std::string>& names_desc);

  std::size_t size() const { return entries_.size(); }
  const Entry& entry(Letter l) const { return entries_.at(l.rank); }
  bool dotted(Letter l) const { return entry(l).dotted; }

  std::optional<Letter> find(const std::string& id, bool dotted) const;
  Letter letter(const std::string& id, bool dotted = false) const;

  // x <-> x' partners, matched by id.
  std::optional<Letter> dotted_partner(Letter l) const;
  std::optional<Letter> undotted_partner(Letter l) const;

  // Printed name: id plus apostrophe when dotted.
  std::string name(Letter l) const;
  bool single_char_ids() const { return single_char_; }

  // "t' > x1' > x2' > t > x1 > x2" — the effective total order.
  std::string order_string() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.entries_ == b.entries_;
  }

 private:
  explicit Alphabet(std::vector<Entry> ascending);
  std::vector<Entry> entries_;
  std::map<std::pair<std::string, bool>, Letter> index_;
  bool single_char_ = true;
};

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw alphabet_mismatch();
}

// Parses a letter name: trailing apostrophes toggle the dotted flag ("x'" is
// the dotted copy of "x").  Only a single apostrophe is allowed.
Alphabet::Entry parse_letter_name(const std::string& name);

}  // namespace lieb

#endif  // LIEB_ALPHABET_HPP
