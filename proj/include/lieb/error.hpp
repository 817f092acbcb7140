#ifndef LIEB_ERROR_HPP
#define LIEB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lieb {

// Base class of every exception thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two operands live over different alphabets.
struct alphabet_mismatch : error {
  alphabet_mismatch() : error("operands belong to different alphabets") {}
  using error::error;
};

// A value violates an operation's precondition (non-ALSW word where one is
// required, zero polynomial passed to leading(), out-of-range occurrence, ...).
struct domain_error : error {
  using error::error;
};

// A composition was requested for words that do not overlap/include as required.
struct shape_error : domain_error {
  using domain_error::domain_error;
};

// The greedy Lyndon-basis rewriting hit a leading word that is not an ALSW,
// certifying that the input is not in the Lie subspace.
struct not_a_lie_element : domain_error {
  using domain_error::domain_error;
};

// A di-expression monomial has no unique sink of dashes.
struct malformed_relation : domain_error {
  using domain_error::domain_error;
};

// The linear map fails the averaging-operator law.
struct not_averaging : domain_error {
  using domain_error::domain_error;
};

struct dimension_mismatch : domain_error {
  using domain_error::domain_error;
};

// An invariant that should hold for every valid input failed; indicates a bug
// or corrupted input data rather than a user error.
struct internal_error : error {
  using error::error;
};

// Syntax / name errors from the presentation-file and expression parsers,
// annotated with a 1-based position.
struct parse_error : error {
  parse_error(const std::string& what, int line, int column)
      : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace lieb

#endif  // LIEB_ERROR_HPP
