#ifndef LIEB_TABLES_HPP
#define LIEB_TABLES_HPP

#include <string>
#include <vector>

#include "lieb/linalg.hpp"

namespace lieb {

// Structure constants of a finite-dimensional algebra with one bilinear
// product [x_i -| x_j] = sum_k c[i][j][k] x_k.  Basis names are listed in
// descending letter order, matching the alphabet declaration style.
class LeibnizTable {
 public:
  LeibnizTable(std::vector<std::string> names, std::vector<std::vector<VecR>> c);
  static LeibnizTable zero(std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const VecR& product(std::size_t i, std::size_t j) const { return c_.at(i).at(j); }
  VecR product(const VecR& a, const VecR& b) const;  // bilinear extension

  void set_product(std::size_t i, std::size_t j, VecR v);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<VecR>> c_;
};

inline VecR unit_vector(const LeibnizTable& t, std::size_t i) {
  VecR v = VecR::Zero(static_cast<Eigen::Index>(t.dim()));
  v(static_cast<Eigen::Index>(i)) = 1;
  return v;
}

// Right Leibniz identity [[x,y],z] = [[x,z],y] + [x,[y,z]] on all basis
// triples.  On failure, *witness names the first failing triple.
bool check_leibniz(const LeibnizTable& t, std::string* witness = nullptr);

bool check_antisymmetric(const LeibnizTable& t, std::string* witness = nullptr);

// Lie = antisymmetric + Leibniz (equivalently antisymmetric + Jacobi).
bool check_lie(const LeibnizTable& t, std::string* witness = nullptr);

// Independent cross-check used by tests: Jacobi identity verified directly.
bool check_jacobi(const LeibnizTable& t, std::string* witness = nullptr);

struct SubalgebraSpec {
  std::vector<VecR> generators;
};

// Generators independent and closed under the product.
bool check_subalgebra(const LeibnizTable& t, const SubalgebraSpec& a, std::string* witness = nullptr);

// Coordinates of v in the generator basis of a; nullopt when v is outside.
std::optional<VecR> subalgebra_coordinates(const SubalgebraSpec& a, const VecR& v, Eigen::Index dim);

struct DerivationSpec {
  enum class Kind { derivation, anti_derivation };
  Kind kind = Kind::derivation;
  std::vector<VecR> values;  // aligned with the subalgebra generators; values live in L
};

// d([x -| y]) = [d(x) -| y] + [x -| d(y)]  (derivation), or
// d'([x -| y]) = [d'(x) -| y] - [d'(y) -| x] (anti-derivation),
// verified on all generator pairs of a.
bool check_derivation(const LeibnizTable& t, const SubalgebraSpec& a, const DerivationSpec& d,
                      std::string* witness = nullptr);

// Applies the (anti-)derivation to an element of span(a).
VecR apply_map(const LeibnizTable& t, const SubalgebraSpec& a, const DerivationSpec& d,
               const VecR& v);

// Structure constants of an algebra with the two replicated products.
struct DiLieTable {
  std::vector<std::string> names;
  std::vector<std::vector<VecR>> dashv;  // x -| y
  std::vector<std::vector<VecR>> vdash;  // x |- y
  std::size_t dim() const { return names.size(); }
};

// Identities (3) and (4): [x |- y] + [y -| x] = 0 on all pairs, and the right
// Leibniz identity for -| on all triples.
bool check_dilie_identities(const DiLieTable& t, std::string* witness = nullptr);

}  // namespace lieb

#endif  // LIEB_TABLES_HPP
