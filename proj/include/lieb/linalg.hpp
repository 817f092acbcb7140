#ifndef LIEB_LINALG_HPP
#define LIEB_LINALG_HPP

#include <Eigen/Core>
#include <Eigen/LU>
#include <optional>

#include "lieb/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<lieb::Rational> : GenericNumTraits<lieb::Rational> {
  typedef lieb::Rational Real;
  typedef lieb::Rational NonInteger;
  typedef lieb::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace lieb {

using MatR = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Eigen::Index rank_of(const MatR& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return Eigen::FullPivLU<MatR>(m).rank();
}

// Exact solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<VecR> solve_exact(const MatR& a, const VecR& b) {
  Eigen::FullPivLU<MatR> lu(a);
  VecR x = lu.solve(b);
  if (a * x != b) return std::nullopt;
  return x;
}

inline bool in_column_span(const MatR& a, const VecR& b) {
  return solve_exact(a, b).has_value();
}

inline MatR columns(const std::vector<VecR>& cols, Eigen::Index rows) {
  MatR m(rows, static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = cols[static_cast<std::size_t>(j)];
  return m;
}

}  // namespace lieb

#endif  // LIEB_LINALG_HPP
