#include "lieb/tables.hpp"

namespace lieb {

namespace {

std::string triple_name(const std::vector<std::string>& names, std::size_t i, std::size_t j,
                        std::size_t k) {
  return "(" + names[i] + "," + names[j] + "," + names[k] + ")";
}

}  // namespace

LeibnizTable::LeibnizTable(std::vector<std::string> names, std::vector<std::vector<VecR>> c)
    : names_(std::move(names)), c_(std::move(c)) {
  const std::size_t n = names_.size();
  if (n == 0) throw dimension_mismatch("empty basis");
  if (c_.size() != n) throw dimension_mismatch("structure constant rows");
  for (auto& row : c_) {
    if (row.size() != n) throw dimension_mismatch("structure constant columns");
    for (auto& v : row)
      if (v.size() != static_cast<Eigen::Index>(n)) throw dimension_mismatch("product vector size");
  }
}

LeibnizTable LeibnizTable::zero(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<std::vector<VecR>> c(n, std::vector<VecR>(n, VecR::Zero(static_cast<Eigen::Index>(n))));
  return LeibnizTable(std::move(names), std::move(c));
}

VecR LeibnizTable::product(const VecR& a, const VecR& b) const {
  const auto n = static_cast<Eigen::Index>(dim());
  if (a.size() != n || b.size() != n) throw dimension_mismatch("vector size");
  VecR out = VecR::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) == 0) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (b(j) == 0) continue;
      out += a(i) * b(j) * product(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return out;
}

void LeibnizTable::set_product(std::size_t i, std::size_t j, VecR v) {
  if (v.size() != static_cast<Eigen::Index>(dim())) throw dimension_mismatch("product vector size");
  c_.at(i).at(j) = std::move(v);
}

bool check_leibniz(const LeibnizTable& t, std::string* witness) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        VecR lhs = t.product(t.product(i, j), unit_vector(t, k));
        VecR rhs = t.product(t.product(i, k), unit_vector(t, j)) +
                   t.product(unit_vector(t, i), t.product(j, k));
        if (lhs != rhs) {
          if (witness) *witness = triple_name(t.names(), i, j, k);
          return false;
        }
      }
  return true;
}

bool check_antisymmetric(const LeibnizTable& t, std::string* witness) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t.product(i, j) != VecR(-t.product(j, i))) {
        if (witness) *witness = "(" + t.names()[i] + "," + t.names()[j] + ")";
        return false;
      }
  return true;
}

bool check_lie(const LeibnizTable& t, std::string* witness) {
  return check_antisymmetric(t, witness) && check_leibniz(t, witness);
}

bool check_jacobi(const LeibnizTable& t, std::string* witness) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        VecR s = t.product(t.product(i, j), unit_vector(t, k)) +
                 t.product(t.product(j, k), unit_vector(t, i)) +
                 t.product(t.product(k, i), unit_vector(t, j));
        if (s != VecR::Zero(static_cast<Eigen::Index>(n))) {
          if (witness) *witness = triple_name(t.names(), i, j, k);
          return false;
        }
      }
  return true;
}

bool check_subalgebra(const LeibnizTable& t, const SubalgebraSpec& a, std::string* witness) {
  const auto n = static_cast<Eigen::Index>(t.dim());
  if (a.generators.empty()) throw domain_error("subalgebra needs at least one generator");
  for (const VecR& g : a.generators)
    if (g.size() != n) throw dimension_mismatch("generator size");
  MatR gen = columns(a.generators, n);
  if (rank_of(gen) != static_cast<Eigen::Index>(a.generators.size()))
    throw domain_error("subalgebra generators are linearly dependent");
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    for (std::size_t j = 0; j < a.generators.size(); ++j) {
      VecR p = t.product(a.generators[i], a.generators[j]);
      if (!in_column_span(gen, p)) {
        if (witness)
          *witness = "product of generators " + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + " leaves the span";
        return false;
      }
    }
  return true;
}

std::optional<VecR> subalgebra_coordinates(const SubalgebraSpec& a, const VecR& v, Eigen::Index dim) {
  return solve_exact(columns(a.generators, dim), v);
}

VecR apply_map(const LeibnizTable& t, const SubalgebraSpec& a, const DerivationSpec& d, const VecR& v) {
  auto coords = subalgebra_coordinates(a, v, static_cast<Eigen::Index>(t.dim()));
  if (!coords) throw domain_error("vector outside the subalgebra span");
  VecR out = VecR::Zero(static_cast<Eigen::Index>(t.dim()));
  for (Eigen::Index i = 0; i < coords->size(); ++i)
    out += (*coords)(i)*d.values.at(static_cast<std::size_t>(i));
  return out;
}

bool check_derivation(const LeibnizTable& t, const SubalgebraSpec& a, const DerivationSpec& d,
                      std::string* witness) {
  if (d.values.size() != a.generators.size())
    throw dimension_mismatch("one value per subalgebra generator required");
  const auto n = static_cast<Eigen::Index>(t.dim());
  for (const VecR& v : d.values)
    if (v.size() != n) throw dimension_mismatch("derivation value size");
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    for (std::size_t j = 0; j < a.generators.size(); ++j) {
      const VecR& x = a.generators[i];
      const VecR& y = a.generators[j];
      VecR lhs = apply_map(t, a, d, t.product(x, y));
      VecR rhs = d.kind == DerivationSpec::Kind::derivation
                     ? VecR(t.product(d.values[i], y) + t.product(x, d.values[j]))
                     : VecR(t.product(d.values[i], y) - t.product(d.values[j], x));
      if (lhs != rhs) {
        if (witness)
          *witness = "generators " + std::to_string(i + 1) + "," + std::to_string(j + 1);
        return false;
      }
    }
  return true;
}

bool check_dilie_identities(const DiLieTable& t, std::string* witness) {
  const std::size_t n = t.dim();
  const auto nn = static_cast<Eigen::Index>(n);
  auto prod = [&](const std::vector<std::vector<VecR>>& c, const VecR& a, const VecR& b) {
    VecR out = VecR::Zero(nn);
    for (Eigen::Index i = 0; i < nn; ++i) {
      if (a(i) == 0) continue;
      for (Eigen::Index j = 0; j < nn; ++j) {
        if (b(j) == 0) continue;
        out += a(i) * b(j) * c.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
      }
    }
    return out;
  };
  auto e = [&](std::size_t i) {
    VecR v = VecR::Zero(nn);
    v(static_cast<Eigen::Index>(i)) = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (VecR(t.vdash.at(i).at(j) + t.dashv.at(j).at(i)) != VecR::Zero(nn)) {
        if (witness) *witness = "(3) at (" + t.names[i] + "," + t.names[j] + ")";
        return false;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        VecR lhs = prod(t.dashv, t.dashv.at(i).at(j), e(k));
        VecR rhs = prod(t.dashv, e(i), prod(t.dashv, e(j), e(k))) +
                   prod(t.dashv, prod(t.dashv, e(i), e(k)), e(j));
        if (lhs != rhs) {
          if (witness) *witness = "(4) at " + triple_name(t.names, i, j, k);
          return false;
        }
      }
  return true;
}

}  // namespace lieb
