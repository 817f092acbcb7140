#include "lieb/replication.hpp"

#include <functional>

namespace lieb {

AlphabetPtr doubled_alphabet(const AlphabetPtr& base) {
  std::vector<Alphabet::Entry> entries;
  for (std::uint32_t i = 0; i < base->size(); ++i) {
    const auto& e = base->entry(Letter{i});
    if (e.dotted) throw domain_error("base alphabet already contains dotted letters");
    entries.push_back(e);
  }
  for (std::uint32_t i = 0; i < base->size(); ++i)
    entries.push_back({base->entry(Letter{i}).id, true});
  return Alphabet::make(std::move(entries));
}

Word phi(const Word& w) {
  const auto& a = w.alphabet();
  std::vector<Letter> ls;
  ls.reserve(w.degree());
  for (Letter l : w.letters()) {
    auto u = a->undotted_partner(l);
    if (!u) throw domain_error("no undotted partner for " + a->name(l));
    ls.push_back(*u);
  }
  return Word(a, std::move(ls));
}

Polynomial phi(const Polynomial& f) {
  Polynomial out(f.alphabet());
  for (const auto& [w, c] : f.terms()) out.add_term(phi(w), c);
  return out;
}

Polynomial di_bracket(DiOp op, const Polynomial& f, const Polynomial& g) {
  return op == DiOp::dashv ? bracket(f, phi(g)) : bracket(phi(f), g);
}

Polynomial di_concat(DiOp op, const Polynomial& f, const Polynomial& g) {
  return op == DiOp::dashv ? f * phi(g) : phi(f) * g;
}

struct DiExpr::Impl {
  bool leaf;
  std::string id;
  DiOp op = DiOp::dashv;
  std::shared_ptr<const Impl> left, right;
};

DiExpr DiExpr::leaf(std::string id) {
  DiExpr e;
  auto impl = std::make_shared<Impl>();
  impl->leaf = true;
  impl->id = std::move(id);
  e.impl_ = impl;
  return e;
}

DiExpr DiExpr::node(DiOp op, const DiExpr& left, const DiExpr& right) {
  DiExpr e;
  auto impl = std::make_shared<Impl>();
  impl->leaf = false;
  impl->op = op;
  impl->left = left.impl_;
  impl->right = right.impl_;
  e.impl_ = impl;
  return e;
}

bool DiExpr::is_leaf() const { return impl_->leaf; }
const std::string& DiExpr::id() const {
  if (!impl_->leaf) throw domain_error("id() on inner di-expression node");
  return impl_->id;
}
DiOp DiExpr::op() const {
  if (impl_->leaf) throw domain_error("op() on a di-expression leaf");
  return impl_->op;
}
DiExpr DiExpr::left() const {
  DiExpr e;
  e.impl_ = impl_->left;
  return e;
}
DiExpr DiExpr::right() const {
  DiExpr e;
  e.impl_ = impl_->right;
  return e;
}

std::string DiExpr::str() const {
  if (is_leaf()) return id();
  const char* o = op() == DiOp::dashv ? " -| " : " |- ";
  return "[" + left().str() + o + right().str() + "]";
}

namespace {

bool has_inner_node(const DiExpr& e) { return !e.is_leaf(); }

// Follows the dash orientation from the root to the unique sink; every factor
// hanging off that path must be a single generator, otherwise the monomial
// has no single selected variable.
LieTree translate_rec(const DiExpr& e, const AlphabetPtr& doubled, bool on_path) {
  if (e.is_leaf()) {
    auto entry = parse_letter_name(e.id());
    if (entry.dotted) throw malformed_relation("dotted generator in a di-expression: " + e.id());
    auto l = doubled->find(entry.id, on_path);
    if (!l) throw domain_error("generator not in alphabet: " + e.id());
    return LieTree::leaf(doubled, *l);
  }
  if (!on_path) throw malformed_relation("no unique sink of dashes in " + e.str());
  const DiExpr sink_side = e.op() == DiOp::dashv ? e.left() : e.right();
  const DiExpr other = e.op() == DiOp::dashv ? e.right() : e.left();
  if (has_inner_node(other))
    throw malformed_relation("no unique sink of dashes in " + e.str());
  LieTree sink_tree = translate_rec(sink_side, doubled, true);
  LieTree other_tree = translate_rec(other, doubled, false);
  return e.op() == DiOp::dashv ? LieTree::node(sink_tree, other_tree)
                               : LieTree::node(other_tree, sink_tree);
}

}  // namespace

Polynomial translate_monomial(const DiExpr& m, const AlphabetPtr& doubled) {
  return expand(translate_rec(m, doubled, true));
}

Polynomial translate_relation(const DiRelation& r, const AlphabetPtr& doubled) {
  Polynomial out(doubled);
  for (const auto& [c, m] : r.terms) out += c * translate_monomial(m, doubled);
  return out;
}

std::vector<Polynomial> replicate_system(const std::vector<Polynomial>& translated) {
  std::vector<Polynomial> out;
  for (const Polynomial& s : translated) {
    if (s.is_zero()) continue;
    if (!v_membership(s))
      throw domain_error("relation is not in V (some monomial has no dotted letter): " + s.str());
    out.push_back(s);
  }
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img = phi(out[i]);
    if (!img.is_zero()) out.push_back(std::move(img));
  }
  return out;
}

bool v_membership(const Polynomial& f) {
  const auto& a = f.alphabet();
  for (const auto& [w, c] : f.terms()) {
    bool dotted = false;
    for (Letter l : w.letters())
      if (a->dotted(l)) {
        dotted = true;
        break;
      }
    if (!dotted) return false;
  }
  return true;
}

std::vector<LieTree> dilie_basis(const AlphabetPtr& base, int max_degree) {
  if (max_degree < 1) throw domain_error("max_degree must be >= 1");
  AlphabetPtr dbl = doubled_alphabet(base);
  const std::uint32_t n = static_cast<std::uint32_t>(base->size());
  std::vector<LieTree> out;
  // Index tuples in descending-letter order, degree by degree.
  std::function<void(int, std::vector<std::uint32_t>&)> gen = [&](int deg,
                                                                  std::vector<std::uint32_t>& idx) {
    if (static_cast<int>(idx.size()) == deg) {
      LieTree t = LieTree::leaf(dbl, Letter{n + idx[0]});  // dotted head
      for (std::size_t k = 1; k < idx.size(); ++k)
        t = LieTree::node(t, LieTree::leaf(dbl, Letter{idx[k]}));
      out.push_back(t);
      return;
    }
    for (std::uint32_t i = n; i-- > 0;) {
      idx.push_back(i);
      gen(deg, idx);
      idx.pop_back();
    }
  };
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<std::uint32_t> idx;
    gen(d, idx);
  }
  return out;
}

bool is_averaging(const MatR& t_map, const LeibnizTable& table, std::string* witness) {
  const auto n = static_cast<Eigen::Index>(table.dim());
  if (t_map.rows() != n || t_map.cols() != n) throw dimension_mismatch("operator size");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      VecR a = VecR::Zero(n), b = VecR::Zero(n);
      a(i) = 1;
      b(j) = 1;
      VecR ta = t_map * a, tb = t_map * b;
      VecR lhs = table.product(ta, tb);
      VecR r1 = t_map * table.product(ta, b);
      VecR r2 = t_map * table.product(a, tb);
      if (lhs != r1 || lhs != r2) {
        if (witness) *witness = "(" + table.names()[static_cast<std::size_t>(i)] + "," +
                                table.names()[static_cast<std::size_t>(j)] + ")";
        return false;
      }
    }
  return true;
}

DiLieTable averaged_dialgebra(const LeibnizTable& table, const MatR& t_map) {
  std::string w;
  if (!is_averaging(t_map, table, &w))
    throw not_averaging("not an averaging operator; fails at " + w);
  const std::size_t n = table.dim();
  const auto nn = static_cast<Eigen::Index>(n);
  DiLieTable out;
  out.names = table.names();
  out.dashv.assign(n, std::vector<VecR>(n, VecR::Zero(nn)));
  out.vdash.assign(n, std::vector<VecR>(n, VecR::Zero(nn)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      VecR a = unit_vector(table, i), b = unit_vector(table, j);
      out.dashv[i][j] = table.product(a, VecR(t_map * b));
      out.vdash[i][j] = table.product(VecR(t_map * a), b);
    }
  return out;
}

}  // namespace lieb
